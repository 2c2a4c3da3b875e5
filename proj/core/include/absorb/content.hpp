#pragma once

#include <optional>
#include <span>
#include <vector>

#include "absorb/ideal.hpp"
#include "absorb/polynomial.hpp"

namespace absorb {

inline constexpr unsigned kDefaultDmCap = 16;

/// Ideal of R generated by the coefficients of f; content(0) = (0).
Ideal content(const Polynomial& f);

/// c(fg) is contained in c(f)c(g). Holds for every pair; exposed as a check.
bool content_subset_property(const Polynomial& f, const Polynomial& g);

/// Least n >= 1 with c(f)^n c(g) = c(f)^(n-1) c(fg); nullopt when no n up
/// to `cap` works.
std::optional<unsigned> dm_exponent(const Polynomial& f, const Polynomial& g,
                                    unsigned cap = kDefaultDmCap);

/// Principal factorization g = g' * b with c(g') = R over a Bezout ring.
///
/// `support` lists g's monomials in descending monomial order (highest
/// term first) and r, s are aligned with it: b_i = r_i b, b = sum s_i b_i,
/// d = sum s_i r_i, and g' = sum r_i X^{g_i} + (1 - d) X^{fresh}.
struct BezoutFactorization {
  Elem b = 0;
  std::vector<Exponent> support;
  std::vector<Elem> r;
  std::vector<Elem> s;
  Elem d = 0;
  Exponent fresh_exponent;
  Polynomial g_prime;
};

/// Requires a zmod ring or a product of zmods, and g != 0. Throws
/// std::invalid_argument otherwise; a failed self-check throws
/// VerificationFailure.
BezoutFactorization bezout_factor(const Polynomial& g);

/// Least exponent vector (in MonomialOrder) outside the support of g.
Exponent fresh_exponent(const Polynomial& g);

/// Record of the content chain for a product f_1 ... f_m lying in I[X].
///
/// Step i peels f_i off the tail t_i = f_{i+1} ... f_m with the
/// Dedekind-Mertens exponent l_i of (f_i, t_i). The accumulated ideal
/// c(f_1)^{l_1} ... c(f_i)^{l_i} c(t_i) is checked to lie in I after each
/// step. With l = max l_i, (c(f_1) ... c(f_m))^l lies in I; when I is
/// radical the product c(f_1) ... c(f_m) itself does.
struct DMCertificate {
  std::vector<unsigned> exponents;    // l_1 .. l_{m-1}
  std::vector<bool> chain_contained;  // accumulated ideal inside I after step i
  unsigned max_exponent = 0;
  bool power_contained = false;       // (c(f_1)...c(f_m))^l inside I
  bool radical = false;
  bool final_containment = false;     // c(f_1)...c(f_m) inside I, verified directly
};

/// Throws std::invalid_argument if fewer than two polynomials are given or
/// their product is not in I[X]; CapExceeded if a DM exponent exceeds `cap`.
DMCertificate certify_content_product(const Ideal& ideal, std::span<const Polynomial> fs,
                                      unsigned cap = kDefaultDmCap);

/// True when every coefficient of f lies in I.
bool in_extended_ideal(const Polynomial& f, const Ideal& ideal);

}  // namespace absorb
