#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absorb/ring.hpp"

namespace absorb {

/// Exponent vector in N^k.
using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);

/// Graded order: total degree ascending, then lexicographically descending
/// so that x comes before y within a degree (1, x, y, x^2, xy, y^2, ...).
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial over a FiniteRing in `vars` variables (the semigroup
/// ring R[N^k]). Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Elem, MonomialOrder>;

  Polynomial(FiniteRing ring, unsigned vars);

  static Polynomial constant(const FiniteRing& ring, unsigned vars, Elem c);
  static Polynomial term(const FiniteRing& ring, Exponent exponent, Elem c);
  /// Univariate polynomial from coefficients, constant term first.
  static Polynomial from_coefficients(const FiniteRing& ring, const std::vector<Elem>& coeffs);

  const FiniteRing& ring() const { return ring_; }
  unsigned vars() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Elem coefficient(const Exponent& e) const;
  /// Sets a coefficient, erasing the term when c is zero.
  void set(const Exponent& e, Elem c);
  /// Coefficients in term order.
  std::vector<Elem> coefficients() const;

  /// Literal syntax: `2+4x`, `1+3x^2*y`. Coefficients are ring element
  /// indices; a coefficient equal to the ring's one is omitted in front of
  /// a monomial. Zero prints as `0`.
  std::string display() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  FiniteRing ring_;
  unsigned vars_;
  Terms terms_;
};

/// Throws std::invalid_argument on ring or variable-count mismatch.
Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_scale(const Polynomial& f, Elem c);

/// Parses the literal syntax produced by display(). Variables are x, y, z,
/// w (or x1, x2, ... when vars > 4).
Polynomial parse_polynomial(const FiniteRing& ring, unsigned vars, std::string_view text);

std::string monomial_display(const Exponent& e);

}  // namespace absorb
