#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "absorb/polynomial.hpp"

namespace absorb::detail {

/// All monomials in `vars` variables of total degree <= max_deg, in
/// MonomialOrder. Dense polynomials are coefficient arrays over a basis.
class MonomialBasis {
 public:
  MonomialBasis(unsigned vars, unsigned max_deg);

  unsigned vars() const { return vars_; }
  unsigned max_degree() const { return max_deg_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& monomial(std::size_t i) const { return monomials_[i]; }
  unsigned degree(std::size_t i) const { return degrees_[i]; }
  std::optional<std::size_t> index_of(const Exponent& e) const;

 private:
  unsigned vars_;
  unsigned max_deg_;
  std::vector<Exponent> monomials_;
  std::vector<unsigned> degrees_;
  std::map<Exponent, std::size_t> index_;
};

/// Multiplies dense polynomials over `left` x `right` into `target`, which
/// must be large enough to hold every product monomial.
class DenseMultiplier {
 public:
  DenseMultiplier(const FiniteRing& ring, const MonomialBasis& left, const MonomialBasis& right,
                  const MonomialBasis& target);

  void mul(std::span<const Elem> f, std::span<const Elem> g, std::span<Elem> out) const;
  std::size_t target_size() const { return target_size_; }

 private:
  const FiniteRing& ring_;
  std::size_t left_size_;
  std::size_t right_size_;
  std::size_t target_size_;
  std::vector<std::uint32_t> map_;  // left x right -> target index
};

Polynomial to_polynomial(const FiniteRing& ring, const MonomialBasis& basis,
                         std::span<const Elem> coeffs);
/// Throws std::invalid_argument if `p` has a monomial outside the basis.
std::vector<Elem> to_dense(const Polynomial& p, const MonomialBasis& basis);

/// Coefficients of the polynomial with enumeration index `index`: digit i
/// (base `order`, least significant first) is the coefficient of monomial i.
void decode_index(std::uint64_t index, std::size_t order, std::span<Elem> out);

/// order^slots, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t order, std::size_t slots);

}  // namespace absorb::detail
