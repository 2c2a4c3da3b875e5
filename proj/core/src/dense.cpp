#include "absorb/detail/dense.hpp"

#include <stdexcept>

namespace absorb::detail {

MonomialBasis::MonomialBasis(unsigned vars, unsigned max_deg) : vars_(vars), max_deg_(max_deg) {
  if (vars == 0) throw std::invalid_argument("monomial basis needs vars >= 1");
  Exponent cur(vars, 0);
  for (unsigned deg = 0; deg <= max_deg; ++deg) {
    auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
      if (var + 1 == vars) {
        cur[var] = left;
        monomials_.push_back(cur);
        degrees_.push_back(deg);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        cur[var] = e;
        self(self, var + 1, left - e);
      }
    };
    rec(rec, 0, deg);
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DenseMultiplier::DenseMultiplier(const FiniteRing& ring, const MonomialBasis& left,
                                 const MonomialBasis& right, const MonomialBasis& target)
    : ring_(ring), left_size_(left.size()), right_size_(right.size()), target_size_(target.size()) {
  map_.resize(left_size_ * right_size_);
  Exponent e(left.vars());
  for (std::size_t i = 0; i < left_size_; ++i)
    for (std::size_t j = 0; j < right_size_; ++j) {
      for (unsigned v = 0; v < left.vars(); ++v) e[v] = left.monomial(i)[v] + right.monomial(j)[v];
      auto k = target.index_of(e);
      if (!k) throw std::invalid_argument("target basis too small for product");
      map_[i * right_size_ + j] = static_cast<std::uint32_t>(*k);
    }
}

void DenseMultiplier::mul(std::span<const Elem> f, std::span<const Elem> g,
                          std::span<Elem> out) const {
  const Elem zero = ring_.zero();
  for (std::size_t k = 0; k < target_size_; ++k) out[k] = zero;
  for (std::size_t i = 0; i < left_size_; ++i) {
    if (f[i] == zero) continue;
    const std::uint32_t* row = &map_[i * right_size_];
    for (std::size_t j = 0; j < right_size_; ++j) {
      if (g[j] == zero) continue;
      out[row[j]] = ring_.add(out[row[j]], ring_.mul(f[i], g[j]));
    }
  }
}

Polynomial to_polynomial(const FiniteRing& ring, const MonomialBasis& basis,
                         std::span<const Elem> coeffs) {
  Polynomial p(ring, basis.vars());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != ring.zero()) p.set(basis.monomial(i), coeffs[i]);
  return p;
}

std::vector<Elem> to_dense(const Polynomial& p, const MonomialBasis& basis) {
  std::vector<Elem> out(basis.size(), p.ring().zero());
  for (const auto& [e, c] : p.terms()) {
    auto i = basis.index_of(e);
    if (!i) throw std::invalid_argument("monomial outside basis");
    out[*i] = c;
  }
  return out;
}

void decode_index(std::uint64_t index, std::size_t order, std::span<Elem> out) {
  for (auto& c : out) {
    c = static_cast<Elem>(index % order);
    index /= order;
  }
}

std::optional<std::uint64_t> checked_power(std::uint64_t order, std::size_t slots) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    if (v > UINT64_MAX / order) return std::nullopt;
    v *= order;
  }
  return v;
}

}  // namespace absorb::detail
