#pragma once

#include <cstdint>
#include <vector>

#include "absorb/ideal.hpp"

namespace absorb {

inline constexpr std::size_t kDefaultLatticeCap = 4096;

/// Result of all_ideals(): never silently truncated.
struct IdealList {
  std::vector<Ideal> ideals;  // canonical order; empty on overflow
  bool overflow = false;
  std::size_t cap = 0;
};

/// Complete ideal lattice of a ring, in canonical order (cardinality, then
/// lexicographic element set), with O(1) lookup tables for the operations
/// the search kernels need. Index 0 is (0) and the last index is R.
class IdealLattice {
 public:
  using Index = std::uint32_t;

  /// Principal-extension saturation from (0). Throws CapExceeded when more
  /// than `count_cap` ideals are found.
  static IdealLattice build(const FiniteRing& ring, std::size_t count_cap = kDefaultLatticeCap);

  const FiniteRing& ring() const { return ring_; }
  std::size_t size() const { return ideals_.size(); }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  const Ideal& ideal(Index i) const { return ideals_[i]; }

  Index zero_index() const { return 0; }
  Index unit_index() const { return static_cast<Index>(ideals_.size() - 1); }
  /// Throws std::invalid_argument if the ideal belongs to a different ring.
  Index index_of(const Ideal& ideal) const;

  Index principal(Elem x) const { return extend(0, x); }
  /// I + (x)
  Index extend(Index i, Elem x) const { return ext_[std::size_t{i} * order_ + x]; }
  Index sum(Index a, Index b) const { return sum_[std::size_t{a} * ideals_.size() + b]; }
  Index product(Index a, Index b) const { return prod_[std::size_t{a} * ideals_.size() + b]; }
  Index power(Index a, unsigned n) const;
  bool subset(Index a, Index b) const { return sum(a, b) == b; }
  bool contains(Index i, Elem x) const { return extend(i, x) == i; }

  /// Content ideal of a coefficient list: the fold of extend() from (0).
  template <typename Range>
  Index span_of(const Range& coeffs) const {
    Index cur = 0;
    for (Elem c : coeffs) cur = extend(cur, c);
    return cur;
  }

 private:
  IdealLattice(FiniteRing ring) : ring_(std::move(ring)) {}

  FiniteRing ring_;
  std::size_t order_ = 0;
  std::vector<Ideal> ideals_;
  std::vector<Index> ext_;   // size() x order
  std::vector<Index> sum_;   // size() x size()
  std::vector<Index> prod_;  // size() x size()
};

/// The complete list of ideals of `ring`, or an overflow marker.
IdealList all_ideals(const FiniteRing& ring, std::size_t count_cap = kDefaultLatticeCap);

}  // namespace absorb
