#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "absorb/detail/parallel.hpp"

namespace absorb::detail {

/// Depth-first walk over non-decreasing (n+1)-tuples of candidate indices,
/// looking for a tuple whose full product lies in the ideal while no
/// n-subproduct does. The first slot is fixed per partition, and tuples are
/// visited in lexicographic order, so the first hit is the least violation
/// of its partition.
template <typename V, typename Mul, typename InIdeal>
class MultisetScan {
 public:
  MultisetScan(const std::vector<V>& cands, unsigned n, V one, Mul mul, InIdeal in_ideal,
               bool prune)
      : cands_(cands), size_(n + 1), mul_(mul), in_(in_ideal), prune_(prune), pick_(size_),
        prefix_(size_ + 1, one), suffix_(size_ + 1, one), one_(std::move(one)) {}

  std::optional<std::vector<std::size_t>> run(std::size_t first) {
    prefix_[0] = one_;
    if (descend(0, first)) return pick_;
    return std::nullopt;
  }

  /// Checks one explicit tuple of candidate positions.
  bool check(const std::vector<std::size_t>& picks) {
    pick_ = picks;
    prefix_[0] = one_;
    for (std::size_t i = 0; i < size_; ++i) prefix_[i + 1] = mul_(prefix_[i], cands_[pick_[i]]);
    return is_violation();
  }

 private:
  bool descend(std::size_t depth, std::size_t from) {
    const std::size_t to = depth == 0 ? from + 1 : cands_.size();
    for (std::size_t c = from; c < to; ++c) {
      pick_[depth] = c;
      prefix_[depth + 1] = mul_(prefix_[depth], cands_[c]);
      if (depth + 1 == size_) {
        if (is_violation()) return true;
        continue;
      }
      // A prefix of at most n factors inside the ideal extends to an
      // n-subproduct inside it, so no completion can be a violation.
      if (prune_ && in_(prefix_[depth + 1])) continue;
      if (descend(depth + 1, c)) return true;
    }
    return false;
  }

  bool is_violation() {
    if (!in_(prefix_[size_])) return false;
    suffix_[size_] = one_;
    for (std::size_t i = size_; i-- > 0;) suffix_[i] = mul_(cands_[pick_[i]], suffix_[i + 1]);
    for (std::size_t i = 0; i < size_; ++i)
      if (in_(mul_(prefix_[i], suffix_[i + 1]))) return false;
    return true;
  }

  const std::vector<V>& cands_;
  std::size_t size_;
  Mul mul_;
  InIdeal in_;
  bool prune_;
  std::vector<std::size_t> pick_;
  std::vector<V> prefix_;
  std::vector<V> suffix_;
  V one_;
};

/// Exhaustive scan partitioned by first element; returns the
/// lexicographically least violating tuple of candidate positions.
template <typename V, typename Mul, typename InIdeal>
std::optional<std::vector<std::size_t>> scan_multisets(const std::vector<V>& cands, unsigned n,
                                                       const V& one, Mul mul, InIdeal in_ideal,
                                                       bool prune, unsigned jobs) {
  auto hit = first_hit<std::vector<std::size_t>>(cands.size(), jobs, [&](std::size_t first) {
    MultisetScan<V, Mul, InIdeal> s(cands, n, one, mul, in_ideal, prune);
    return s.run(first);
  });
  if (!hit) return std::nullopt;
  return std::move(hit->second);
}

}  // namespace absorb::detail
