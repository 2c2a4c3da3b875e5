#include "absorb/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "absorb/error.hpp"

namespace absorb {

IdealLattice IdealLattice::build(const FiniteRing& ring, std::size_t count_cap) {
  const std::size_t n = ring.order();
  std::vector<ElementSet> principals;
  principals.reserve(n);
  for (Elem x = 0; x < n; ++x) principals.push_back(principal_set(ring, x));

  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, Index, ElementSetHash> lookup;
  std::vector<Index> ext;  // discovery order, rows appended as ideals are processed

  auto intern = [&](ElementSet s) -> Index {
    auto it = lookup.find(s);
    if (it != lookup.end()) return it->second;
    if (found.size() >= count_cap)
      throw CapExceeded("ideal lattice of " + ring.descriptor() + " has more than " +
                        std::to_string(count_cap) + " ideals");
    const auto id = static_cast<Index>(found.size());
    lookup.emplace(s, id);
    found.push_back(std::move(s));
    return id;
  };

  ElementSet zero(n);
  zero.insert(ring.zero());
  intern(std::move(zero));
  for (std::size_t id = 0; id < found.size(); ++id) {
    ext.resize((id + 1) * n);
    for (Elem x = 0; x < n; ++x) {
      if (found[id].contains(x)) {
        ext[id * n + x] = static_cast<Index>(id);
        continue;
      }
      ext[id * n + x] = intern(sum_set(ring, found[id], principals[x]));
    }
  }

  // Renumber into canonical order.
  const std::size_t count = found.size();
  std::vector<std::vector<Elem>> elems(count);
  for (std::size_t i = 0; i < count; ++i) elems[i] = found[i].to_vector();
  std::vector<Index> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (elems[a].size() != elems[b].size()) return elems[a].size() < elems[b].size();
    return elems[a] < elems[b];
  });
  std::vector<Index> rank(count);
  for (std::size_t i = 0; i < count; ++i) rank[order[i]] = static_cast<Index>(i);

  IdealLattice lat(ring);
  lat.order_ = n;
  lat.ext_.resize(count * n);
  for (std::size_t old = 0; old < count; ++old)
    for (Elem x = 0; x < n; ++x) lat.ext_[rank[old] * n + x] = rank[ext[old * n + x]];

  // Greedy canonical generators via the extension table.
  std::vector<std::vector<Elem>> gens(count);
  for (std::size_t i = 0; i < count; ++i) {
    Index cur = 0;
    const auto target = static_cast<Index>(i);
    for (Elem x : elems[order[i]]) {
      if (cur == target) break;
      const Index next = lat.ext_[cur * n + x];
      if (next != cur) {
        gens[i].push_back(x);
        cur = next;
      }
    }
  }
  lat.ideals_.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    lat.ideals_.emplace_back(ring, std::move(found[order[i]]), gens[i]);

  lat.sum_.resize(count * count);
  lat.prod_.resize(count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      Index s = static_cast<Index>(a);
      for (Elem g : gens[b]) s = lat.ext_[s * n + g];
      lat.sum_[a * count + b] = s;
      Index p = 0;
      for (Elem g : gens[a])
        for (Elem h : gens[b]) p = lat.ext_[p * n + ring.mul(g, h)];
      lat.prod_[a * count + b] = p;
    }
  return lat;
}

IdealLattice::Index IdealLattice::index_of(const Ideal& ideal) const {
  if (!(ideal.ring() == ring_))
    throw std::invalid_argument("ideal " + ideal.display() + " is not an ideal of " +
                                ring_.descriptor());
  Index cur = 0;
  for (Elem g : ideal.generators()) cur = extend(cur, g);
  return cur;
}

IdealLattice::Index IdealLattice::power(Index a, unsigned n) const {
  Index out = unit_index();
  for (unsigned i = 0; i < n; ++i) out = product(out, a);
  return out;
}

IdealList all_ideals(const FiniteRing& ring, std::size_t count_cap) {
  IdealList out;
  out.cap = count_cap;
  try {
    out.ideals = IdealLattice::build(ring, count_cap).ideals();
  } catch (const CapExceeded&) {
    out.overflow = true;
  }
  return out;
}

}  // namespace absorb
