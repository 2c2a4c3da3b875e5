#include "absorb/absorbing.hpp"

#include <stdexcept>

#include "absorb/detail/multiset_scan.hpp"

namespace absorb {

namespace {

std::optional<std::vector<std::uint32_t>> scan(const std::vector<std::uint32_t>& cands, unsigned n,
                                               std::uint32_t one, auto mul, auto in_ideal,
                                               const ScanOptions& opts) {
  auto hit = detail::scan_multisets(cands, n, one, mul, in_ideal, opts.prune, opts.jobs);
  if (!hit) return std::nullopt;
  std::vector<std::uint32_t> out;
  for (auto pos : *hit) out.push_back(cands[pos]);
  return out;
}

void require_proper(const Ideal& ideal, unsigned n) {
  if (n == 0) throw std::invalid_argument("n-absorbing needs n >= 1");
  if (!ideal.is_proper())
    throw std::invalid_argument("absorbing tests need a proper ideal, got R = " +
                                ideal.display());
}

}  // namespace

AbsorbingVerdict is_n_absorbing(const Ideal& ideal, unsigned n, const ScanOptions& opts) {
  require_proper(ideal, n);
  const auto& ring = ideal.ring();
  std::vector<std::uint32_t> cands;
  for (Elem x = 0; x < ring.order(); ++x) {
    // A member of I can stay in the subproduct; a unit can be cancelled
    // from the full product. Neither appears in a violation.
    if (opts.prune && (ideal.contains(x) || ring.is_unit(x))) continue;
    cands.push_back(x);
  }
  auto mul = [&ring](std::uint32_t a, std::uint32_t b) { return ring.mul(a, b); };
  auto in = [&ideal](std::uint32_t x) { return ideal.contains(x); };
  auto hit = scan(cands, n, ring.one(), mul, in, opts);
  if (!hit) return {};
  return {false, std::move(*hit)};
}

ElementOmega omega(const Ideal& ideal, unsigned cap, const ScanOptions& opts) {
  if (cap == 0) throw std::invalid_argument("omega cap must be >= 1");
  if (!ideal.is_proper()) return {0U, cap, {}, true};
  std::vector<Elem> previous;
  for (unsigned n = 1; n <= cap; ++n) {
    auto v = is_n_absorbing(ideal, n, opts);
    if (v.absorbing) return {n, cap, std::move(previous), true};
    previous = std::move(v.violation);
  }
  return ElementOmega::exceeds(cap, std::move(previous));
}

StrongVerdict is_strongly_n_absorbing(const Ideal& ideal, unsigned n, const IdealLattice& lat,
                                      const ScanOptions& opts) {
  require_proper(ideal, n);
  const auto target = lat.index_of(ideal);
  std::vector<std::uint32_t> cands;
  for (IdealLattice::Index i = 0; i < lat.size(); ++i) {
    if (opts.prune && (lat.subset(i, target) || i == lat.unit_index())) continue;
    cands.push_back(i);
  }
  auto mul = [&lat](std::uint32_t a, std::uint32_t b) { return lat.product(a, b); };
  auto in = [&lat, target](std::uint32_t i) { return lat.subset(i, target); };
  auto hit = scan(cands, n, lat.unit_index(), mul, in, opts);
  if (!hit) return {};
  StrongVerdict out{false, {}};
  for (auto i : *hit) out.violation.push_back(lat.ideal(i));
  return out;
}

StrongVerdict is_strongly_n_absorbing(const Ideal& ideal, unsigned n, std::size_t lattice_cap) {
  return is_strongly_n_absorbing(ideal, n, IdealLattice::build(ideal.ring(), lattice_cap));
}

IdealOmega strong_omega(const Ideal& ideal, unsigned cap, const IdealLattice& lat,
                        const ScanOptions& opts) {
  if (cap == 0) throw std::invalid_argument("strong omega cap must be >= 1");
  if (!ideal.is_proper()) return {0U, cap, {}, true};
  std::vector<Ideal> previous;
  for (unsigned n = 1; n <= cap; ++n) {
    auto v = is_strongly_n_absorbing(ideal, n, lat, opts);
    if (v.absorbing) return {n, cap, std::move(previous), true};
    previous = std::move(v.violation);
  }
  return IdealOmega::exceeds(cap, std::move(previous));
}

IdealOmega strong_omega(const Ideal& ideal, unsigned cap, std::size_t lattice_cap) {
  return strong_omega(ideal, cap, IdealLattice::build(ideal.ring(), lattice_cap));
}

Agreement compare_omegas(const ElementOmega& plain, const IdealOmega& strong) {
  if (plain.exact() && strong.exact())
    return *plain.value == *strong.value ? Agreement::Equal : Agreement::Differ;
  // strong_omega >= omega always, so an exact omega below a cap-exceeding
  // strong_omega is a real difference.
  if (plain.exact() && !strong.exact()) return Agreement::Differ;
  if (!plain.exact() && strong.exact()) return Agreement::Differ;
  return Agreement::Undetermined;
}

std::vector<Conjecture1Row> conjecture1_check(const IdealLattice& lat, unsigned cap,
                                              const ScanOptions& opts) {
  std::vector<Conjecture1Row> rows;
  for (const auto& ideal : lat.ideals()) {
    if (!ideal.is_proper()) continue;
    auto w = omega(ideal, cap, opts);
    auto s = strong_omega(ideal, cap, lat, opts);
    const auto agreement = compare_omegas(w, s);
    rows.push_back({ideal, std::move(w), std::move(s), agreement});
  }
  return rows;
}

std::vector<Conjecture1Row> conjecture1_check(const FiniteRing& ring, unsigned cap,
                                              const ScanOptions& opts, std::size_t lattice_cap) {
  return conjecture1_check(IdealLattice::build(ring, lattice_cap), cap, opts);
}

}  // namespace absorb
