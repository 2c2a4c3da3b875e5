#include "absorb/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "absorb/detail/dense.hpp"
#include "absorb/detail/multiset_scan.hpp"
#include "absorb/detail/parallel.hpp"
#include "absorb/detail/random.hpp"
#include "absorb/error.hpp"

namespace absorb {

std::string SearchMode::label() const {
  return exhaustive ? "exhaustive" : "sampled:" + std::to_string(samples);
}

namespace {

using detail::DenseMultiplier;
using detail::MonomialBasis;

// Polynomials of degree <= d as dense coefficient vectors, with a
// multiplier into degree <= 2d.
struct PolySpace {
  PolySpace(const FiniteRing& ring, const SearchBounds& b)
      : ring(ring),
        basis(b.vars, b.max_deg),
        wide(b.vars, 2 * b.max_deg),
        mul(ring, basis, basis, wide),
        order(ring.order()),
        slots(basis.size()),
        count(detail::checked_power(order, slots)) {}

  Polynomial poly(std::span<const Elem> c) const { return detail::to_polynomial(ring, basis, c); }

  const FiniteRing& ring;
  MonomialBasis basis;
  MonomialBasis wide;
  DenseMultiplier mul;
  std::uint64_t order;
  std::size_t slots;
  std::optional<std::uint64_t> count;  // order^slots
};

// Number of pairs an exhaustive scan visits, or nullopt on overflow.
std::optional<std::uint64_t> pair_count(const std::optional<std::uint64_t>& polys, bool symmetric) {
  if (!polys || *polys > (1ULL << 31)) return std::nullopt;
  const std::uint64_t p = *polys;
  return symmetric ? p * (p + 1) / 2 : p * p;
}

std::string downgrade_notice(const std::optional<std::uint64_t>& space, const char* what,
                             const SearchBounds& b) {
  return "search space of " + (space ? std::to_string(*space) : std::string("more than 2^64")) +
         " " + what + " exceeds budget " + std::to_string(b.budget) + "; sampling " +
         std::to_string(b.samples) + " with seed " + std::to_string(b.seed);
}

std::size_t block_count(std::uint64_t samples) {
  return static_cast<std::size_t>((samples + detail::kSampleBlock - 1) / detail::kSampleBlock);
}

// Draws one uniform polynomial into `out`.
void draw_poly(std::mt19937_64& rng, std::uint64_t order, std::span<Elem> out) {
  for (auto& c : out) c = static_cast<Elem>(detail::below(rng, order));
}

// Visits pairs until `check` fires. Exhaustive pairs run over enumeration
// indices (i, j) with j >= i for symmetric checks; sampled pairs come from
// fixed-size seeded blocks. Either way the reported pair is the least one.
template <typename Check>
PairSearchResult pair_search(const IdealLattice& lat, const SearchBounds& b, bool symmetric,
                             Check check) {
  const PolySpace sp(lat.ring(), b);
  PairSearchResult out;
  const auto space = pair_count(sp.count, symmetric);
  const std::size_t slots = sp.slots;

  if (space && *space <= b.budget) {
    const auto polys = static_cast<std::size_t>(*sp.count);
    std::vector<Elem> coeffs(polys * slots);
    std::vector<IdealLattice::Index> contents(polys);
    for (std::size_t i = 0; i < polys; ++i) {
      std::span<Elem> c(&coeffs[i * slots], slots);
      detail::decode_index(i, sp.order, c);
      contents[i] = lat.span_of(c);
    }
    auto hit = detail::first_hit<std::size_t>(polys, b.jobs, [&](std::size_t i) {
      std::vector<Elem> scratch(sp.wide.size());
      std::span<const Elem> f(&coeffs[i * slots], slots);
      for (std::size_t j = symmetric ? i : 0; j < polys; ++j) {
        std::span<const Elem> g(&coeffs[j * slots], slots);
        if (check(sp, f, contents[i], g, contents[j], scratch)) return std::optional<std::size_t>(j);
      }
      return std::optional<std::size_t>();
    });
    out.mode = {true, 0};
    out.space = *space;
    if (hit) {
      const std::size_t i = hit->first, j = hit->second;
      out.witness.emplace(sp.poly({&coeffs[i * slots], slots}), sp.poly({&coeffs[j * slots], slots}));
    }
    return out;
  }

  out.mode = {false, b.samples};
  out.space = b.samples;
  out.notice = downgrade_notice(space, "pairs", b);
  using Pair = std::pair<std::vector<Elem>, std::vector<Elem>>;
  auto hit = detail::first_hit<Pair>(block_count(b.samples), b.jobs, [&](std::size_t block) {
    auto rng = detail::stream_rng(b.seed, block);
    std::vector<Elem> f(slots), g(slots), scratch(sp.wide.size());
    const std::uint64_t begin = block * detail::kSampleBlock;
    const std::uint64_t end = std::min<std::uint64_t>(b.samples, begin + detail::kSampleBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      draw_poly(rng, sp.order, f);
      draw_poly(rng, sp.order, g);
      if (check(sp, f, lat.span_of(f), g, lat.span_of(g), scratch))
        return std::optional<Pair>(Pair{f, g});
    }
    return std::optional<Pair>();
  });
  if (hit) out.witness.emplace(sp.poly(hit->second.first), sp.poly(hit->second.second));
  return out;
}

using Idx = IdealLattice::Index;

}  // namespace

PairSearchResult gaussian_search(const IdealLattice& lat, const SearchBounds& b) {
  return pair_search(lat, b, true,
                     [&lat](const PolySpace& sp, std::span<const Elem> f, Idx cf,
                            std::span<const Elem> g, Idx cg, std::vector<Elem>& prod) {
                       sp.mul.mul(f, g, prod);
                       return lat.span_of(prod) != lat.product(cf, cg);
                     });
}

PairSearchResult gaussian_search(const FiniteRing& ring, const SearchBounds& b) {
  return gaussian_search(IdealLattice::build(ring, b.lattice_cap), b);
}

PairSearchResult armendariz_search(const IdealLattice& lat, const SearchBounds& b) {
  return pair_search(lat, b, true,
                     [&lat](const PolySpace& sp, std::span<const Elem> f, Idx cf,
                            std::span<const Elem> g, Idx cg, std::vector<Elem>& prod) {
                       if (lat.product(cf, cg) == lat.zero_index()) return false;
                       sp.mul.mul(f, g, prod);
                       const Elem zero = sp.ring.zero();
                       return std::all_of(prod.begin(), prod.end(),
                                          [zero](Elem c) { return c == zero; });
                     });
}

PairSearchResult armendariz_search(const FiniteRing& ring, const SearchBounds& b) {
  return armendariz_search(IdealLattice::build(ring, b.lattice_cap), b);
}

PairSearchResult content_subset_search(const IdealLattice& lat, const SearchBounds& b) {
  return pair_search(lat, b, true,
                     [&lat](const PolySpace& sp, std::span<const Elem> f, Idx cf,
                            std::span<const Elem> g, Idx cg, std::vector<Elem>& prod) {
                       sp.mul.mul(f, g, prod);
                       return !lat.subset(lat.span_of(prod), lat.product(cf, cg));
                     });
}

namespace {

struct DmPart {
  std::map<unsigned, std::uint64_t> histogram;
  std::uint64_t cap_exceeded = 0;
  unsigned max_exponent = 0;
  std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> max_pair;
  std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> violation;
};

std::optional<unsigned> lattice_dm(const IdealLattice& lat, Idx cf, Idx cg, Idx cfg, unsigned cap) {
  Idx lower = lat.unit_index();
  for (unsigned n = 1; n <= cap; ++n) {
    const Idx upper = lat.product(lower, cf);
    if (lat.product(upper, cg) == lat.product(lower, cfg)) return n;
    lower = upper;
  }
  return std::nullopt;
}

// Degree of a dense polynomial; the zero polynomial counts as degree 0 for
// the bound, where it always has exponent 1.
unsigned dense_degree(const PolySpace& sp, std::span<const Elem> g) {
  for (std::size_t i = g.size(); i-- > 0;)
    if (g[i] != sp.ring.zero()) return sp.basis.degree(i);
  return 0;
}

}  // namespace

DmSurvey dm_survey(const IdealLattice& lat, const SearchBounds& b, unsigned cap) {
  if (cap == 0) throw std::invalid_argument("dm cap must be >= 1");
  const PolySpace sp(lat.ring(), b);
  const std::size_t slots = sp.slots;
  const bool univariate = b.vars == 1;
  DmSurvey out;
  out.bound_checked = univariate;

  auto visit = [&](DmPart& part, std::span<const Elem> f, Idx cf, std::span<const Elem> g, Idx cg,
                   std::vector<Elem>& prod) {
    sp.mul.mul(f, g, prod);
    const auto l = lattice_dm(lat, cf, cg, lat.span_of(prod), cap);
    auto keep = [&] { return std::make_pair(std::vector<Elem>(f.begin(), f.end()),
                                            std::vector<Elem>(g.begin(), g.end())); };
    if (!l) {
      ++part.cap_exceeded;
      return;
    }
    ++part.histogram[*l];
    if (*l > part.max_exponent) {
      part.max_exponent = *l;
      part.max_pair = keep();
    }
    if (univariate && !part.violation && *l > dense_degree(sp, g) + 1) part.violation = keep();
  };

  const auto space = pair_count(sp.count, false);
  std::vector<DmPart> parts;
  if (space && *space <= b.budget) {
    out.mode = {true, 0};
    out.space = *space;
    const auto polys = static_cast<std::size_t>(*sp.count);
    std::vector<Elem> coeffs(polys * slots);
    std::vector<Idx> contents(polys);
    for (std::size_t i = 0; i < polys; ++i) {
      std::span<Elem> c(&coeffs[i * slots], slots);
      detail::decode_index(i, sp.order, c);
      contents[i] = lat.span_of(c);
    }
    parts.resize(polys);
    detail::for_each_index(polys, b.jobs, [&](std::size_t i) {
      std::vector<Elem> prod(sp.wide.size());
      for (std::size_t j = 0; j < polys; ++j)
        visit(parts[i], {&coeffs[i * slots], slots}, contents[i], {&coeffs[j * slots], slots},
              contents[j], prod);
    });
  } else {
    out.mode = {false, b.samples};
    out.space = b.samples;
    out.notice = downgrade_notice(space, "pairs", b);
    parts.resize(block_count(b.samples));
    detail::for_each_index(parts.size(), b.jobs, [&](std::size_t block) {
      auto rng = detail::stream_rng(b.seed, block);
      std::vector<Elem> f(slots), g(slots), prod(sp.wide.size());
      const std::uint64_t begin = block * detail::kSampleBlock;
      const std::uint64_t end = std::min<std::uint64_t>(b.samples, begin + detail::kSampleBlock);
      for (std::uint64_t s = begin; s < end; ++s) {
        draw_poly(rng, sp.order, f);
        draw_poly(rng, sp.order, g);
        visit(parts[block], f, lat.span_of(f), g, lat.span_of(g), prod);
      }
    });
  }

  for (auto& part : parts) {
    for (const auto& [l, n] : part.histogram) out.histogram[l] += n;
    out.cap_exceeded += part.cap_exceeded;
    if (part.max_exponent > out.max_exponent) {
      out.max_exponent = part.max_exponent;
      out.max_witness.emplace(sp.poly(part.max_pair->first), sp.poly(part.max_pair->second));
    }
    if (part.violation && !out.bound_violation)
      out.bound_violation.emplace(sp.poly(part.violation->first), sp.poly(part.violation->second));
  }
  return out;
}

DmSurvey dm_survey(const FiniteRing& ring, const SearchBounds& b, unsigned cap) {
  return dm_survey(IdealLattice::build(ring, b.lattice_cap), b, cap);
}

namespace {

Polynomial map_coefficients(const Polynomial& f, const FiniteRing& target,
                            const std::vector<Elem>& map) {
  Polynomial out(target, f.vars());
  for (const auto& [e, c] : f.terms()) out.set(e, map[c]);
  return out;
}

bool is_gaussian_counterexample(const Polynomial& f, const Polynomial& g) {
  return !(content(poly_mul(f, g)) == ideal_product(content(f), content(g)));
}

bool is_armendariz_violation(const Polynomial& f, const Polynomial& g) {
  return poly_mul(f, g).is_zero() && !ideal_product(content(f), content(g)).is_zero();
}

}  // namespace

GaussianArmendarizReport gaussian_iff_armendariz_quotients(const FiniteRing& ring,
                                                           const SearchBounds& b) {
  const auto lat = IdealLattice::build(ring, b.lattice_cap);
  GaussianArmendarizReport out{gaussian_search(lat, b), {}, std::nullopt};

  bool lifted = false;
  for (const auto& ideal : lat.ideals()) {
    if (!ideal.is_proper()) continue;
    const auto q = make_quotient(ideal);
    auto result = armendariz_search(IdealLattice::build(q.ring, b.lattice_cap), b);
    if (result.witness) {
      const auto& [fq, gq] = *result.witness;
      const bool ok = is_gaussian_counterexample(map_coefficients(fq, ring, q.lift),
                                                 map_coefficients(gq, ring, q.lift));
      out.backward_ok = out.backward_ok && ok;
      lifted = lifted || ok;
      out.armendariz_side = true;
    }
    out.quotients.push_back({ideal, q.ring.descriptor(), std::move(result)});
  }

  bool pushed = false;
  if (out.gaussian.witness) {
    const auto& [f, g] = *out.gaussian.witness;
    const Ideal target = content(poly_mul(f, g));
    const auto q = make_quotient(target);
    pushed = is_armendariz_violation(map_coefficients(f, q.ring, q.project),
                                     map_coefficients(g, q.ring, q.project));
    out.forward_ok = pushed;
    out.forward_ideal = target;
  }
  out.gaussian_side = out.gaussian.found() || lifted;
  out.armendariz_side = out.armendariz_side || pushed;
  out.verdicts_agree =
      out.gaussian_side == out.armendariz_side && out.forward_ok && out.backward_ok;
  return out;
}

namespace {

using Dense = std::vector<Elem>;

// C(c + k - 1, k): multisets of size k from c candidates; nullopt past 2^62.
std::optional<std::uint64_t> multiset_count(std::uint64_t c, unsigned k) {
  if (c == 0) return 0;
  std::uint64_t v = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // v * (c + i - 1) is divisible by i since v = C(c + i - 2, i - 1).
    if (v > (std::uint64_t{1} << 62) / (c + i - 1)) return std::nullopt;
    v = v * (c + i - 1) / i;
  }
  return v;
}

}  // namespace

PolyOmegaReport verify_poly_omega(const Ideal& ideal, const SearchBounds& b, unsigned cap,
                                  const ScanOptions& opts) {
  if (!ideal.is_proper())
    throw std::invalid_argument("verify_poly_omega needs a proper ideal, got R = " +
                                ideal.display());
  const auto& ring = ideal.ring();
  PolyOmegaReport out;
  out.omega_base = omega(ideal, cap, {opts.prune, b.jobs});

  // Lower bound: the base-ring witness as constants. An exact omega of 1
  // has no tuple from the previous level; (0) serves, since its product
  // lies in I while the empty product 1 does not.
  std::vector<Elem> base = out.omega_base.lower_witness;
  if (base.empty()) base.push_back(ring.zero());
  Polynomial product = Polynomial::constant(ring, b.vars, ring.one());
  for (Elem x : base) {
    out.lower_witness.push_back(Polynomial::constant(ring, b.vars, x));
    product = poly_mul(product, out.lower_witness.back());
  }
  out.lower_valid = in_extended_ideal(product, ideal);
  for (std::size_t skip = 0; skip < base.size() && out.lower_valid; ++skip) {
    Polynomial sub = Polynomial::constant(ring, b.vars, ring.one());
    for (std::size_t i = 0; i < base.size(); ++i)
      if (i != skip) sub = poly_mul(sub, out.lower_witness[i]);
    if (in_extended_ideal(sub, ideal)) out.lower_valid = false;
  }

  if (!out.omega_base.exact()) {
    out.notice = "omega exceeds cap " + std::to_string(cap) + "; polynomial search skipped";
    return out;
  }
  out.searched = true;
  const unsigned n = *out.omega_base.value;

  const auto lat = IdealLattice::build(ring, b.lattice_cap);
  const Idx target = lat.index_of(ideal);
  const MonomialBasis basis(b.vars, b.max_deg);
  const MonomialBasis big(b.vars, (n + 1) * b.max_deg);
  const MonomialBasis wide(b.vars, 2 * (n + 1) * b.max_deg);
  const DenseMultiplier mul(ring, big, big, wide);
  const auto order = static_cast<std::uint64_t>(ring.order());
  const auto polys = detail::checked_power(order, basis.size());

  // Products of at most n+1 factors of degree <= d fit in `big`; the graded
  // order makes `big` a prefix of `wide`.
  auto times = [&](const Dense& x, const Dense& y) {
    Dense z(wide.size());
    mul.mul(x, y, z);
    z.resize(big.size());
    return z;
  };
  auto in_ideal = [&](const Dense& x) {
    return std::all_of(x.begin(), x.end(), [&](Elem c) { return ideal.contains(c); });
  };
  auto widen = [&](std::span<const Elem> small) {
    Dense v(big.size(), ring.zero());
    std::copy(small.begin(), small.end(), v.begin());
    return v;
  };
  Dense one(big.size(), ring.zero());
  one[0] = ring.one();

  // Pruning lifts from the base ring: content inside I stays in the
  // subproduct, and content R makes the polynomial cancellable modulo I[X].
  auto pruned = [&](Idx c) { return lat.subset(c, target) || c == lat.unit_index(); };

  std::vector<Dense> cands;
  const bool enumerable = polys && *polys <= b.budget;
  if (enumerable) {
    Dense small(basis.size());
    for (std::uint64_t i = 0; i < *polys; ++i) {
      detail::decode_index(i, order, small);
      if (opts.prune && pruned(lat.span_of(small))) continue;
      cands.push_back(widen(small));
    }
    out.candidates = cands.size();
  }
  const auto space = enumerable ? multiset_count(cands.size(), n + 1) : std::nullopt;

  auto as_polys = [&](const std::vector<const Dense*>& tuple) {
    std::vector<Polynomial> v;
    for (const Dense* d : tuple) v.push_back(detail::to_polynomial(ring, big, *d));
    return v;
  };

  if (space && *space <= b.budget) {
    out.mode = {true, 0};
    out.space = *space;
    auto hit = detail::scan_multisets(cands, n, one, times, in_ideal, opts.prune, b.jobs);
    if (hit) {
      std::vector<const Dense*> tuple;
      for (auto pos : *hit) tuple.push_back(&cands[pos]);
      out.violation = as_polys(tuple);
    }
    return out;
  }

  out.mode = {false, b.samples};
  out.space = b.samples;
  out.notice = downgrade_notice(space, "tuples", b);
  using Tuple = std::vector<Dense>;
  auto hit = detail::first_hit<Tuple>(block_count(b.samples), b.jobs, [&](std::size_t block) {
    auto rng = detail::stream_rng(b.seed, block);
    detail::MultisetScan scan(cands, n, one, times, in_ideal, false);
    std::vector<std::size_t> picks(n + 1);
    std::vector<Dense> drawn(n + 1);
    Dense small(basis.size());
    const std::uint64_t begin = block * detail::kSampleBlock;
    const std::uint64_t end = std::min<std::uint64_t>(b.samples, begin + detail::kSampleBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      if (enumerable) {
        if (cands.empty()) return std::optional<Tuple>();
        for (auto& p : picks) p = detail::below(rng, cands.size());
        std::sort(picks.begin(), picks.end());
        if (scan.check(picks)) {
          Tuple t;
          for (auto p : picks) t.push_back(cands[p]);
          return std::optional<Tuple>(std::move(t));
        }
        continue;
      }
      for (auto& d : drawn) {
        draw_poly(rng, order, small);
        d = widen(small);
      }
      detail::MultisetScan direct(drawn, n, one, times, in_ideal, false);
      std::vector<std::size_t> all(n + 1);
      for (std::size_t i = 0; i <= n; ++i) all[i] = i;
      if (direct.check(all)) return std::optional<Tuple>(drawn);
    }
    return std::optional<Tuple>();
  });
  if (hit) {
    std::vector<const Dense*> tuple;
    for (const auto& d : hit->second) tuple.push_back(&d);
    out.violation = as_polys(tuple);
  }
  return out;
}

BezoutSweep bezout_sweep(const FiniteRing& ring, const SearchBounds& b) {
  const PolySpace sp(ring, b);
  BezoutSweep out;
  std::vector<Elem> c(sp.slots);
  auto attempt = [&](std::span<const Elem> coeffs) {
    auto g = sp.poly(coeffs);
    if (g.is_zero()) return true;
    try {
      bezout_factor(g);
    } catch (const VerificationFailure& e) {
      out.failure = std::move(g);
      out.failure_reason = e.what();
      return false;
    }
    ++out.factored;
    return true;
  };
  if (sp.count && *sp.count <= b.budget) {
    out.mode = {true, 0};
    out.space = *sp.count;
    for (std::uint64_t i = 0; i < *sp.count; ++i) {
      detail::decode_index(i, sp.order, c);
      if (!attempt(c)) break;
    }
    return out;
  }
  out.mode = {false, b.samples};
  out.space = b.samples;
  out.notice = downgrade_notice(sp.count, "polynomials", b);
  for (std::size_t block = 0; block < block_count(b.samples); ++block) {
    auto rng = detail::stream_rng(b.seed, block);
    const std::uint64_t begin = block * detail::kSampleBlock;
    const std::uint64_t end = std::min<std::uint64_t>(b.samples, begin + detail::kSampleBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      draw_poly(rng, sp.order, c);
      if (!attempt(c)) return out;
    }
  }
  return out;
}

CertifySweep certify_pair_sweep(const Ideal& ideal, const SearchBounds& b, unsigned cap) {
  const auto& ring = ideal.ring();
  const PolySpace sp(ring, b);
  CertifySweep out;
  auto visit = [&](std::span<const Elem> fc, std::span<const Elem> gc,
                   std::vector<Elem>& prod) {
    sp.mul.mul(fc, gc, prod);
    if (!std::all_of(prod.begin(), prod.end(), [&](Elem x) { return ideal.contains(x); }))
      return true;
    const std::vector<Polynomial> fs{sp.poly(fc), sp.poly(gc)};
    try {
      const auto cert = certify_content_product(ideal, fs, cap);
      ++out.certified;
      out.max_exponent = std::max(out.max_exponent, cert.max_exponent);
      if (cert.max_exponent > b.max_deg + 1) out.exponents_bounded = false;
      if (cert.radical && !cert.final_containment) {
        out.failure.emplace(fs[0], fs[1]);
        return false;
      }
    } catch (const CapExceeded&) {
      if (!out.cap_hit) out.cap_hit.emplace(fs[0], fs[1]);
    }
    return true;
  };
  std::vector<Elem> f(sp.slots), g(sp.slots), prod(sp.wide.size());
  const auto space = pair_count(sp.count, false);
  if (space && *space <= b.budget) {
    out.mode = {true, 0};
    out.space = *space;
    for (std::uint64_t i = 0; i < *sp.count; ++i) {
      detail::decode_index(i, sp.order, f);
      for (std::uint64_t j = 0; j < *sp.count; ++j) {
        detail::decode_index(j, sp.order, g);
        if (!visit(f, g, prod)) return out;
      }
    }
    return out;
  }
  out.mode = {false, b.samples};
  out.space = b.samples;
  out.notice = downgrade_notice(space, "pairs", b);
  for (std::size_t block = 0; block < block_count(b.samples); ++block) {
    auto rng = detail::stream_rng(b.seed, block);
    const std::uint64_t begin = block * detail::kSampleBlock;
    const std::uint64_t end = std::min<std::uint64_t>(b.samples, begin + detail::kSampleBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      draw_poly(rng, sp.order, f);
      draw_poly(rng, sp.order, g);
      if (!visit(f, g, prod)) return out;
    }
  }
  return out;
}

}  // namespace absorb
