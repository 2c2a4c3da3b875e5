#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "absorb/campaign.hpp"
#include "absorb/integers.hpp"
#include "absorb/search.hpp"
#include "oracle.hpp"

using namespace absorb;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

SearchBounds deg(unsigned d) {
  SearchBounds b;
  b.max_deg = d;
  return b;
}

std::vector<Ideal> proper_ideals(const FiniteRing& ring) {
  std::vector<Ideal> out;
  const auto lat = IdealLattice::build(ring);
  for (const auto& i : lat.ideals())
    if (i.is_proper()) out.push_back(i);
  return out;
}

Outcome omega_table() {
  Outcome o;
  for (unsigned m = 2; m <= 60; ++m) {
    const auto w = omega(zero_ideal(make_zmod(m)), 6);
    const auto expected = oracle::big_omega(m);
    o.require(w.exact() && *w.value == expected, "omega((0)) in Z/" + std::to_string(m));
    o.require(omega_int(m).value == expected, "omega_int(" + std::to_string(m) + ")");
  }
  return o;
}

Outcome conjecture1_family() {
  Outcome o;
  std::vector<std::string> specs;
  for (unsigned m = 2; m <= 30; ++m) specs.push_back("zmod:" + std::to_string(m));
  for (const char* s : {"prod:zmod:4,zmod:9", "prod:zmod:2,zmod:2", "trunc:p=2,vars=1,nil=2",
                        "trunc:p=2,vars=1,nil=3", "trunc:p=2,vars=2,nil=2",
                        "trunc:p=2,vars=2,nil=3", "trunc:p=3,vars=1,nil=2"})
    specs.emplace_back(s);
  std::size_t rows = 0;
  for (const auto& spec : specs)
    for (const auto& row : conjecture1_check(parse_ring_spec(spec))) {
      ++rows;
      o.require(row.agreement == Agreement::Equal, spec + " " + row.ideal.display());
    }
  if (o.ok) o.note = std::to_string(specs.size()) + " rings, " + std::to_string(rows) + " ideals";
  return o;
}

Outcome dm_bound() {
  Outcome o;
  for (unsigned n : {4U, 6U}) {
    const auto s = dm_survey(make_zmod(n), deg(3));
    const auto name = "Z/" + std::to_string(n);
    o.require(s.mode.exhaustive, name + " not exhaustive");
    o.require(s.bound_checked && !s.bound_violation, name + " exponent above deg(g)+1");
    o.require(s.cap_exceeded == 0, name + " cap exceeded");
    if (n == 4) o.require(s.max_exponent == 1, "Z/4 exponent above 1");
    o.note += (o.note.empty() ? "" : ", ") + name + " " + std::to_string(s.space) + " pairs";
  }
  return o;
}

Outcome gaussian_fixtures() {
  Outcome o;
  for (const char* spec : {"zmod:4", "zmod:8", "zmod:12", "trunc:p=2,vars=2,nil=2"}) {
    const auto r = gaussian_search(parse_ring_spec(spec), deg(2));
    o.require(r.mode.exhaustive && !r.found(), spec);
  }
  const auto m3 = make_truncated_local(2, 2, 3);
  const auto r = gaussian_search(m3, deg(1));
  const auto f = Polynomial::from_coefficients(m3, {m3.parse_element("y"), m3.parse_element("x")});
  o.require(r.found() && r.witness->first == f && r.witness->second == f,
            "no (aX+b, aX+b) counterexample over F_2[a,b]/m^3");
  return o;
}

Outcome bezout_construction() {
  Outcome o;
  const auto z12 = bezout_sweep(make_zmod(12), deg(2));
  o.require(z12.mode.exhaustive && !z12.failure && z12.factored == 1727, "Z/12 sweep");
  auto b = deg(2);
  b.budget = 0;
  b.samples = 1000;
  b.seed = 42;
  const auto z360 = bezout_sweep(make_zmod(360), b);
  o.require(!z360.failure && z360.factored == 1000, "Z/360 sampled sweep");
  return o;
}

Outcome radical_certificate() {
  Outcome o;
  std::size_t ideals = 0;
  for (const auto& i : proper_ideals(make_zmod(30))) {
    if (!is_radical_ideal(i)) continue;
    ++ideals;
    const auto s = certify_pair_sweep(i, deg(1));
    o.require(s.mode.exhaustive, i.display() + " not exhaustive");
    o.require(!s.failure && !s.cap_hit && s.exponents_bounded, i.display());
  }
  if (o.ok) o.note = std::to_string(ideals) + " radical ideals";
  return o;
}

Outcome poly_omega() {
  Outcome o;
  for (const char* spec : {"zmod:4", "zmod:6", "zmod:12", "trunc:p=2,vars=2,nil=2"})
    for (const auto& i : proper_ideals(parse_ring_spec(spec))) {
      auto b = deg(1);
      b.seed = 42;
      const auto r = verify_poly_omega(i, b);
      const auto name = std::string(spec) + " " + i.display();
      o.require(r.searched && r.lower_valid, name + " lower witness");
      o.require(!r.violation, name + " violation");
      o.require(r.mode.exhaustive || r.mode.samples >= 100'000, name + " sample count");
    }
  return o;
}

Outcome integer_leg() {
  Outcome o;
  for (std::uint64_t m : {4U, 8U, 12U, 30U}) {
    const auto r = conjecture_check_int(m, 2, 5, 10'000, 42);
    const auto name = "m = " + std::to_string(m);
    o.require(r.lower_valid, name + " lower witness");
    o.require(!r.violation, name + " violation");
    o.require(r.mode.exhaustive || r.accepted == 10'000, name + " sample count");
  }
  const auto g = gauss_lemma_sampled(6, 100, 10'000, 42);
  o.require(!g.failure && g.pairs == 10'000, "Gauss lemma sweep");
  return o;
}

Outcome armendariz_fixtures() {
  Outcome o;
  for (const char* spec : {"trunc:p=2,vars=2,nil=2", "trunc:p=3,vars=1,nil=2"}) {
    const auto r = armendariz_search(parse_ring_spec(spec), deg(2));
    o.require(r.mode.exhaustive && !r.found(), spec);
  }
  const auto z4 = gaussian_iff_armendariz_quotients(make_zmod(4), deg(2));
  o.require(z4.verdicts_agree && !z4.gaussian_side && !z4.armendariz_side, "Z/4 report");
  const auto m3 = gaussian_iff_armendariz_quotients(make_truncated_local(2, 2, 3), deg(1));
  o.require(m3.verdicts_agree && m3.gaussian_side && m3.armendariz_side && m3.forward_ok &&
                m3.backward_ok,
            "F_2[a,b]/m^3 report");
  return o;
}

Outcome determinism() {
  Outcome o;
  auto config = parse_campaign_config(R"({
    "rings": ["zmod:12", "zmod:30", "prod:zmod:2,zmod:4", "trunc:p=2,vars=2,nil=2",
              "trunc:p=2,vars=2,nil=3"],
    "checks": ["omega-table", "conjecture1", "gaussian", "armendariz", "dm-bound",
               "poly-omega", "bezout", "certify-radical", "int-conjecture"],
    "max_deg": 1, "sample": 1000, "seed": 42})");
  config.jobs = 1;
  const auto one = render_json(run_campaign(config));
  config.jobs = 8;
  const auto eight = render_json(run_campaign(config));
  o.require(one == eight, "JSON differs between jobs = 1 and jobs = 8");
  if (o.ok) o.note = std::to_string(one.size()) + " bytes identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"omega table matches prime factorization for Z/2..Z/60", omega_table},
      {"omega equals strong omega across the fixture family", conjecture1_family},
      {"Dedekind-Mertens exponent bound over Z/4 and Z/6", dm_bound},
      {"Gaussian fixtures and detector validation", gaussian_fixtures},
      {"Bezout factorization over Z/12 and Z/360", bezout_construction},
      {"content certificate for radical ideals of Z/30", radical_certificate},
      {"polynomial omega harness on Z/4, Z/6, Z/12, F_2[x,y]/m^2", poly_omega},
      {"integer leg: lower witnesses, sampled tuples, Gauss lemma", integer_leg},
      {"Armendariz fixtures and Gaussian-iff-Armendariz reports", armendariz_fixtures},
      {"campaign JSON identical for jobs = 1 and jobs = 8", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s C%zu %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
