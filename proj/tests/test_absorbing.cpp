#include <gtest/gtest.h>

#include "absorb/absorbing.hpp"
#include "absorb/error.hpp"
#include "oracle.hpp"

using namespace absorb;

namespace {

Ideal gen(const FiniteRing& r, std::vector<Elem> g) { return ideal_from_generators(r, g); }

const std::vector<const char*> kTinyRings{
    "zmod:2", "zmod:4", "zmod:6", "zmod:8", "prod:zmod:2,zmod:2", "prod:zmod:2,zmod:4",
    "trunc:p=2,vars=2,nil=2", "trunc:p=2,vars=1,nil=3"};

}  // namespace

TEST(Absorbing, SpecExamples) {
  const auto z4 = make_zmod(4);
  const auto v1 = is_n_absorbing(zero_ideal(z4), 1);
  EXPECT_FALSE(v1.absorbing);
  EXPECT_EQ(v1.violation, (std::vector<Elem>{2, 2}));
  EXPECT_TRUE(is_n_absorbing(zero_ideal(z4), 2).absorbing);
  EXPECT_TRUE(is_n_absorbing(gen(make_zmod(12), {3}), 1).absorbing);
  EXPECT_THROW(is_n_absorbing(unit_ideal(z4), 1), std::invalid_argument);
  EXPECT_THROW(is_n_absorbing(zero_ideal(z4), 0), std::invalid_argument);
}

TEST(Omega, Z12) {
  const auto z12 = make_zmod(12);
  const auto w = omega(zero_ideal(z12), 6);
  ASSERT_TRUE(w.exact());
  EXPECT_EQ(*w.value, 3U);
  EXPECT_EQ(w.lower_witness, (std::vector<Elem>{2, 2, 3}));
  EXPECT_TRUE(w.upper_certified);
  EXPECT_EQ(*omega(gen(z12, {3})).value, 1U);
  EXPECT_EQ(*omega(unit_ideal(z12)).value, 0U);
}

TEST(Omega, CapMarker) {
  const auto z64 = make_zmod(64);
  const auto w = omega(zero_ideal(z64), 3);
  EXPECT_FALSE(w.exact());
  EXPECT_EQ(w.cap, 3U);
  EXPECT_FALSE(w.lower_witness.empty());
}

TEST(Omega, LowerWitnessCertifies) {
  for (unsigned m = 2; m <= 40; ++m) {
    const auto r = make_zmod(m);
    const auto w = omega(zero_ideal(r));
    ASSERT_TRUE(w.exact());
    if (*w.value < 2) continue;
    ASSERT_EQ(w.lower_witness.size(), *w.value);
    Elem prod = r.one();
    for (Elem x : w.lower_witness) prod = r.mul(prod, x);
    EXPECT_EQ(prod, r.zero());
    for (std::size_t skip = 0; skip < w.lower_witness.size(); ++skip) {
      Elem sub = r.one();
      for (std::size_t i = 0; i < w.lower_witness.size(); ++i)
        if (i != skip) sub = r.mul(sub, w.lower_witness[i]);
      EXPECT_NE(sub, r.zero()) << m;
    }
  }
}

TEST(Oracle, PrunedUnprunedAndNaiveAgree) {
  for (const char* spec : kTinyRings) {
    const auto r = parse_ring_spec(spec);
    const auto lat = IdealLattice::build(r);
    for (const auto& i : lat.ideals()) {
      if (i.is_whole()) continue;
      for (unsigned n = 1; n <= 3; ++n) {
        const auto pruned = is_n_absorbing(i, n, {.prune = true});
        const auto unpruned = is_n_absorbing(i, n, {.prune = false});
        EXPECT_EQ(pruned.absorbing, oracle::naive_absorbing(i, n)) << spec << ' ' << i.display();
        EXPECT_EQ(pruned.absorbing, unpruned.absorbing) << spec << ' ' << i.display();
        EXPECT_EQ(pruned.violation, unpruned.violation) << spec << ' ' << i.display();
      }
    }
  }
}

TEST(Oracle, OmegaMatchesNaiveScan) {
  for (const char* spec : {"zmod:12", "prod:zmod:4,zmod:3", "trunc:p=3,vars=1,nil=2"}) {
    const auto r = parse_ring_spec(spec);
    const auto lat = IdealLattice::build(r);
    for (const auto& i : lat.ideals()) {
      const auto w = omega(i, 4);
      EXPECT_EQ(w.value, oracle::naive_omega(i, 4)) << spec << ' ' << i.display();
    }
  }
}

TEST(Oracle, ZmodOmegaIsBigOmega) {
  for (unsigned m = 2; m <= 60; ++m) {
    const auto w = omega(zero_ideal(make_zmod(m)), 6);
    ASSERT_TRUE(w.exact()) << m;
    EXPECT_EQ(*w.value, oracle::big_omega(m)) << m;
  }
}

TEST(Omega, ParallelScanIsScheduleIndependent) {
  for (const char* spec : {"zmod:48", "trunc:p=2,vars=2,nil=3", "prod:zmod:4,zmod:9"}) {
    const auto r = parse_ring_spec(spec);
    const auto z = zero_ideal(r);
    for (unsigned n = 1; n <= 3; ++n)
      EXPECT_EQ(is_n_absorbing(z, n, {.prune = true, .jobs = 1}).violation,
                is_n_absorbing(z, n, {.prune = true, .jobs = 4}).violation)
          << spec << ' ' << n;
  }
}

TEST(Omega, OneIffPrime) {
  for (const char* spec : {"zmod:30", "zmod:36", "prod:zmod:4,zmod:9", "trunc:p=2,vars=2,nil=2"}) {
    const auto r = parse_ring_spec(spec);
    const auto lat = IdealLattice::build(r);
    for (const auto& i : lat.ideals()) {
      if (i.is_whole()) continue;
      EXPECT_EQ(omega(i).value == 1U, is_prime(i)) << spec << ' ' << i.display();
    }
  }
}

TEST(Omega, QuotientCorrespondence) {
  const auto z12 = make_zmod(12);
  const auto lat = IdealLattice::build(z12);
  for (const auto& j : lat.ideals()) {
    if (j.is_whole()) continue;
    const auto q = make_quotient(j);
    for (const auto& i : lat.ideals()) {
      if (i.is_whole() || !j.subset_of(i)) continue;
      EXPECT_EQ(omega(i).value, omega(q.image(i)).value) << i.display() << " / " << j.display();
    }
  }
}

TEST(StrongAbsorbing, SpecExamples) {
  const auto z4 = make_zmod(4);
  EXPECT_TRUE(is_strongly_n_absorbing(zero_ideal(z4), 2).absorbing);
  const auto v = is_strongly_n_absorbing(zero_ideal(z4), 1);
  EXPECT_FALSE(v.absorbing);
  const auto two = gen(z4, {2});
  EXPECT_EQ(v.violation, (std::vector<Ideal>{two, two}));
  const auto z12 = make_zmod(12);
  EXPECT_TRUE(is_strongly_n_absorbing(gen(z12, {6}), 2).absorbing);
}

TEST(StrongOmega, Values) {
  const auto z12 = make_zmod(12);
  EXPECT_EQ(*strong_omega(zero_ideal(z12)).value, 3U);
  EXPECT_EQ(*strong_omega(gen(make_zmod(4), {2})).value, 1U);
  EXPECT_EQ(*strong_omega(unit_ideal(z12)).value, 0U);
}

TEST(StrongOmega, StrongImpliesPlain) {
  for (const char* spec : {"zmod:24", "prod:zmod:2,zmod:4", "trunc:p=2,vars=2,nil=3"}) {
    const auto r = parse_ring_spec(spec);
    const auto lat = IdealLattice::build(r);
    for (const auto& i : lat.ideals()) {
      if (i.is_whole()) continue;
      for (unsigned n = 1; n <= 3; ++n) {
        if (is_strongly_n_absorbing(i, n, lat).absorbing) {
          EXPECT_TRUE(is_n_absorbing(i, n).absorbing) << spec << ' ' << i.display();
        }
      }
      const auto a = omega(i);
      const auto s = strong_omega(i, 6, lat);
      if (a.exact() && s.exact()) {
        EXPECT_GE(*s.value, *a.value);
      }
    }
  }
}

TEST(Conjecture1, FixtureTables) {
  const auto z4 = conjecture1_check(make_zmod(4));
  ASSERT_EQ(z4.size(), 2U);
  EXPECT_EQ(*z4[0].omega.value, 2U);
  EXPECT_EQ(*z4[1].omega.value, 1U);
  for (const auto& row : z4) EXPECT_EQ(row.agreement, Agreement::Equal);

  const auto z12 = conjecture1_check(make_zmod(12));
  ASSERT_EQ(z12.size(), 5U);
  EXPECT_EQ(*z12[0].omega.value, 3U);
  for (const auto& row : z12) EXPECT_EQ(row.agreement, Agreement::Equal);

  const auto m2 = conjecture1_check(make_truncated_local(2, 2, 2));
  EXPECT_EQ(*m2[0].omega.value, 2U);
  EXPECT_EQ(*m2[0].strong.value, 2U);
}

TEST(Conjecture1, CompareRules) {
  ElementOmega plain{2U, 6, {}, true};
  IdealOmega strong{2U, 6, {}, true};
  EXPECT_EQ(compare_omegas(plain, strong), Agreement::Equal);
  strong.value = 3U;
  EXPECT_EQ(compare_omegas(plain, strong), Agreement::Differ);
  EXPECT_EQ(compare_omegas(plain, IdealOmega::exceeds(6, {})), Agreement::Differ);
  EXPECT_EQ(compare_omegas(ElementOmega::exceeds(6, {}), IdealOmega::exceeds(6, {})),
            Agreement::Undetermined);
}
