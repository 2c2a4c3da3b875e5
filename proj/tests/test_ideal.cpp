#include <gtest/gtest.h>

#include "absorb/error.hpp"
#include "absorb/ideal.hpp"
#include "absorb/lattice.hpp"

using namespace absorb;

namespace {

std::vector<Elem> gens(std::initializer_list<Elem> g) { return g; }

Ideal gen(const FiniteRing& r, std::initializer_list<Elem> g) {
  const auto v = gens(g);
  return ideal_from_generators(r, v);
}

}  // namespace

TEST(Ideal, GeneratorClosure) {
  const auto z12 = make_zmod(12);
  EXPECT_EQ(gen(z12, {8}).elements(), (std::vector<Elem>{0, 4, 8}));
  EXPECT_EQ(gen(z12, {}).elements(), (std::vector<Elem>{0}));
  const auto m2 = make_truncated_local(2, 2, 2);
  const Elem x = m2.parse_element("x");
  EXPECT_EQ(gen(m2, {x}).elements(), (std::vector<Elem>{0, x}));
}

TEST(Ideal, CanonicalGeneratorsAndEquality) {
  const auto z12 = make_zmod(12);
  EXPECT_EQ(gen(z12, {8}), gen(z12, {4}));
  EXPECT_EQ(gen(z12, {8}).generators(), gen(z12, {4}).generators());
  EXPECT_EQ(gen(z12, {4, 6}), gen(z12, {2}));
  EXPECT_TRUE(gen(z12, {5}).is_whole());
  EXPECT_TRUE(gen(z12, {}).is_zero());
}

TEST(Ideal, Operations) {
  const auto z12 = make_zmod(12);
  const auto two = gen(z12, {2}), three = gen(z12, {3}), six = gen(z12, {6});
  EXPECT_EQ(ideal_product(two, three), six);
  EXPECT_EQ(six.elements(), (std::vector<Elem>{0, 6}));
  EXPECT_EQ(ideal_intersect(two, three), six);
  EXPECT_EQ(ideal_sum(two, three), unit_ideal(z12));
  EXPECT_EQ(ideal_power(two, 2), gen(z12, {4}));
  EXPECT_EQ(ideal_power(two, 0), unit_ideal(z12));
  EXPECT_THROW(ideal_sum(two, unit_ideal(make_zmod(6))), std::invalid_argument);
}

TEST(Ideal, Radical) {
  const auto z12 = make_zmod(12);
  EXPECT_EQ(ideal_radical(gen(z12, {4})).elements(), (std::vector<Elem>{0, 2, 4, 6, 8, 10}));
  const auto p = gen(z12, {3});
  EXPECT_EQ(ideal_radical(p), p);
  const auto m2 = make_truncated_local(2, 2, 2);
  const auto rad = ideal_radical(zero_ideal(m2));
  EXPECT_EQ(rad.size(), 4U);
  EXPECT_EQ(rad, gen(m2, {m2.parse_element("x"), m2.parse_element("y")}));
}

TEST(Ideal, PrimeAndRadicalPredicates) {
  const auto z12 = make_zmod(12);
  EXPECT_TRUE(is_prime(gen(z12, {3})));
  EXPECT_FALSE(is_prime(gen(z12, {4})));
  EXPECT_FALSE(is_prime(unit_ideal(z12)));
  const auto z30 = make_zmod(30);
  EXPECT_TRUE(is_radical_ideal(gen(z30, {6})));
  EXPECT_FALSE(is_radical_ideal(gen(z12, {4})));
  EXPECT_TRUE(is_radical_ideal(zero_ideal(make_zmod(6))));
}

TEST(Ideal, ClosureCheckRejectsNonIdeals) {
  const auto z12 = make_zmod(12);
  ElementSet s(12);
  s.insert(0);
  s.insert(4);
  EXPECT_FALSE(check_ideal_closure(z12, s));
  s.insert(8);
  EXPECT_TRUE(check_ideal_closure(z12, s));
}

TEST(Ideal, DisplayAndSpecRoundTrip) {
  for (const char* spec : {"zmod:12", "trunc:p=2,vars=2,nil=3", "prod:zmod:2,zmod:3"}) {
    const auto r = parse_ring_spec(spec);
    const auto lat = IdealLattice::build(r);
    for (const auto& i : lat.ideals()) {
      EXPECT_EQ(parse_ideal(r, i.display()), i) << i.display();
      EXPECT_EQ(parse_ideal(r, i.spec()), i) << i.spec();
    }
  }
  const auto z12 = make_zmod(12);
  EXPECT_EQ(parse_ideal(z12, "gen:none"), zero_ideal(z12));
  EXPECT_THROW(parse_ideal(z12, "gen:13"), ParseError);
  EXPECT_THROW(parse_ideal(z12, "(2"), ParseError);
}

TEST(Lattice, Z12HasSixIdeals) {
  const auto lat = IdealLattice::build(make_zmod(12));
  ASSERT_EQ(lat.size(), 6U);
  const auto z12 = make_zmod(12);
  const std::vector<Ideal> expected{gen(z12, {}), gen(z12, {6}), gen(z12, {4}),
                                    gen(z12, {3}), gen(z12, {2}), unit_ideal(z12)};
  EXPECT_EQ(lat.ideals(), expected);
}

TEST(Lattice, PrimeFieldHasTwoIdeals) {
  for (unsigned p : {2U, 3U, 5U, 7U, 11U, 13U})
    EXPECT_EQ(IdealLattice::build(make_zmod(p)).size(), 2U);
}

TEST(Lattice, TruncatedM2) {
  const auto lat = IdealLattice::build(make_truncated_local(2, 2, 2));
  EXPECT_EQ(lat.size(), 6U);
}

TEST(Lattice, TablesMatchIdealArithmetic) {
  for (const char* spec : {"zmod:12", "trunc:p=2,vars=2,nil=2", "prod:zmod:4,zmod:3"}) {
    const auto lat = IdealLattice::build(parse_ring_spec(spec));
    for (IdealLattice::Index a = 0; a < lat.size(); ++a)
      for (IdealLattice::Index b = 0; b < lat.size(); ++b) {
        EXPECT_EQ(lat.ideal(lat.sum(a, b)), ideal_sum(lat.ideal(a), lat.ideal(b)));
        EXPECT_EQ(lat.ideal(lat.product(a, b)), ideal_product(lat.ideal(a), lat.ideal(b)));
        EXPECT_EQ(lat.subset(a, b), lat.ideal(a).subset_of(lat.ideal(b)));
      }
  }
}

TEST(Lattice, ZmodIdealsMatchDivisors) {
  for (unsigned n = 2; n <= 60; ++n) {
    unsigned divisors = 0;
    for (unsigned d = 1; d <= n; ++d) divisors += n % d == 0;
    EXPECT_EQ(IdealLattice::build(make_zmod(n)).size(), divisors) << n;
  }
}

TEST(Lattice, OverflowIsExplicit) {
  const auto list = all_ideals(make_truncated_local(2, 2, 3), 4);
  EXPECT_TRUE(list.overflow);
  EXPECT_TRUE(list.ideals.empty());
  EXPECT_THROW(IdealLattice::build(make_truncated_local(2, 2, 3), 4), CapExceeded);
}

TEST(Quotient, Z12ModSixIsZ6) {
  const auto z12 = make_zmod(12);
  const auto q = make_quotient(gen(z12, {6}));
  EXPECT_EQ(q.ring.order(), 6U);
  EXPECT_TRUE(verify_ring_axioms(q.ring).ok);
  EXPECT_EQ(IdealLattice::build(q.ring).size(), 4U);
  const auto img = q.image(gen(z12, {2}));
  EXPECT_EQ(q.preimage(img, z12), gen(z12, {2}));
  EXPECT_THROW(make_quotient(unit_ideal(z12)), std::invalid_argument);
}
