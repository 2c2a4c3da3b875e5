#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "absorb/error.hpp"
#include "absorb/ring.hpp"

using namespace absorb;

TEST(Zmod, BasicArithmetic) {
  const auto z6 = make_zmod(6);
  EXPECT_EQ(z6.order(), 6U);
  EXPECT_EQ(z6.mul(2, 3), 0U);
  const auto z4 = make_zmod(4);
  EXPECT_EQ(z4.add(3, 3), 2U);
  EXPECT_EQ(z4.mul(3, 3), 1U);
  EXPECT_EQ(z4.neg(1), 3U);
  EXPECT_EQ(z4.pow(2, 2), 0U);
  EXPECT_EQ(z4.pow(3, 0), z4.one());
}

TEST(Zmod, RejectsZeroRing) {
  EXPECT_THROW(make_zmod(1), std::invalid_argument);
  EXPECT_THROW(make_zmod(0), std::invalid_argument);
}

TEST(Zmod, UnitsAndInverses) {
  const auto z12 = make_zmod(12);
  for (Elem a = 0; a < 12; ++a) {
    EXPECT_EQ(z12.is_unit(a), std::gcd(a, 12U) == 1) << a;
    if (z12.is_unit(a))
      EXPECT_EQ(z12.mul(a, z12.inverse(a)), z12.one());
    else
      EXPECT_THROW(z12.inverse(a), std::invalid_argument);
  }
}

TEST(Zmod, LargeOrderWithoutTablesAgrees) {
  const auto big = make_zmod(1000);
  EXPECT_FALSE(big.has_tables());
  EXPECT_EQ(big.mul(999, 999), 1U);
  EXPECT_EQ(big.add(600, 700), 300U);
  EXPECT_THROW(make_zmod(5000), CapExceeded);
}

TEST(Product, EncodingAndIdempotents) {
  const auto a = make_zmod(4), b = make_zmod(3);
  const auto p = make_product(a, b);
  EXPECT_EQ(p.order(), 12U);
  EXPECT_EQ(p.one(), 1U * 3 + 1);
  const auto z2 = make_zmod(2);
  const auto q = make_product(z2, z2);
  const Elem e1 = 1 * 2 + 0, e2 = 0 * 2 + 1;
  EXPECT_EQ(q.mul(e1, e2), q.zero());
  EXPECT_EQ(q.mul(e1, e1), e1);
}

TEST(Product, CrtIsomorphicToZ12) {
  const auto p = make_product(make_zmod(4), make_zmod(3));
  const auto z = make_zmod(12);
  // x mod 12 -> (x mod 4, x mod 3) encoded as a*3 + b
  std::vector<Elem> phi(12);
  for (Elem x = 0; x < 12; ++x) phi[x] = (x % 4) * 3 + (x % 3);
  auto sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  for (Elem i = 0; i < 12; ++i) ASSERT_EQ(sorted[i], i);
  for (Elem x = 0; x < 12; ++x)
    for (Elem y = 0; y < 12; ++y) {
      EXPECT_EQ(phi[z.add(x, y)], p.add(phi[x], phi[y]));
      EXPECT_EQ(phi[z.mul(x, y)], p.mul(phi[x], phi[y]));
    }
}

TEST(Product, CyclicFactorsRoundTrip) {
  const auto p = parse_ring_spec("prod:zmod:4,zmod:9");
  EXPECT_EQ(p.cyclic_factors(), (std::vector<std::uint64_t>{4, 9}));
  for (Elem a = 0; a < p.order(); ++a) EXPECT_EQ(p.join_cyclic(p.split_cyclic(a)), a);
}

TEST(Truncated, OrdersAndTruncation) {
  const auto m2 = make_truncated_local(2, 2, 2);
  EXPECT_EQ(m2.order(), 8U);
  const Elem x = m2.parse_element("x"), y = m2.parse_element("y");
  EXPECT_EQ(m2.mul(x, y), m2.zero());
  EXPECT_EQ(m2.mul(x, x), m2.zero());

  const auto m3 = make_truncated_local(2, 2, 3);
  EXPECT_EQ(m3.order(), 64U);
  const Elem a = m3.parse_element("x"), b = m3.parse_element("y");
  EXPECT_NE(m3.mul(a, b), m3.zero());
  EXPECT_EQ(m3.mul(m3.mul(a, b), a), m3.zero());

  const auto f3 = make_truncated_local(3, 1, 2);
  EXPECT_EQ(f3.order(), 9U);
  const Elem t = f3.parse_element("x");
  const Elem one_plus = f3.add(f3.one(), t), one_minus = f3.sub(f3.one(), t);
  EXPECT_EQ(f3.mul(one_plus, one_minus), f3.one());
}

TEST(Truncated, IndexLayout) {
  const auto m3 = make_truncated_local(2, 2, 3);
  EXPECT_EQ(m3.parse_element("x"), 2U);
  EXPECT_EQ(m3.parse_element("y"), 4U);
}

TEST(Truncated, RejectsBadParameters) {
  EXPECT_THROW(make_truncated_local(4, 1, 2), std::invalid_argument);
  EXPECT_THROW(make_truncated_local(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_truncated_local(3, 3, 3), CapExceeded);
}

TEST(Display, RoundTripsEveryElement) {
  for (const char* spec : {"zmod:12", "prod:zmod:2,zmod:3", "trunc:p=2,vars=2,nil=3",
                           "trunc:p=3,vars=1,nil=2"}) {
    const auto r = parse_ring_spec(spec);
    for (Elem a = 0; a < r.order(); ++a) EXPECT_EQ(r.parse_element(r.display(a)), a) << spec;
  }
}

TEST(Spec, DescriptorRoundTrips) {
  for (const char* spec : {"zmod:30", "prod:zmod:4,zmod:9", "trunc:p=2,vars=2,nil=2"}) {
    const auto r = parse_ring_spec(spec);
    EXPECT_EQ(r.descriptor(), spec);
    EXPECT_EQ(parse_ring_spec(r.descriptor()), r);
  }
}

TEST(Spec, ParseErrors) {
  EXPECT_THROW(parse_ring_spec("zmod:"), ParseError);
  EXPECT_THROW(parse_ring_spec("ring:5"), ParseError);
  EXPECT_THROW(parse_ring_spec("trunc:p=2,vars=2"), ParseError);
  EXPECT_THROW(parse_ring_spec("zmod:12x"), ParseError);
}

TEST(Axioms, FixtureRingsPass) {
  for (const char* spec : {"zmod:12", "trunc:p=2,vars=2,nil=3", "prod:zmod:4,zmod:3",
                           "trunc:p=3,vars=1,nil=2"}) {
    const auto rep = verify_ring_axioms(parse_ring_spec(spec));
    EXPECT_TRUE(rep.ok) << spec << ": " << rep.axiom;
    EXPECT_FALSE(rep.skipped);
  }
}

TEST(Axioms, CorruptedTableIsReported) {
  const std::size_t n = 3;
  std::vector<Elem> add(n * n), mul(n * n), neg(n);
  for (Elem a = 0; a < n; ++a) {
    neg[a] = (n - a) % n;
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  }
  std::swap(mul[1 * n + 2], mul[2 * n + 2]);
  const auto bad = FiniteRing::from_tables(n, add, mul, neg, 0, 1, "corrupt");
  const auto rep = verify_ring_axioms(bad);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.axiom.empty());
  EXPECT_FALSE(rep.witness.empty());
}

TEST(Axioms, LargeRingSkipped) {
  const auto rep = verify_ring_axioms(make_zmod(1000));
  EXPECT_TRUE(rep.skipped);
}

TEST(Primes, SmallNumbers) {
  EXPECT_FALSE(is_prime_number(1));
  EXPECT_TRUE(is_prime_number(2));
  EXPECT_TRUE(is_prime_number(97));
  EXPECT_FALSE(is_prime_number(91));
}
