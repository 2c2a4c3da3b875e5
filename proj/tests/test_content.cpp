#include <gtest/gtest.h>

#include "absorb/content.hpp"
#include "absorb/error.hpp"

using namespace absorb;

namespace {

Ideal gen(const FiniteRing& r, std::vector<Elem> g) { return ideal_from_generators(r, g); }

Polynomial uni(const FiniteRing& r, std::vector<Elem> c) {
  return Polynomial::from_coefficients(r, c);
}

}  // namespace

TEST(Content, Examples) {
  const auto z8 = make_zmod(8);
  EXPECT_EQ(content(uni(z8, {2, 4})).elements(), (std::vector<Elem>{0, 2, 4, 6}));
  EXPECT_TRUE(content(Polynomial(z8, 1)).is_zero());
  EXPECT_TRUE(content(uni(make_zmod(12), {1, 3})).is_whole());
}

TEST(Content, SubsetPropertyStrictOverM3) {
  const auto m3 = make_truncated_local(2, 2, 3);
  const Elem a = m3.parse_element("x"), b = m3.parse_element("y");
  const auto f = uni(m3, {b, a});
  EXPECT_TRUE(content_subset_property(f, f));
  const auto cf2 = content(poly_mul(f, f));
  const auto cfcf = ideal_product(content(f), content(f));
  EXPECT_TRUE(cf2.subset_of(cfcf));
  EXPECT_NE(cf2, cfcf);
  EXPECT_FALSE(cf2.contains(m3.mul(a, b)));
  EXPECT_EQ(cf2, gen(m3, {m3.mul(a, a), m3.mul(b, b)}));
}

TEST(Content, SubsetPropertyWithZero) {
  const auto z12 = make_zmod(12);
  EXPECT_TRUE(content_subset_property(Polynomial(z12, 1), uni(z12, {3, 5})));
}

TEST(DedekindMertens, Examples) {
  const auto z12 = make_zmod(12);
  EXPECT_EQ(dm_exponent(Polynomial::constant(z12, 1, 1), uni(z12, {4, 6, 3})), 1U);
  const auto m3 = make_truncated_local(2, 2, 3);
  const auto f = uni(m3, {m3.parse_element("y"), m3.parse_element("x")});
  EXPECT_EQ(dm_exponent(f, f), 2U);
  EXPECT_EQ(dm_exponent(f, f, 1), std::nullopt);
}

TEST(DedekindMertens, FormulaHoldsAtReturnedExponent) {
  const auto z8 = make_zmod(8);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) {
      const auto f = uni(z8, {a, b});
      const auto g = uni(z8, {b, 2, a});
      const auto n = dm_exponent(f, g);
      ASSERT_TRUE(n);
      const auto cf = content(f);
      EXPECT_EQ(ideal_product(ideal_power(cf, *n), content(g)),
                ideal_product(ideal_power(cf, *n - 1), content(poly_mul(f, g))));
    }
}

TEST(Bezout, EightXPlusFourOverZ12) {
  const auto z12 = make_zmod(12);
  const auto g = uni(z12, {4, 8});
  const auto bz = bezout_factor(g);
  EXPECT_EQ(bz.b, 4U);
  EXPECT_EQ(bz.r, (std::vector<Elem>{2, 1}));
  EXPECT_EQ(bz.s, (std::vector<Elem>{0, 1}));
  EXPECT_EQ(bz.d, 1U);
  EXPECT_EQ(bz.g_prime, uni(z12, {1, 2}));
  EXPECT_EQ(poly_scale(bz.g_prime, bz.b), g);
  EXPECT_TRUE(content(bz.g_prime).is_whole());
}

TEST(Bezout, TwoPlusTwoXOverZ4) {
  const auto z4 = make_zmod(4);
  const auto bz = bezout_factor(uni(z4, {2, 2}));
  EXPECT_EQ(bz.b, 2U);
  EXPECT_EQ(bz.r, (std::vector<Elem>{1, 1}));
  EXPECT_EQ(bz.s, (std::vector<Elem>{1, 0}));
  EXPECT_EQ(bz.d, 1U);
  EXPECT_EQ(bz.g_prime, uni(z4, {1, 1}));
}

TEST(Bezout, UnitContentKeepsPolynomial) {
  const auto z12 = make_zmod(12);
  const auto g = uni(z12, {6, 0, 1});
  const auto bz = bezout_factor(g);
  EXPECT_EQ(bz.b, 1U);
  EXPECT_EQ(bz.g_prime, g);
}

TEST(Bezout, FreshExponentOutsideSupport) {
  const auto z12 = make_zmod(12);
  EXPECT_EQ(fresh_exponent(uni(z12, {1, 1})), (Exponent{2}));
  EXPECT_EQ(fresh_exponent(uni(z12, {0, 1})), (Exponent{0}));
}

TEST(Bezout, ProductRingAndNonUnitD) {
  const auto r = parse_ring_spec("prod:zmod:4,zmod:6");
  for (Elem a = 1; a < r.order(); a += 5)
    for (Elem c = 0; c < r.order(); c += 7) {
      const auto g = uni(r, {a, c});
      const auto bz = bezout_factor(g);
      EXPECT_EQ(poly_scale(bz.g_prime, bz.b), g);
      EXPECT_TRUE(content(bz.g_prime).is_whole());
    }
}

TEST(Bezout, Rejections) {
  EXPECT_THROW(bezout_factor(Polynomial(make_zmod(12), 1)), std::invalid_argument);
  const auto m2 = make_truncated_local(2, 2, 2);
  EXPECT_THROW(bezout_factor(Polynomial::constant(m2, 1, 1)), std::invalid_argument);
}

TEST(Certificate, Z30SixExample) {
  const auto z30 = make_zmod(30);
  const std::vector<Polynomial> fs{Polynomial::constant(z30, 1, 2), uni(z30, {0, 3})};
  const auto cert = certify_content_product(gen(z30, {6}), fs);
  EXPECT_EQ(cert.exponents, (std::vector<unsigned>{1}));
  EXPECT_TRUE(cert.radical);
  EXPECT_TRUE(cert.final_containment);
  EXPECT_TRUE(cert.power_contained);
}

TEST(Certificate, Z6ZeroIdeal) {
  const auto z6 = make_zmod(6);
  const std::vector<Polynomial> fs{uni(z6, {0, 2}), uni(z6, {3, 3})};
  const auto cert = certify_content_product(zero_ideal(z6), fs);
  EXPECT_TRUE(cert.final_containment);
}

TEST(Certificate, ConstantOneIsTrivialStep) {
  const auto z30 = make_zmod(30);
  const std::vector<Polynomial> fs{Polynomial::constant(z30, 1, 1), uni(z30, {0, 6}),
                                   uni(z30, {5, 5})};
  const auto cert = certify_content_product(zero_ideal(z30), fs);
  ASSERT_EQ(cert.exponents.size(), 2U);
  EXPECT_EQ(cert.exponents[0], 1U);
  EXPECT_TRUE(cert.final_containment);
}

TEST(Certificate, PreconditionChecked) {
  const auto z30 = make_zmod(30);
  const std::vector<Polynomial> fs{Polynomial::constant(z30, 1, 2), uni(z30, {0, 5})};
  EXPECT_THROW(certify_content_product(gen(z30, {6}), fs), std::invalid_argument);
  const std::vector<Polynomial> one{Polynomial::constant(z30, 1, 0)};
  EXPECT_THROW(certify_content_product(gen(z30, {6}), one), std::invalid_argument);
}

TEST(Certificate, NonRadicalIdealKeepsPowerStep) {
  const auto z4 = make_zmod(4);
  const std::vector<Polynomial> fs{uni(z4, {2}), uni(z4, {2, 2})};
  const auto cert = certify_content_product(zero_ideal(z4), fs);
  EXPECT_FALSE(cert.radical);
  EXPECT_TRUE(cert.power_contained);
  EXPECT_TRUE(cert.final_containment);
}

TEST(ExtendedIdeal, Membership) {
  const auto z12 = make_zmod(12);
  EXPECT_TRUE(in_extended_ideal(uni(z12, {6, 0, 6}), gen(z12, {6})));
  EXPECT_FALSE(in_extended_ideal(uni(z12, {6, 3}), gen(z12, {6})));
}
