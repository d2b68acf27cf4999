#include "hitchin/series.hpp"

#include <gtest/gtest.h>

#include <random>

namespace hf {
namespace {

using L = Laurent<Gaussian>;

TEST(RationalTest, FormatAlwaysHasDenominator) {
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(Rational(-2) / 4), "-1/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
}

TEST(RationalTest, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
}

TEST(GaussianTest, FieldIdentities) {
  const Gaussian i = Gaussian::i();
  EXPECT_EQ(i * i, Gaussian(-1));
  const Gaussian z(Rational(3, 2), Rational(-5, 7));
  EXPECT_EQ(z * (Gaussian(1) / z), Gaussian(1));
  EXPECT_EQ(z * z.conj(), Gaussian(z.norm()));
  EXPECT_THROW(Gaussian(1) / Gaussian(0), Error);
}

TEST(JetTest, CauchyProductTruncates) {
  Jet<Rational> a(4, {1, 1});  // 1 + t
  Jet<Rational> b(4, {1, -1, 1, -1});
  EXPECT_EQ(a * b, Jet<Rational>(4, {1, 0, 0, 0}));
  EXPECT_EQ(a.shifted(2), Jet<Rational>(4, {0, 0, 1, 1}));
  EXPECT_EQ(a.shifted(-1), Jet<Rational>(4, {1}));
  EXPECT_EQ(Jet<Rational>(4, {0, 0, 5}).valuation(), 2);
  EXPECT_FALSE(Jet<Rational>(3).valuation());
}

TEST(LaurentTest, GeometricSeriesInverse) {
  // 1/(1 - t) = sum t^k
  const L one_minus_t(0, {Gaussian(1), Gaussian(-1)});
  const L inv = one_minus_t.inverse(6);
  EXPECT_EQ(inv.precision(), 6);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(inv.coeff(k), Gaussian(1));
  EXPECT_THROW(inv.coeff(6), Error);
}

TEST(LaurentTest, InverseOfMonomialHasPole) {
  const L s = L::monomial(3, Gaussian(2));
  const L inv = s.inverse(2);
  EXPECT_EQ(inv.valuation(), -3);
  EXPECT_EQ(inv.coeff(-3), Gaussian(Rational(1, 2)));
  EXPECT_TRUE(agree(s * inv, L::constant(1), 2));
}

TEST(LaurentTest, ProductPrecisionRule) {
  const L a = L(1, {Gaussian(1), Gaussian(2)}, 4);  // t + 2t^2 + O(t^4)
  const L b = L(-2, {Gaussian(1)}, 1);               // t^-2 + O(t)
  const L c = a * b;
  // min(1 + 1, -2 + 4) = 2
  EXPECT_EQ(c.precision(), 2);
  EXPECT_EQ(c.coeff(-1), Gaussian(1));
  EXPECT_EQ(c.coeff(0), Gaussian(2));
}

TEST(LaurentTest, DivisionMultipliesBack) {
  std::mt19937_64 rng(7);
  auto draw = [&] { return Gaussian(Rational(static_cast<long>(rng() % 11) - 5) / (1 + static_cast<long>(rng() % 3))); };
  for (int trial = 0; trial < 50; ++trial) {
    const int v = static_cast<int>(rng() % 4);
    std::vector<Gaussian> bc{Gaussian(1 + static_cast<long>(rng() % 3))};
    for (int k = 0; k < 5; ++k) bc.push_back(draw());
    std::vector<Gaussian> ac;
    for (int k = 0; k < 4; ++k) ac.push_back(draw());
    const L a(0, ac), b(v, bc);
    const int prec = 5;
    const L q = divide(a, b, prec);
    // q b agrees with a wherever q b is known.
    const L back = q * b;
    EXPECT_GE(back.precision(), prec + v);
    EXPECT_TRUE(agree(back, a, back.precision()));
  }
}

TEST(LaurentTest, ZeroDividend) {
  const L q = divide(L::zero(), L::monomial(2), 3);
  EXPECT_TRUE(q.is_zero());
  EXPECT_THROW(divide(L::constant(1), L::zero(5), 3), Error);
}

}  // namespace
}  // namespace hf
