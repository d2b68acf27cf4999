#include "hitchin/divisor.hpp"
#include "hitchin/errors.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <random>

namespace hf {
namespace {

Divisor D(const std::string& s) { return Divisor::parse(s); }

TEST(DivisorTest, ParseAndFormat) {
  EXPECT_EQ(D("2p+3q"), Divisor({{"p", 2}, {"q", 3}}));
  EXPECT_EQ(D(" 4p - 4p + q "), D("q"));
  EXPECT_EQ(D("0"), Divisor());
  EXPECT_EQ(D("0 "), Divisor());
  EXPECT_EQ(D("3q+2p").to_string(), "2p + 3q");
  EXPECT_EQ(D("-p+q").to_string(), "-p + q");
  EXPECT_THROW(D(""), Error);
  EXPECT_THROW(D("2+"), Error);
}

TEST(DivisorTest, Add) {
  EXPECT_EQ(add(D("2p"), D("p+q")), D("3p+q"));
  EXPECT_EQ(add(D("4p+3q"), Divisor()), D("4p+3q"));
  const Divisor c = add(D("4p+3q"), D("-4p"));
  EXPECT_EQ(c, D("3q"));
  EXPECT_EQ(c.terms().size(), 1u);
}

TEST(DivisorTest, Order) {
  EXPECT_TRUE(leq(D("p"), D("p+q")));
  EXPECT_EQ(min(D("2p+q"), D("p+3q")), D("p+q"));
  EXPECT_EQ(max(D("2p+q"), D("p+3q")), D("2p+3q"));
  EXPECT_FALSE(leq(D("2p"), D("3q")));
  EXPECT_FALSE(leq(D("3q"), D("2p")));
}

TEST(DivisorTest, EvenOddSplit) {
  auto s = even_odd_split(D("4p+3q"));
  EXPECT_EQ(s.even_part, D("4p"));
  EXPECT_EQ(s.odd_part, D("3q"));
  s = even_odd_split(Divisor());
  EXPECT_TRUE(s.even_part.is_zero() && s.odd_part.is_zero());
  s = even_odd_split(D("2p+2q"));
  EXPECT_EQ(s.even_part, D("2p+2q"));
  EXPECT_TRUE(s.odd_part.is_zero());
}

TEST(DivisorTest, Half) {
  EXPECT_EQ(half(D("4p+2q")), D("2p+q"));
  EXPECT_EQ(half(Divisor()), Divisor());
  try {
    half(D("3p"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddMultiplicity);
  }
}

TEST(DivisorTest, DPrimeS) {
  EXPECT_EQ(d_prime_s(D("4p+3q")), D("2p+q"));
  EXPECT_EQ(d_prime_s(D("p+q")), Divisor());
  EXPECT_EQ(d_prime_s(D("6p")), D("3p"));
}

TEST(DivisorTest, SubdivisorsCountAndOrder) {
  const auto subs = effective_subdivisors(D("2p+q"));
  ASSERT_EQ(subs.size(), 6u);
  EXPECT_TRUE(subs.front().is_zero());
  EXPECT_EQ(subs.back(), D("2p+q"));
  for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_LE(subs[i - 1].degree(), subs[i].degree());
}

TEST(DivisorTest, JsonSortedByLabel) {
  nlohmann::ordered_json j;
  to_json(j, D("3q+4p"));
  EXPECT_EQ(j.dump(), R"({"points":[{"label":"p","mult":4},{"label":"q","mult":3}]})");
  EXPECT_EQ(divisor_from_any(nlohmann::json::parse(j.dump())), D("4p+3q"));
  EXPECT_EQ(divisor_from_any(nlohmann::json("2p")), D("2p"));
  EXPECT_THROW(divisor_from_any(nlohmann::json::parse(R"({"points":[{"label":"p"}]})")), Error);
}

// Pointwise lattice laws against a brute-force oracle on coefficient vectors.
TEST(DivisorProperty, LatticeAndGroupLaws) {
  std::mt19937_64 rng(11);
  const char* labels[] = {"a", "b", "c", "d"};
  auto random_div = [&] {
    Divisor d;
    for (const char* l : labels) d.set(Point(l), static_cast<int>(rng() % 7) - 3);
    return d;
  };
  for (int i = 0; i < 300; ++i) {
    const Divisor a = random_div(), b = random_div(), c = random_div();
    EXPECT_EQ((a + b).degree(), a.degree() + b.degree());
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a - a, Divisor());
    EXPECT_TRUE(leq(min(a, b), a) && leq(min(a, b), b));
    EXPECT_TRUE(leq(a, max(a, b)) && leq(b, max(a, b)));
    EXPECT_EQ(min(a, b) + max(a, b), a + b);
    EXPECT_EQ(leq(a, b), min(a, b) == a);
    for (const char* l : labels) {
      EXPECT_EQ(min(a, b)(l), std::min(a(l), b(l)));
      EXPECT_EQ(max(a, b)(l), std::max(a(l), b(l)));
    }
    EXPECT_EQ(Divisor::parse(a.to_string()), a);
    EXPECT_EQ(half(2 * a), a);
  }
}

}  // namespace
}  // namespace hf
