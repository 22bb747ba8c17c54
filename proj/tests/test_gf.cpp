#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

namespace hamlift {
namespace {

TEST(MakeField, PrimeField61) {
  const Field f = make_field(61, 1);
  EXPECT_EQ(f.order(), 61u);
  EXPECT_EQ(f.characteristic(), 61u);
  EXPECT_EQ(f.degree(), 1u);
  // Smallest primitive root mod 61, by stepping powers with plain integers.
  std::uint32_t smallest = 0;
  for (std::uint32_t g = 1; g < 61 && smallest == 0; ++g) {
    std::uint32_t x = g, n = 1;
    while (x != 1) x = x * g % 61, ++n;
    if (n == 60) smallest = g;
  }
  EXPECT_EQ(smallest, 2u);
  EXPECT_EQ(f.theta(), f.from_int(2));
}

TEST(MakeField, Field81IsAdmissible) {
  const Field f = make_field(3, 4);
  EXPECT_EQ(f.order(), 81u);
  EXPECT_EQ((f.order() + 1) / 2, 41u);
  EXPECT_TRUE(oracle::prime_by_trial(41));
  EXPECT_EQ((f.order() - 1) % 10, 0u);
}

TEST(MakeField, TwoElementField) {
  const Field f = make_field(2, 1);
  EXPECT_EQ(f.order(), 2u);
  EXPECT_EQ(f.theta(), f.one());
}

TEST(MakeField, RejectsBadParameters) {
  EXPECT_THROW(make_field(4, 1), parameter_error);
  EXPECT_THROW(make_field(1, 1), parameter_error);
  EXPECT_THROW(make_field(3, 0), parameter_error);
  EXPECT_THROW(make_field(2, 40), parameter_error);
}

// The table-driven product agrees with schoolbook multiplication modulo the
// chosen modulus, and the product has no zero divisors (so the modulus is
// irreducible). Smaller tails all admit zero divisors.
class FieldConstruction : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldConstruction, ModulusIsSmallestIrreducible) {
  const auto [s, m] = GetParam();
  const Field f = make_field(s, m);
  const auto& mod = f.modulus();
  ASSERT_EQ(mod.size(), static_cast<std::size_t>(m + 1));
  EXPECT_EQ(mod.back(), 1u);

  const auto has_zero_divisor = [&](const std::vector<std::uint32_t>& modulus) {
    for (auto x : f.elements())
      for (auto y : f.elements()) {
        if (x.is_zero() || y.is_zero() || y < x) continue;
        const auto z = oracle::naive_mul(f, f.coeffs(x), f.coeffs(y), modulus);
        if (std::all_of(z.begin(), z.end(), [](auto c) { return c == 0; })) return true;
      }
    return false;
  };
  EXPECT_FALSE(has_zero_divisor(mod));
  if (m > 1) {
    // Every lexicographically smaller monic tail is reducible.
    std::vector<std::uint32_t> tail(m, 0);
    const std::vector<std::uint32_t> chosen(mod.begin(), mod.end() - 1);
    while (tail != chosen) {
      auto full = tail;
      full.push_back(1);
      EXPECT_TRUE(has_zero_divisor(full));
      detail::next_lex(tail, s);
    }
  }
}

TEST_P(FieldConstruction, TableProductMatchesSchoolbook) {
  const auto [s, m] = GetParam();
  const Field f = make_field(s, m);
  for (auto x : f.elements())
    for (auto y : f.elements())
      ASSERT_EQ(f.coeffs(f.mul(x, y)), oracle::naive_mul(f, f.coeffs(x), f.coeffs(y), f.modulus()));
}

TEST_P(FieldConstruction, ThetaIsSmallestGenerator) {
  const auto [s, m] = GetParam();
  const Field f = make_field(s, m);
  EXPECT_EQ(oracle::naive_order(f, f.coeffs(f.theta()), f.modulus()), f.order() - 1);
  for (std::uint32_t c = 1; c < f.theta().code(); ++c)
    EXPECT_LT(oracle::naive_order(f, f.coeffs(FieldElement(c)), f.modulus()), f.order() - 1);
}

INSTANTIATE_TEST_SUITE_P(Desk, FieldConstruction,
                         ::testing::Values(std::pair{61, 1}, std::pair{3, 4}, std::pair{11, 2}, std::pair{2, 4},
                                           std::pair{5, 2}));

TEST(Arithmetic, Identities) {
  const Field f = make_field(3, 4);
  const FieldElement x = f.parse("[1,2,0,1]");
  EXPECT_EQ(f.add(x, f.zero()), x);
  EXPECT_EQ(f.mul(x, f.one()), x);
  EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
  EXPECT_EQ(f.sub(x, x), f.zero());
}

TEST(Arithmetic, HalfPowerOfThetaIsMinusOne) {
  for (auto [s, m] : {std::pair{61, 1}, {3, 4}, {11, 2}}) {
    const Field f = make_field(s, m);
    EXPECT_EQ(f.pow(f.theta(), (f.order() - 1) / 2), f.neg(f.one()));
  }
}

TEST(Arithmetic, InverseOfTwoMod61) {
  const Field f = make_field(61, 1);
  std::uint32_t oracle_inv = 0;
  for (std::uint32_t y = 1; y < 61; ++y)
    if (2 * y % 61 == 1) oracle_inv = y;
  EXPECT_EQ(oracle_inv, 31u);
  EXPECT_EQ(f.mul(f.from_int(2), f.from_int(31)), f.one());
  EXPECT_EQ(f.inv(f.from_int(2)), f.from_int(31));
}

TEST(Arithmetic, ZeroErrors) {
  const Field f = make_field(61, 1);
  EXPECT_THROW(f.inv(f.zero()), std::domain_error);
  EXPECT_THROW(f.pow(f.zero(), -1), std::domain_error);
  EXPECT_THROW(f.dlog(f.zero()), std::domain_error);
  EXPECT_EQ(f.pow(f.zero(), 0), f.one());
  EXPECT_EQ(f.pow(f.zero(), 3), f.zero());
}

TEST(Pow, Basics) {
  const Field f = make_field(3, 4);
  EXPECT_EQ(f.pow(f.theta(), f.order() - 1), f.one());
  for (auto x : f.elements()) EXPECT_EQ(f.pow(x, 1), x);
  // theta^10 in GF(81): order by stepping.
  const FieldElement y = f.pow(f.theta(), 10);
  FieldElement cur = y;
  int n = 1;
  while (cur != f.one()) cur = f.mul(cur, y), ++n;
  EXPECT_EQ(n, 8);
  EXPECT_EQ(f.mult_order(y), 8u);
}

TEST(Pow, MatchesRepeatedProduct) {
  const Field f = make_field(11, 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> any(1, f.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldElement x(any(rng));
    FieldElement acc = f.one();
    for (int e = 0; e <= 300; ++e) {
      ASSERT_EQ(f.pow(x, e), acc);
      ASSERT_EQ(f.mul(f.pow(x, -e), acc), f.one());
      acc = f.mul(acc, x);
    }
  }
}

TEST(Dlog, Examples) {
  const Field f = make_field(61, 1);
  EXPECT_EQ(f.dlog(f.one()), 0u);
  EXPECT_EQ(f.dlog(f.neg(f.one())), 30u);
  EXPECT_EQ(f.dlog(f.from_int(4)), 2u);
  const Field g = make_field(3, 4);
  EXPECT_EQ(g.dlog(g.neg(g.one())), 40u);
}

class FieldProperties : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldProperties, RingAxiomsOnRandomTriples) {
  const auto [s, m] = GetParam();
  const Field f = make_field(s, m);
  std::mt19937_64 rng(s * 1000 + m);
  std::uniform_int_distribution<std::uint32_t> any(0, f.order() - 1);
  for (int i = 0; i < 1000; ++i) {
    const FieldElement x(any(rng)), y(any(rng)), z(any(rng));
    ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
    ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
    ASSERT_EQ(f.add(x, y), f.add(y, x));
    ASSERT_EQ(f.mul(x, y), f.mul(y, x));
    ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
  }
}

TEST_P(FieldProperties, InversesLogsAndBijection) {
  const auto [s, m] = GetParam();
  const Field f = make_field(s, m);
  for (auto x : f.elements()) {
    if (x.is_zero()) continue;
    ASSERT_EQ(f.mul(x, f.inv(x)), f.one());
  }
  std::set<std::uint32_t> image;
  for (std::uint32_t e = 0; e + 1 < f.order(); ++e) {
    const FieldElement x = f.pow(f.theta(), e);
    ASSERT_EQ(f.dlog(x), e);
    image.insert(x.code());
  }
  EXPECT_EQ(image.size(), f.order() - 1);
  EXPECT_FALSE(image.contains(0));
}

TEST_P(FieldProperties, SquareRoots) {
  const auto [s, m] = GetParam();
  const Field f = make_field(s, m);
  std::size_t squares = 0;
  for (auto x : f.elements()) {
    const auto r = f.sqrt(x);
    if (!r) continue;
    ++squares;
    ASSERT_EQ(f.mul(*r, *r), x);
  }
  EXPECT_EQ(squares, s == 2 ? f.order() : (f.order() + 1) / 2);
}

TEST_P(FieldProperties, SerializationRoundTrips) {
  const auto [s, m] = GetParam();
  const Field f = make_field(s, m);
  for (auto x : f.elements()) ASSERT_EQ(f.parse(f.to_string(x)), x);
}

INSTANTIATE_TEST_SUITE_P(Desk, FieldProperties,
                         ::testing::Values(std::pair{61, 1}, std::pair{3, 4}, std::pair{11, 2}, std::pair{2, 5},
                                           std::pair{7, 3}));

TEST(Serialization, Format) {
  const Field p = make_field(61, 1);
  EXPECT_EQ(p.to_string(p.from_int(7)), "7");
  const Field f = make_field(3, 4);
  const std::vector<std::uint32_t> c{2, 0, 1, 1};
  EXPECT_EQ(f.to_string(f.from_coeffs(c)), "[2,0,1,1]");
  EXPECT_EQ(f.coeffs(f.parse("[2,0,1,1]")), c);
  EXPECT_EQ(f.to_string(f.one()), "[1,0,0,0]");
  EXPECT_THROW(f.parse("[3,0,0,0]"), parameter_error);
  EXPECT_THROW(f.parse("[1,0,0]"), parameter_error);
  EXPECT_THROW(f.parse("7"), parameter_error);
  EXPECT_THROW(p.parse("x"), parameter_error);
}

}  // namespace
}  // namespace hamlift
