#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "carmichael/cyclotomic.hpp"
#include "carmichael/error.hpp"
#include "oracle_values.hpp"

using namespace carmichael;

namespace {
EisensteinIdeal ideal(std::vector<EisensteinPrimePower> parts) { return EisensteinIdeal(std::move(parts)); }
EisensteinPrimePower pp(u64 p, unsigned tag, unsigned e) { return {EisensteinPrimeIdeal::make(p, tag), e}; }

// First `digits` significant characters of a decimal string, sign and point included.
std::string head(std::string_view s, std::size_t digits) { return std::string(s.substr(0, digits)); }
}  // namespace

TEST(Ideals, SmallNorms) {
  EXPECT_EQ(ideals_up_to(1).size(), 1u);
  const auto four = ideals_up_to(4);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(four[1].signature(), "(2)");
  const auto seven = ideals_up_to(7);
  ASSERT_EQ(seven.size(), 4u);
  EXPECT_EQ(seven[2].norm(), 7u);
  EXPECT_EQ(seven[3].norm(), 7u);
  EXPECT_NE(seven[2], seven[3]);
  EXPECT_THROW(ideals_up_to(kIdealEnumerationMax + 1), ResourceLimitError);
}

TEST(Ideals, CountsMatchOracle) {
  EXPECT_EQ(ideals_up_to(100).size(), oracle::kIdealCount100);
  EXPECT_EQ(ideals_up_to(1000).size(), oracle::kIdealCount1000);
  EXPECT_EQ(ideals_up_to(10000).size(), oracle::kIdealCount10000);
}

TEST(Ideals, PerNormCountsMatchFormula) {
  std::map<u64, u64> per;
  for_each_ideal(5000, [&](const EisensteinIdeal& I) { ++per[I.norm()]; });
  for (u64 n = 1; n <= 5000; ++n) {
    const u64 have = per.count(n) ? per[n] : 0;
    EXPECT_EQ(have, ideal_count_formula(n)) << n;
  }
}

TEST(Ideals, ArithmeticAndDivisors) {
  const auto a = ideal({pp(7, 0, 1)});
  const auto b = ideal({pp(7, 1, 1), pp(2, 0, 1)});
  const auto ab = a * b;
  EXPECT_EQ(ab.norm(), 7u * 7u * 4u);
  EXPECT_EQ(ab.divisors().size(), 8u);
  EXPECT_FALSE(ab.norm_squarefree());
  EXPECT_EQ(EisensteinIdeal{}.signature(), "1");
  EXPECT_EQ(ideal({pp(7, 0, 1), pp(7, 0, 1)}), ideal({pp(7, 0, 2)}));
}

TEST(Nu, Examples) {
  EXPECT_EQ(nu(EisensteinIdeal{}), 1);
  EXPECT_EQ(nu(ideal({pp(2, 0, 1)})), -1);
  EXPECT_EQ(nu(ideal({pp(2, 0, 2)})), 0);
  EXPECT_EQ(nu(ideal({pp(7, 0, 1)})), 0);
  EXPECT_EQ(nu(ideal({pp(7, 0, 1), pp(7, 1, 1)})), -1);
  EXPECT_EQ(nu(ideal({pp(7, 0, 2)})), -1);
  EXPECT_EQ(nu(ideal({pp(7, 0, 2), pp(7, 1, 1)})), 1);
  EXPECT_EQ(nu(ideal({pp(7, 0, 3)})), 0);
  EXPECT_EQ(nu(ideal({pp(2, 0, 1), pp(5, 0, 1)})), 1);
}

TEST(Mobius, IdentityHolds) {
  const auto r = verify_mobius_identity(10'000, true);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, oracle::kIdealCount10000);
  EXPECT_EQ(r.rows.size(), r.checked);
  const std::string csv = mobius_csv(r);
  EXPECT_EQ(csv.rfind("norm,ideal_signature,divisor_sum,mu_squared,ok", 0), 0u);
  EXPECT_THROW(verify_mobius_identity(100'001), ResourceLimitError);
}

TEST(Zeta, PartialSumsMatchOracle) {
  struct Case {
    i64 num;
    u64 den;
    std::array<std::string_view, 3> expect;
  };
  const std::vector<Case> cases{
      {7, 12, {oracle::kZeta_7_12_1000, oracle::kZeta_7_12_10000, oracle::kZeta_7_12_100000}},
      {1, 3, {oracle::kZeta_1_3_1000, oracle::kZeta_1_3_10000, oracle::kZeta_1_3_100000}},
      {1, 1, {oracle::kZeta_1_1_1000, oracle::kZeta_1_1_10000, oracle::kZeta_1_1_100000}},
  };
  for (const auto& c : cases) {
    const auto z = zeta_nu_partial(c.num, c.den, std::vector<u64>{1000, 10000, 100000});
    ASSERT_EQ(z.exact_digits.size(), 3u);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(head(z.exact_digits[i], 26), head(c.expect[i], 26)) << c.num << "/" << c.den;
      EXPECT_NEAR(z.values[i], std::stod(std::string(c.expect[i])), 1e-12);
    }
    EXPECT_EQ(z.terms, oracle::kAbsNuTerms1e5);
    EXPECT_LT(z.error_bound, 1e-12);
  }
}

TEST(Zeta, DefaultBoundsAndMonotonicity) {
  const auto z = zeta_nu_partial(7, 12, 40'000);
  EXPECT_EQ(z.bounds, (std::vector<u64>{10'000, 20'000, 40'000}));
  EXPECT_LE(z.values[0], z.values[1]);
  EXPECT_LE(z.values[1], z.values[2]);
  EXPECT_THROW(zeta_nu_partial(0, 1, 100), PreconditionError);
  EXPECT_THROW(zeta_nu_partial(1, 2, std::vector<u64>{100, 50}), PreconditionError);
}

TEST(Zeta, WeightedTailInequality) {
  for (u64 Q : {1000u, 10000u, 100000u}) {
    const auto a = zeta_nu_partial(1, 3, Q).values.back();
    const auto b = zeta_nu_partial(7, 12, Q).values.back();
    EXPECT_LE(a, b * std::pow(static_cast<double>(Q), 0.25)) << Q;
  }
}
