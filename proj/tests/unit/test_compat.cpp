#include <gtest/gtest.h>

#include "carmichael/compat.hpp"
#include "carmichael/enumerate.hpp"
#include "carmichael/error.hpp"
#include "oracle_values.hpp"

using namespace carmichael;

TEST(Classify, Examples) {
  const auto v09 = classify(0, 9);
  EXPECT_EQ(v09.reason, IncompatReason::GcdCondition);
  EXPECT_EQ(v09.g, 9u);
  for (u64 m = 1; m <= 300; ++m) EXPECT_TRUE(classify(1, m).compatible()) << m;
  EXPECT_EQ(classify(15, 36).reason, IncompatReason::Mod12Condition);
  const auto v03 = classify(0, 3);
  EXPECT_TRUE(v03.compatible());
  EXPECT_EQ(v03.g, 3u);
  EXPECT_EQ(v03.h, 1u);
  EXPECT_EQ(classify(-1, 7).r.value, 6u);
}

TEST(Classify, EvenGcdIsIncompatible) {
  for (u64 m = 2; m <= 200; m += 2) {
    for (u64 r = 0; r < m; r += 2) EXPECT_FALSE(classify(static_cast<i64>(r), m).compatible()) << r << " " << m;
  }
}

TEST(Classify, OrderCondition) {
  EXPECT_TRUE(classify(7, 49).compatible());
  EXPECT_TRUE(classify(7, 21).compatible());  // 8911 = 7 (mod 21)
  std::size_t hits = 0;
  for (u64 m = 2; m <= 120; ++m) {
    for (u64 r = 0; r < m; ++r) hits += classify(static_cast<i64>(r), m).reason == IncompatReason::OrderCondition;
  }
  EXPECT_GT(hits, 0u);
}

TEST(Necessity, CorpusNeverLandsInIncompatibleClass) {
  const auto corpus = enumerate_products(100'000);
  const auto rep = validate_necessity(corpus, 50);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.records_checked, 16u);
  EXPECT_TRUE(classify(Residue::of(u64{561}, 2)).compatible());
  EXPECT_TRUE(classify(0, 561).compatible());
}

TEST(Coverage, SmallModuliWitnessesMatchOracle) {
  const auto corpus = enumerate_products(10'000'000);
  for (std::size_t i = 0; i < oracle::kClassWitness.size(); i += 3) {
    const u64 r = oracle::kClassWitness[i], m = oracle::kClassWitness[i + 1], w = oracle::kClassWitness[i + 2];
    const auto table = coverage_for_modulus(corpus, m);
    ASSERT_EQ(table.size(), m);
    const auto& e = table[r];
    EXPECT_EQ(e.first_witness.value_or(0), w) << r << " mod " << m;
    if (!e.verdict.compatible()) EXPECT_EQ(w, 0u);
  }
}

TEST(Coverage, CsvShape) {
  const auto corpus = enumerate_products(10'000);
  const std::string csv = coverage_csv(coverage_report(corpus, 4));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "r,m,g,h,verdict,reason,first_witness");
  EXPECT_NE(csv.find("0,3,3,1,compatible,none,561"), std::string::npos);
  EXPECT_NE(csv.find("0,4,4,2,incompatible,gcd,"), std::string::npos);
}
