#include <gtest/gtest.h>

#include "carmichael/enumerate.hpp"
#include "carmichael/error.hpp"
#include "carmichael/korselt.hpp"
#include "oracle_values.hpp"

using namespace carmichael;

namespace {
FactoredInt fp(std::initializer_list<u64> ps) {
  std::vector<u64> v(ps);
  return FactoredInt::from_primes(v);
}
}  // namespace

TEST(Korselt, Examples) {
  EXPECT_TRUE(is_carmichael(u64{561}));
  EXPECT_FALSE(is_carmichael(u64{9}));
  EXPECT_TRUE(is_carmichael(u64{1105}));
  EXPECT_FALSE(is_carmichael(u64{1}));
  EXPECT_FALSE(is_carmichael(u64{2}));
  EXPECT_FALSE(is_carmichael(u64{562}));
}

TEST(Korselt, MatchesOracleListBelowMillion) {
  std::vector<u64> found;
  for (u64 n = 1; n <= 1'000'000; ++n) {
    if (is_carmichael(n)) found.push_back(n);
  }
  EXPECT_EQ(found, std::vector<u64>(oracle::kCarmichaelTo1e6.begin(), oracle::kCarmichaelTo1e6.end()));
}

TEST(Korselt, FermatPropertyHoldsForEveryBase) {
  for (u64 n : oracle::kCarmichaelTo1e6) {
    if (n > 100'000) break;
    for (u64 a = 2; a < 200; ++a) ASSERT_EQ(powmod(a, n, n), a % n) << a << "^" << n;
  }
}

TEST(Korselt, BigIntInput) {
  EXPECT_TRUE(is_carmichael(BigInt("45790928510041")));  // 11·13·29·43·61·71·211·281
  EXPECT_FALSE(is_carmichael(BigInt("45790928510043")));
  const FactoredInt f = fp({11, 13, 29, 43, 61, 71, 211, 281});
  EXPECT_TRUE(is_carmichael(f));
  EXPECT_FALSE(is_carmichael(f * fp({3})));
}

TEST(Seed, Examples) {
  const SeedParams params{Residue{3, 4}, FactoredInt{}, 1};
  EXPECT_TRUE(check_seed(fp({7, 19, 67}), params).valid());
  const auto bad = check_seed(fp({3, 11, 17}), params);
  EXPECT_FALSE(bad.valid());
  bool flagged = false;
  for (const auto& c : bad.per_prime) flagged = flagged || (c.p == 17 && !c.residue_ok);
  EXPECT_TRUE(flagged);
  const SeedParams l3{Residue{3, 4}, FactoredInt{}, 3};
  EXPECT_FALSE(check_seed(FactoredInt{}, l3).valid());
}

TEST(Seed, MalformedParamsRejected) {
  EXPECT_THROW(check_seed(fp({7}), SeedParams{Residue{1, 4}, FactoredInt{}, 1}), PreconditionError);  // a0 - 1 shares 4
  EXPECT_THROW(check_seed(fp({7}), SeedParams{Residue{3, 4}, fp({2}), 1}), PreconditionError);        // even m0
  EXPECT_THROW(check_seed(fp({7}), SeedParams{Residue{3, 4}, FactoredInt{}, 4}), PreconditionError);  // 4 | l0
}

TEST(Assembly, Examples) {
  const SeedParams unit{Residue{3, 4}, FactoredInt{}, 1};
  const auto cert = check_seed(fp({7, 19, 67}), unit);
  ASSERT_TRUE(cert.valid());
  EXPECT_TRUE(check_assembly(FactoredInt{}, FactoredInt{}, cert, Residue::of(u64{8911}, 10)));
  EXPECT_FALSE(check_assembly(FactoredInt{}, FactoredInt{}, cert, Residue{0, 10}));
  EXPECT_THROW(check_assembly(fp({7}), FactoredInt{}, cert, Residue{0, 1}), OverlapError);
}

TEST(Assembly, ThreeTimesSeedOf561) {
  // 561 = 3·(11·17): against m0 = 3 the seed conditions reduce to (p - 1)/2 | 3·187 - 1.
  const SeedParams p3{Residue{3, 4}, fp({3}), 1};
  const auto cert = check_seed(fp({11, 17}), p3);
  for (const auto& c : cert.per_prime) EXPECT_TRUE(c.half_divides) << c.p;
  EXPECT_FALSE(cert.valid());  // 17 = 1 mod 4
  EXPECT_TRUE(is_carmichael(fp({3, 11, 17})));
}

TEST(Chernick, OracleCount) {
  const auto scan = chernick_scan(10'000);
  EXPECT_EQ(scan.size(), oracle::kChernickCount);
  u64 ksum = 0;
  for (const auto& e : scan) {
    ksum += e.k;
    EXPECT_TRUE(is_carmichael(e.n));
  }
  EXPECT_EQ(ksum, oracle::kChernickKSum);
  ASSERT_FALSE(scan.empty());
  EXPECT_EQ(scan.front().k, 1u);
  EXPECT_EQ(scan.front().n.value(), 1729);
  for (const auto& e : scan) EXPECT_NE(e.k, 2u);
}
