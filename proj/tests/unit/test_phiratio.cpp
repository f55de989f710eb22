#include <gtest/gtest.h>

#include "carmichael/enumerate.hpp"
#include "carmichael/error.hpp"
#include "carmichael/phiratio.hpp"
#include "oracle_values.hpp"

using namespace carmichael;

TEST(Erdos, TermsMatchOracle) {
  const auto s = erdos_sequence(25);
  ASSERT_EQ(s.terms.size(), 25u);
  for (std::size_t i = 0; i < 25; ++i) EXPECT_EQ(s.terms[i], oracle::kErdos[i]) << i;
  EXPECT_EQ(s.prefix_ratios[4], mpq_class(oracle::kErdosRatio5Num, oracle::kErdosRatio5Den));
  EXPECT_LT(s.prefix_ratios[4], mpq_class(47, 100));
  EXPECT_EQ(verify_erdos_sequence(s), "");
  EXPECT_EQ(s.prefix_products[1].value(), 15);
}

TEST(Erdos, VerifierCatchesTampering) {
  auto s = erdos_sequence(10);
  s.terms[3] = 31;
  EXPECT_NE(verify_erdos_sequence(s), "");
  auto t = erdos_sequence(10);
  t.prefix_ratios[5] = t.prefix_ratios[4];
  EXPECT_NE(verify_erdos_sequence(t), "");
}

TEST(Erdos, RatiosStrictlyDecrease) {
  const auto s = erdos_sequence(60);
  for (std::size_t i = 1; i < s.prefix_ratios.size(); ++i) EXPECT_LT(s.prefix_ratios[i], s.prefix_ratios[i - 1]);
}

TEST(MinPhi, MatchesOracle) {
  const auto corpus = enumerate_products(10'000'000);
  const auto m = min_phi_ratio(corpus);
  ASSERT_EQ(m.size(), oracle::kMinPhiWitness.size());
  for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(m[i].n, oracle::kMinPhiWitness[i]) << m[i].bound;
  EXPECT_EQ(m.front().bound, 1000u);
  EXPECT_EQ(m.front().phi_num, 320u);
  EXPECT_EQ(m.front().phi_den, 561u);
  EXPECT_THROW(min_phi_ratio({}), PreconditionError);
}

TEST(DensityProbe, BinsCoverCorpus) {
  const auto corpus = enumerate_products(1'000'000);
  const auto h = density_probe(corpus, 10);
  ASSERT_EQ(h.size(), 10u);
  u64 total = 0;
  for (u64 c : h) total += c;
  EXPECT_EQ(total, corpus.size());
  EXPECT_EQ(density_probe(corpus, 1), std::vector<u64>{corpus.size()});
  EXPECT_NE(histogram_csv(h).find('\n'), std::string::npos);
}
