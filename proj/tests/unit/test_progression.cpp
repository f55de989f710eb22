#include <gtest/gtest.h>

#include "carmichael/compat.hpp"
#include "carmichael/error.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/progression.hpp"

using namespace carmichael;

TEST(NeedsReduction, Examples) {
  EXPECT_EQ(needs_reduction(1, 5), ReductionKind::None);
  EXPECT_EQ(needs_reduction(0, 3), ReductionKind::None);
  EXPECT_EQ(needs_reduction(10, 15), ReductionKind::Joint);
  EXPECT_THROW(needs_reduction(0, 9), PreconditionError);
}

TEST(ApplyReduction, ResultIsCompatibleSubclass) {
  for (u64 m = 2; m <= 60; ++m) {
    for (u64 r = 0; r < m; ++r) {
      if (!classify(static_cast<i64>(r), m).compatible()) continue;
      const auto kind = needs_reduction(static_cast<i64>(r), m);
      if (kind == ReductionKind::None) continue;
      const auto step = apply_reduction(static_cast<i64>(r), m, kind);
      EXPECT_EQ(step.after.modulus % m, 0u);
      EXPECT_EQ(step.after.value % m, r);
      EXPECT_EQ(step.after.value % step.p, 0u);
      EXPECT_TRUE(classify(step.after).compatible()) << r << " mod " << m;
    }
  }
}

TEST(Parity, OddOrderExamples) {
  EXPECT_TRUE(has_odd_order(4, 7));
  EXPECT_FALSE(has_odd_order(3, 7));
}

TEST(DeriveParams, CriterionClasses) {
  for (auto [r, m] : std::vector<std::pair<i64, u64>>{{0, 3}, {1, 4}, {1, 5}, {2, 3}, {1, 2}}) {
    const auto t = derive_params(r, m);
    EXPECT_TRUE(check_trace(t).empty()) << r << " mod " << m << ": " << check_trace(t).front();
    EXPECT_NO_THROW(t.seed_params().validate());
  }
}

TEST(DeriveParams, EveryCompatibleClassUpTo40) {
  std::size_t derived = 0, starved = 0;
  for (u64 m = 1; m <= 40; ++m) {
    for (u64 r = 0; r < m; ++r) {
      if (!classify(static_cast<i64>(r), m).compatible()) continue;
      try {
        const auto t = derive_params(static_cast<i64>(r), m);
        const auto bad = check_trace(t);
        EXPECT_TRUE(bad.empty()) << r << " mod " << m << ": " << bad.front();
        ++derived;
      } catch (const ResourceLimitError&) {
        ++starved;
      }
    }
  }
  EXPECT_GT(derived, 0u);
  EXPECT_EQ(starved, 0u);
}

TEST(DeriveParams, TamperedTraceIsCaught) {
  auto t = derive_params(1, 5);
  t.l0 += 1;
  EXPECT_FALSE(check_trace(t).empty());
  auto u = derive_params(2, 3);
  u.a0.value = (u.a0.value + 4) % u.a0.modulus;
  EXPECT_FALSE(check_trace(u).empty());
}

TEST(FindP, ResultSatisfiesConditions) {
  const auto t = derive_params(1, 5);
  const FindPResult& P = t.P;
  EXPECT_TRUE(P.ell == 2 || P.ell == 3);
  EXPECT_EQ(P.P.omega(), P.ell);
  EXPECT_TRUE(P.P.is_squarefree());
  EXPECT_EQ(P.lambda_half % 2, 1u);
  EXPECT_EQ(P.order_mod_q % 2, 1u);
  EXPECT_EQ(P.order_mod_half % 2, 1u);
}

TEST(FindP, StarvedStageIsNamed) {
  ProgressionConfig tight;
  tight.prime_ceiling = 5;
  try {
    derive_params(1, 5, tight);
    FAIL() << "expected a resource limit";
  } catch (const ResourceLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("stage"), std::string::npos);
  }
}

TEST(EndToEnd, CorpusWitnesses) {
  const auto corpus = enumerate_products(1'000'000);
  const auto a = end_to_end(0, 3, corpus);
  ASSERT_FALSE(a.witnesses.empty());
  EXPECT_EQ(a.witnesses[0].n, 561);
  EXPECT_EQ(a.witnesses[0].method, "corpus");
  const auto b = end_to_end(1, 4, corpus);
  ASSERT_FALSE(b.witnesses.empty());
  EXPECT_EQ(b.witnesses[0].n, 561);
  EXPECT_THROW(end_to_end(0, 9, corpus), PreconditionError);
  for (const auto& res : {a, b}) {
    for (const auto& w : res.witnesses) EXPECT_TRUE(is_carmichael(w.n));
  }
}

TEST(EndToEnd, WitnessesLieInTheClass) {
  const auto corpus = enumerate_products(1'000'000);
  for (u64 m = 3; m <= 12; ++m) {
    for (u64 r = 0; r < m; ++r) {
      if (!classify(static_cast<i64>(r), m).compatible()) continue;
      ProgressionConfig quick;
      quick.try_construct = false;
      const auto res = end_to_end(static_cast<i64>(r), m, corpus, quick);
      for (const auto& w : res.witnesses) {
        EXPECT_EQ(mod_u64(w.n, m), r);
        EXPECT_TRUE(is_carmichael(w.n));
      }
      if (res.witnesses.empty()) EXPECT_FALSE(res.notes.empty());
    }
  }
}

TEST(Output, JsonAndTranscript) {
  const auto t = derive_params(10, 15);
  const std::string j = to_json(t);
  EXPECT_NE(j.find("\"joint\""), std::string::npos);
  EXPECT_NE(transcript(t).find("invariants   all hold"), std::string::npos);
}
