#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "carmichael/enumerate.hpp"
#include "carmichael/error.hpp"
#include "carmichael/korselt.hpp"
#include "oracle_values.hpp"

using namespace carmichael;

namespace {
std::vector<u64> values(const std::vector<CarmichaelRecord>& rs) {
  std::vector<u64> v;
  for (const auto& r : rs) v.push_back(r.n);
  return v;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("carmichael_test_" + name);
}
}  // namespace

TEST(Enumerate, ScanSmallLimits) {
  EXPECT_EQ(values(enumerate_scan(10'000)), (std::vector<u64>{561, 1105, 1729, 2465, 2821, 6601, 8911}));
  EXPECT_TRUE(enumerate_scan(500).empty());
  EXPECT_EQ(values(enumerate_scan(561)), std::vector<u64>{561});
  EXPECT_THROW(enumerate_scan(kScanMaxLimit + 1), ResourceLimitError);
}

TEST(Enumerate, ProductsMatchOracleCounts) {
  for (const auto& [bound, count] : oracle::kCarmichaelCounts) {
    const auto rs = enumerate_products(bound);
    EXPECT_EQ(rs.size(), count) << bound;
  }
  EXPECT_EQ(enumerate_products(1'000'000).size(), 43u);
}

TEST(Enumerate, ProductsEqualScanTo1e6) {
  EXPECT_EQ(enumerate_products(1'000'000), enumerate_scan(1'000'000));
}

TEST(Enumerate, MaxOmegaRestricts) {
  EXPECT_EQ(enumerate_products(10'000, 3).size(), 7u);
  for (const auto& r : enumerate_products(1'000'000, 3)) EXPECT_EQ(r.omega(), 3u);
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  EXPECT_EQ(enumerate_products(1'000'000, 0, 1), enumerate_products(1'000'000, 0, 4));
  EXPECT_EQ(enumerate_scan(200'000, 1), enumerate_scan(200'000, 3));
}

TEST(Enumerate, RecordsAreSound) {
  for (const auto& r : enumerate_products(10'000'000)) {
    ASSERT_TRUE(is_carmichael(r.n));
    ASSERT_TRUE(std::is_sorted(r.factors.begin(), r.factors.end()));
    const FactoredInt f = factorize(r.n);
    ASSERT_EQ(f.primes(), r.factors);
    BigInt phi = euler_phi(f);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), phi.get_mpz_t(), to_big(r.n).get_mpz_t());
    EXPECT_EQ(to_big(r.phi_num), BigInt(phi / g));
    EXPECT_EQ(to_big(r.phi_den), BigInt(to_big(r.n) / g));
  }
}

TEST(Enumerate, MakeRecordRejectsNonCarmichael) {
  EXPECT_THROW(make_record({2, 281}), PreconditionError);
  EXPECT_EQ(make_record({3, 11, 17}).n, 561u);
}

TEST(Cache, RoundTrip) {
  const auto path = temp_file("roundtrip.txt");
  const auto rs = enumerate_products(10'000);
  save_cache(path, rs, 10'000);
  const auto back = load_cache(path);
  EXPECT_EQ(back.limit, 10'000u);
  EXPECT_EQ(back.records, rs);
  std::filesystem::remove(path);
}

TEST(Cache, TamperedLineIsCorrupt) {
  const auto path = temp_file("tampered.txt");
  {
    std::ofstream out(path);
    out << "carmichael-cache v1 limit=1000\n561:3,11,17\n562:2,281\n";
  }
  CacheLoadOptions all;
  all.sample_fraction = 1.0;
  EXPECT_THROW(load_cache(path, all), CorruptFileError);
  EXPECT_THROW(load_cache(path), CorruptFileError);  // the product check alone already fails
  std::filesystem::remove(path);
}

TEST(Cache, EmptyAndMissing) {
  const auto path = temp_file("empty.txt");
  { std::ofstream out(path); }
  EXPECT_TRUE(load_cache(path).records.empty());
  std::filesystem::remove(path);
  EXPECT_THROW(load_cache(path), NotFoundError);
}

TEST(Cache, UnsortedIsCorrupt) {
  const auto path = temp_file("unsorted.txt");
  {
    std::ofstream out(path);
    out << "carmichael-cache v1 limit=2000\n1105:5,13,17\n561:3,11,17\n";
  }
  EXPECT_THROW(load_cache(path), CorruptFileError);
  std::filesystem::remove(path);
}
