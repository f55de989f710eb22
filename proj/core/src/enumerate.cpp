#include "carmichael/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "carmichael/error.hpp"
#include "carmichael/korselt.hpp"

namespace carmichael {

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

bool korselt_primes(u64 n, const std::vector<u64>& primes) {
  if (primes.size() < 2) return false;
  for (u64 p : primes) {
    if ((n - 1) % (p - 1) != 0) return false;
  }
  return true;
}

void sort_records(std::vector<CarmichaelRecord>& out) {
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
}

}  // namespace

CarmichaelRecord make_record(std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  FactoredInt f = FactoredInt::from_primes(primes);
  if (!is_carmichael(f)) throw PreconditionError("make_record: " + f.to_string() + " is not a Carmichael number");
  CarmichaelRecord r;
  r.n = f.to_u64();
  r.factors = std::move(primes);
  u64 num = 1;
  for (u64 p : r.factors) num *= p - 1;
  const u64 g = std::gcd(num, r.n);
  r.phi_num = num / g;
  r.phi_den = r.n / g;
  return r;
}

std::vector<CarmichaelRecord> enumerate_scan(u64 limit, unsigned threads) {
  if (limit > kScanMaxLimit) {
    throw ResourceLimitError("enumerate_scan: limit " + std::to_string(limit) + " exceeds " +
                             std::to_string(kScanMaxLimit));
  }
  if (limit < 561) return {};
  const SmallestPrimeFactorSieve sieve(limit);
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<CarmichaelRecord>> parts(workers);
  auto work = [&](unsigned id) {
    const u64 span = limit / workers + 1;
    u64 lo = std::max<u64>(3, id * span);
    u64 hi = std::min(limit, (id + 1) * span - 1);
    if (lo % 2 == 0) ++lo;
    std::vector<u64> primes;
    for (u64 n = lo; n <= hi; n += 2) {
      if (sieve.is_prime(n)) continue;
      if (!sieve.squarefree_primes(n, primes)) continue;
      if (korselt_primes(n, primes)) parts[id].push_back(make_record(primes));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work, i);
  work(0);
  for (auto& t : pool) t.join();
  std::vector<CarmichaelRecord> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  sort_records(out);
  return out;
}

namespace {

class ProductSearch {
 public:
  ProductSearch(u64 limit, unsigned max_omega, const std::vector<u64>& primes)
      : limit_(limit), max_omega_(max_omega), primes_(primes) {}

  void run_branch(std::size_t first_index) {
    const u64 p = primes_[first_index];
    chosen_.assign(1, p);
    if (fits(1, p, 2)) extend(p, p - 1, first_index, 1);
  }

  std::vector<CarmichaelRecord> take() { return std::move(found_); }

 private:
  // True when P * p^(more) may still fit under the limit.
  bool fits(u64 P, u64 p, unsigned more) const {
    u128 v = P;
    for (unsigned i = 0; i < more; ++i) {
      v *= p;
      if (v > limit_) return false;
    }
    return true;
  }

  void close(u64 P, u64 L, u64 last) {
    const u64 hi = std::min(P, limit_ / P);
    if (hi <= last || L >= limit_) return;
    const u64 target = inverse_mod(P % L, L);
    u64 q = last + 1 + (target + L - (last + 1) % L) % L;
    for (; q <= hi; q += L) {
      if ((P - 1) % (q - 1) != 0 || !is_prime(q)) continue;
      chosen_.push_back(q);
      if (korselt_primes(P * q, chosen_)) found_.push_back(make_record(chosen_));
      chosen_.pop_back();
    }
  }

  void extend(u64 P, u64 L, std::size_t last_index, unsigned depth) {
    const u64 last = primes_[last_index];
    if (depth >= 2 && (max_omega_ == 0 || depth + 1 <= max_omega_)) close(P, L, last);
    if (max_omega_ != 0 && depth + 2 > max_omega_) return;
    const unsigned after = depth >= 1 ? 1 : 2;
    for (std::size_t i = last_index + 1; i < primes_.size(); ++i) {
      const u64 p = primes_[i];
      if (!fits(P, p, after + 1)) break;
      if (L % p == 0 || std::gcd(p - 1, P) != 1) continue;
      const u64 nl = std::lcm(L, p - 1);
      if (nl >= limit_) continue;
      chosen_.push_back(p);
      extend(P * p, nl, i, depth + 1);
      chosen_.pop_back();
    }
  }

  u64 limit_;
  unsigned max_omega_;
  const std::vector<u64>& primes_;
  std::vector<u64> chosen_;
  std::vector<CarmichaelRecord> found_;
};

}  // namespace

std::vector<CarmichaelRecord> enumerate_products(u64 limit, unsigned max_omega, unsigned threads) {
  if (limit < 3) throw PreconditionError("enumerate_products: limit must be at least 3");
  if (max_omega != 0 && max_omega < 3) return {};
  // Every prime other than the last is at most sqrt(limit / 3).
  u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(limit) / 3)) + 2;
  std::vector<u64> primes = primes_up_to(root);
  primes.erase(primes.begin());  // Carmichael numbers are odd
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<CarmichaelRecord>> parts(workers);
  auto work = [&](unsigned id) {
    ProductSearch search(limit, max_omega, primes);
    for (std::size_t i = id; i < primes.size(); i += workers) {
      const u128 p = primes[i];
      if (p * p * p > limit) break;
      search.run_branch(i);
    }
    parts[id] = search.take();
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work, i);
  work(0);
  for (auto& t : pool) t.join();
  std::vector<CarmichaelRecord> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  sort_records(out);
  return out;
}

// ---------------------------------------------------------------------------
// cache
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kHeaderPrefix = "carmichael-cache v1 limit=";

u64 parse_field(std::string_view s, std::size_t line_no) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw CorruptFileError("cache line " + std::to_string(line_no) + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

void save_cache(const std::filesystem::path& path, const std::vector<CarmichaelRecord>& records, u64 limit) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0 && records[i - 1].n >= records[i].n) throw PreconditionError("save_cache: records must be ascending");
    if (records[i].n > limit) throw PreconditionError("save_cache: record above the stated limit");
    if (!is_carmichael(FactoredInt::from_primes(records[i].factors))) {
      throw PreconditionError("save_cache: record " + std::to_string(records[i].n) + " fails Korselt");
    }
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("save_cache: cannot write " + tmp.string());
    out << kHeaderPrefix << limit << '\n';
    for (const auto& r : records) {
      out << r.n << ':';
      for (std::size_t i = 0; i < r.factors.size(); ++i) out << (i ? "," : "") << r.factors[i];
      out << '\n';
    }
    if (!out) throw Error("save_cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CacheContents load_cache(const std::filesystem::path& path, const CacheLoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("load_cache: cannot open " + path.string());
  CacheContents out;
  std::string line;
  if (!std::getline(in, line)) return out;
  if (line.rfind(kHeaderPrefix, 0) != 0) throw CorruptFileError("load_cache: missing header");
  out.limit = parse_field(std::string_view(line).substr(kHeaderPrefix.size()), 1);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw CorruptFileError("cache line " + std::to_string(line_no) + ": expected 'n:p1,...'");
    }
    CarmichaelRecord r;
    r.n = parse_field(std::string_view(line).substr(0, colon), line_no);
    std::string_view rest = std::string_view(line).substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      r.factors.push_back(parse_field(rest.substr(0, comma), line_no));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (!out.records.empty() && out.records.back().n >= r.n) {
      throw CorruptFileError("cache line " + std::to_string(line_no) + ": not strictly ascending");
    }
    if (r.n > out.limit) throw CorruptFileError("cache line " + std::to_string(line_no) + ": exceeds header limit");
    u128 prod = 1;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      if (i > 0 && r.factors[i - 1] >= r.factors[i]) {
        throw CorruptFileError("cache line " + std::to_string(line_no) + ": factors not ascending");
      }
      if (!is_prime(r.factors[i])) throw CorruptFileError("cache line " + std::to_string(line_no) + ": composite factor");
      prod *= r.factors[i];
      if (prod > r.n) break;
    }
    if (prod != r.n) throw CorruptFileError("cache line " + std::to_string(line_no) + ": factors do not multiply to n");
    if (!korselt_primes(r.n, r.factors)) {
      throw CorruptFileError("cache line " + std::to_string(line_no) + ": " + std::to_string(r.n) + " fails Korselt");
    }
    out.records.push_back(make_record(r.factors));
  }
  if (!out.records.empty()) {
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution pick(std::clamp(options.sample_fraction, 0.0, 1.0));
    std::uniform_int_distribution<std::size_t> any(0, out.records.size() - 1);
    std::vector<std::size_t> sample{any(rng)};
    for (std::size_t i = 0; i < out.records.size(); ++i) {
      if (pick(rng)) sample.push_back(i);
    }
    for (std::size_t i : sample) {
      const auto& r = out.records[i];
      if (factorize(r.n).primes() != r.factors || !is_carmichael(r.n)) {
        throw CorruptFileError("load_cache: spot check failed for " + std::to_string(r.n));
      }
    }
  }
  return out;
}

}  // namespace carmichael
