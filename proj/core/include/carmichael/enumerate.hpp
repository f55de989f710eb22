#pragma once

// Complete lists of Carmichael numbers below a bound, from two independent
// enumerators, plus a plain-text cache.

#include <filesystem>
#include <vector>

#include "carmichael/numtheory.hpp"

namespace carmichael {

struct CarmichaelRecord {
  u64 n = 0;
  std::vector<u64> factors;  // ascending primes
  u64 phi_num = 0;           // phi(n)/n in lowest terms
  u64 phi_den = 1;

  std::size_t omega() const { return factors.size(); }
  friend bool operator==(const CarmichaelRecord&, const CarmichaelRecord&) = default;
};

/// Builds a record from a Korselt-verified factorization; throws
/// PreconditionError when the primes do not form a Carmichael number.
CarmichaelRecord make_record(std::vector<u64> primes);

/// Largest limit the sieve-based scan accepts.
inline constexpr u64 kScanMaxLimit = 10'000'000;

/// Tests every odd squarefree composite n <= limit against Korselt using a
/// smallest-prime-factor table. Throws ResourceLimitError above kScanMaxLimit.
/// `threads` = 0 uses the hardware concurrency.
std::vector<CarmichaelRecord> enumerate_scan(u64 limit, unsigned threads = 1);

/// Depth-first search over products p1 < p2 < ... with gcd(P, lcm(p_i - 1)) = 1.
/// The last prime q is forced into q = P^-1 (mod L) with q - 1 | P - 1.
/// `max_omega` = 0 means unbounded.
std::vector<CarmichaelRecord> enumerate_products(u64 limit, unsigned max_omega = 0, unsigned threads = 1);

struct CacheContents {
  u64 limit = 0;
  std::vector<CarmichaelRecord> records;
};

struct CacheLoadOptions {
  /// Fraction of lines re-factorized from scratch (at least one line when
  /// the file is nonempty). Every line is always checked structurally.
  double sample_fraction = 0.01;
  u64 seed = 0x6361726d;
};

/// Writes "carmichael-cache v1 limit=<L>" followed by "n:p1,...,pk" lines.
/// Records must be ascending and Korselt-valid. The file is replaced
/// atomically.
void save_cache(const std::filesystem::path& path, const std::vector<CarmichaelRecord>& records, u64 limit);

/// Throws NotFoundError for a missing file and CorruptFileError for any
/// malformed, unsorted or failing line. An empty file loads as no records.
CacheContents load_cache(const std::filesystem::path& path, const CacheLoadOptions& options = {});

}  // namespace carmichael
