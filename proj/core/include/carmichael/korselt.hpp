#pragma once

// Korselt's criterion, the seed predicate used by the progression pipeline,
// and verification of assembled products.

#include <vector>

#include "carmichael/numtheory.hpp"

namespace carmichael {

/// Squarefree, composite, and p - 1 | n - 1 for every prime p | n.
bool is_carmichael(const FactoredInt& n);

/// Factorizes first; throws ResourceLimitError when factorization does.
bool is_carmichael(u64 n);
bool is_carmichael(const BigInt& n);

/// Parameters (a0 mod q0, m0, l0) a seed is certified against.
struct SeedParams {
  Residue a0;          // a0.modulus is q0
  FactoredInt m0;      // odd, squarefree
  u64 l0 = 1;          // not divisible by 4

  u64 q0() const { return a0.modulus; }

  /// Throws PreconditionError naming the first violated invariant:
  /// gcd(a0, q0) = 1, gcd(a0 - 1, q0) = 2, m0 odd squarefree, 4 does not divide l0.
  void validate() const;
};

struct SeedPrimeCheck {
  u64 p = 0;
  bool half_divides = false;  // (p - 1)/2 | m0*pi - 1
  bool residue_ok = false;    // p = a0 (mod q0)
};

struct SeedCertificate {
  FactoredInt pi;
  SeedParams params;
  std::vector<SeedPrimeCheck> per_prime;
  bool squarefree = false;
  bool coprime_to_2m0 = false;
  bool omega_ok = false;  // omega(pi) >= 1 and omega(pi) = 2 (mod l0)

  bool valid() const;
};

/// Records every clause of the seed conditions for pi. Throws
/// PreconditionError if `params` itself is malformed; a failing pi only
/// yields an invalid certificate.
SeedCertificate check_seed(const FactoredInt& pi, const SeedParams& params);

/// True iff g*P*pi is a Carmichael number with at least three prime factors
/// and lies in the class r. Throws OverlapError if g, P, pi share a prime and
/// PreconditionError if the certificate is invalid.
bool check_assembly(const FactoredInt& g, const FactoredInt& P, const SeedCertificate& cert, const Residue& r);

struct ChernickEntry {
  u64 k = 0;
  FactoredInt n;  // (6k+1)(12k+1)(18k+1)
};

/// Every k <= k_limit with 6k+1, 12k+1, 18k+1 all prime. Each product is
/// re-verified with is_carmichael.
std::vector<ChernickEntry> chernick_scan(u64 k_limit);

}  // namespace carmichael
