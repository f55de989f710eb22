#pragma once

// Exact integer primitives: primality, factorization, multiplicative
// functions and modular algebra. Everything here is a pure function of its
// arguments and safe to call concurrently.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "carmichael/bigint.hpp"

namespace carmichael {

// ---------------------------------------------------------------------------
// Modular arithmetic on 64-bit words
// ---------------------------------------------------------------------------

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

/// Least common multiple; throws OverflowError if it leaves 64 bits.
u64 lcm_checked(u64 a, u64 b);

/// Product; throws OverflowError if it leaves 64 bits.
u64 mul_checked(u64 a, u64 b);

/// Inverse of `a` modulo `m` (m >= 1). Throws PreconditionError when
/// gcd(a, m) != 1. The inverse modulo 1 is 0.
u64 inverse_mod(u64 a, u64 m);

/// Jacobi symbol (a|n) for odd n >= 1. For prime n this is the Legendre
/// symbol.
int jacobi(i64 a, u64 n);
int jacobi(const BigInt& a, u64 n);

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin for every 64-bit input (seven-base witness set
/// verified for all n < 2^64).
bool is_prime(u64 n);

/// Exact below 2^64. Above, GMP's Baillie-PSW followed by 65 further
/// Miller-Rabin rounds: a composite passes with probability below 2^-130.
bool is_prime(const BigInt& n);

/// All primes <= limit, ascending.
std::vector<u64> primes_up_to(u64 limit);

/// Smallest prime strictly greater than n.
u64 next_prime(u64 n);

// ---------------------------------------------------------------------------
// Factored integers
// ---------------------------------------------------------------------------

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer bundled with its complete prime factorization.
///
/// Invariants: primes strictly increase, exponents are at least one, every
/// listed prime passes is_prime, and the product of prime^exponent equals
/// value(). Prime factors are limited to 64 bits; the value itself is not.
class FactoredInt {
 public:
  /// The unit 1 with an empty factor list.
  FactoredInt();

  /// Validates and adopts `factors` (any order, no duplicate primes).
  static FactoredInt from_factors(std::vector<PrimePower> factors);

  /// Squarefree product of the given distinct primes.
  static FactoredInt from_primes(std::span<const u64> primes);

  const BigInt& value() const { return value_; }
  const std::vector<PrimePower>& factors() const& { return factors_; }
  std::vector<PrimePower> factors() && { return std::move(factors_); }

  /// Value as a 64-bit word; throws OverflowError if it does not fit.
  u64 to_u64() const { return carmichael::to_u64(value_); }
  bool fits_u64() const { return carmichael::fits_u64(value_); }

  std::size_t omega() const { return factors_.size(); }
  bool is_one() const { return factors_.empty(); }
  bool is_prime() const { return factors_.size() == 1 && factors_[0].exponent == 1; }
  bool is_squarefree() const;
  std::vector<u64> primes() const;

  /// Smallest prime factor, or 0 for the unit.
  u64 smallest_prime() const { return factors_.empty() ? 0 : factors_.front().prime; }

  bool divisible_by(u64 p) const;
  bool coprime_to(const FactoredInt& other) const;

  /// "3·11·17", or "1" for the unit; exponents as "3^4".
  std::string to_string() const;

  friend FactoredInt operator*(const FactoredInt& a, const FactoredInt& b);
  friend bool operator==(const FactoredInt& a, const FactoredInt& b) {
    return a.factors_ == b.factors_;
  }

 private:
  BigInt value_;
  std::vector<PrimePower> factors_;
};

struct FactorConfig {
  /// Trial division runs over primes below this bound before switching to rho.
  u64 trial_cutoff = 1u << 12;
  /// Total Pollard-rho iterations allowed per factorize() call.
  u64 rho_budget = 10'000'000;
};

/// Complete factorization of n >= 1. Throws ResourceLimitError if the rho
/// budget runs out.
FactoredInt factorize(u64 n, const FactorConfig& config = {});

/// As above for arbitrary-precision input. Throws ResourceLimitError if a
/// prime factor exceeds 64 bits or the budget runs out.
FactoredInt factorize(const BigInt& n, const FactorConfig& config = {});

BigInt euler_phi(const FactoredInt& n);
BigInt carmichael_lambda(const FactoredInt& n);

/// Convenience forms for 64-bit arguments whose results must fit 64 bits.
u64 euler_phi(u64 n);
u64 carmichael_lambda(u64 n);

/// Squarefree product of the distinct primes dividing n.
u64 radical(u64 n);

/// 2-adic valuation and odd part.
inline unsigned two_adic_valuation(u64 n) {
  return n == 0 ? 64u : static_cast<unsigned>(__builtin_ctzll(n));
}
inline u64 odd_part(u64 n) { return n == 0 ? 0 : n >> two_adic_valuation(n); }

inline bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

// ---------------------------------------------------------------------------
// Residues and the Chinese remainder theorem
// ---------------------------------------------------------------------------

/// A congruence class value (mod modulus) with 0 <= value < modulus.
struct Residue {
  u64 value = 0;
  u64 modulus = 1;

  /// Canonicalizes any signed representative.
  static Residue of(i64 v, u64 m);
  static Residue of(u64 v, u64 m) { return Residue{v % m, m}; }

  bool contains(u64 n) const { return n % modulus == value; }
  bool contains(const BigInt& n) const { return mod_u64(n, modulus) == value; }

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Intersection of congruence classes. Moduli need not be coprime: classes
/// that agree on common factors merge, classes that disagree raise
/// CrtConflictError. The result modulus is the lcm of the inputs.
Residue crt(std::span<const Residue> residues);
Residue crt(const Residue& a, const Residue& b);

// ---------------------------------------------------------------------------
// Orders and roots in (Z/nZ)^x
// ---------------------------------------------------------------------------

/// Multiplicative order of a unit x modulo n (n >= 1). `lambda_n` must be a
/// multiple of the order (typically carmichael_lambda(n)).
u64 multiplicative_order(u64 x, u64 n, u64 lambda_n);
u64 multiplicative_order(u64 x, u64 n);

/// True iff the unit x has odd multiplicative order modulo n, tested as
/// x^(odd part of lambda(n)) == 1.
bool has_odd_order(u64 x, u64 n);

/// All square roots of the unit `a` modulo p^e, ascending. Tonelli-Shanks
/// modulo an odd prime followed by Hensel lifting; powers of two are lifted
/// bit by bit. Empty when `a` is a non-residue.
std::vector<u64> sqrt_mod_prime_power(u64 a, u64 p, unsigned e);

/// A primitive root modulo p^e for an odd prime p.
u64 primitive_root_prime_power(u64 p, unsigned e);

// ---------------------------------------------------------------------------
// Smallest-prime-factor table
// ---------------------------------------------------------------------------

struct SieveConfig {
  /// Largest limit the table may be built for (4 bytes per entry).
  u64 max_limit = 100'000'000;
  /// Numbers processed per sieving segment.
  u64 segment_size = 1u << 18;
};

/// Exact table n -> P^-(n) for 2 <= n <= limit. Built segment by segment so
/// the working set stays O(segment); immutable afterwards and shareable
/// across threads.
class SmallestPrimeFactorSieve {
 public:
  explicit SmallestPrimeFactorSieve(u64 limit, const SieveConfig& config = {});

  u64 limit() const { return limit_; }

  /// P^-(n) for 2 <= n <= limit.
  u64 operator()(u64 n) const { return spf_[n]; }

  bool is_prime(u64 n) const { return n >= 2 && spf_[n] == n; }

  /// Factorization through repeated table lookups.
  FactoredInt factor(u64 n) const;

  /// Distinct primes of n, or empty when n is not squarefree.
  bool squarefree_primes(u64 n, std::vector<u64>& out) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace carmichael
