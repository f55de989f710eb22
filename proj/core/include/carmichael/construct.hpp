#pragma once

// Desk-scale constructor: primes p = d*k + 1 over divisors d of a modulus L,
// and subset products of them hitting residue targets.

#include <optional>
#include <string>
#include <vector>

#include "carmichael/enumerate.hpp"
#include "carmichael/groups.hpp"
#include "carmichael/numtheory.hpp"

namespace carmichael {

/// A prime q whose half (q - 1)/2 is odd, squarefree and composite.
struct QualifiedPrime {
  u64 q = 0;
  FactoredInt half;
  bool qr_ok = true;  // m0 is a square mod q (vacuous without an m0 filter)
};

enum class Admissibility {
  Full,          // every clause of k_admissible
  CoprimeOnly,   // only gcd(k, L) = 1; for smooth, non-squarefree L
};

struct ConstructionConfig {
  u64 y = 200;          // ceiling for q
  u64 floor = 2;        // least allowed prime factor of (q - 1)/2; k/2 needs factors above it
  unsigned w = 2;       // omega(d)
  u64 k_limit = 10'000;
  u64 m0 = 1;           // 1 disables the quadratic residue filter
  u64 l0 = 1;
  u64 w0 = 0;           // 0: derived from l0
  unsigned T = 3;       // lambda(k) must not be divisible by 2^T
  u64 R1 = 1000;        // phi(k) may have no prime factor in [R1, R2]
  u64 R2 = 2000;

  /// The d* clause of k_admissible, against a0 mod q0. Off by default.
  bool use_dstar = false;
  std::optional<Residue> seed_residue;

  Admissibility admissibility = Admissibility::Full;
  /// Nonzero: use this L directly instead of building it from Q.
  u64 L = 0;
  /// With an explicit L, take every divisor instead of those of weight w.
  bool all_divisors = false;
  /// Number of qualified primes used for L (0: all of one side).
  std::size_t max_q = 4;

  std::size_t min_family = 3;
  std::size_t max_families = 8;
  std::size_t max_solutions = 4;  // per family
  SubsetSolveConfig subset;

  /// Resolves w0 and throws PreconditionError on inconsistent settings.
  void validate();
};

struct FamilyMember {
  u64 d = 0;
  u64 p = 0;
  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

struct PrimeFamily {
  u64 k = 0;
  FactoredInt L;
  std::vector<FamilyMember> members;  // ascending d

  /// Throws PreconditionError unless every p = d*k + 1 is prime, d | L and gcd(k, L) = 1.
  void validate() const;
};

/// Every prime q <= y passing the half test, the floor and (if m0 > 1) the
/// quadratic residue filter. Empty when nothing qualifies.
std::vector<QualifiedPrime> build_Q(const ConstructionConfig& config);

/// Greedy split by descending q: the smaller side takes the prime, ties go to
/// the side with fewer copies of the prime's half factors, then to the first.
std::pair<std::vector<QualifiedPrime>, std::vector<QualifiedPrime>> split_Q(const std::vector<QualifiedPrime>& qs);

/// Product of the q in `qs` with q = 1 (mod p).
FactoredInt sub_modulus(const std::vector<QualifiedPrime>& qs, u64 p);

/// Products of exactly w distinct primes of a squarefree L, ascending.
std::vector<u64> divisors_with_weight(const FactoredInt& L, unsigned w);

/// Every divisor of L, ascending.
std::vector<u64> all_divisors(const FactoredInt& L);

/// Most frequent residue of D modulo q0; ties go to the smallest residue.
u64 most_common_residue(const std::vector<u64>& D, u64 q0);

struct KVerdict {
  bool ok = false;
  std::string reason;  // first failing clause, empty when ok
};

/// The membership test for k. `dstar` is consulted only with use_dstar.
KVerdict k_admissible(u64 k, const FactoredInt& L, const ConstructionConfig& config,
                      std::optional<u64> dstar = std::nullopt);

/// Resumable state for find_k.
struct FindKState {
  u64 next_k = 1;
  std::vector<PrimeFamily> families;
};

/// Scans k in [state.next_k, k_stop], appending families of at least
/// config.min_family members (all admissible k when min_family is 0).
void find_k_step(const FactoredInt& L, const std::vector<u64>& D, const ConstructionConfig& config, FindKState& state,
                 u64 k_stop, unsigned threads = 1);

/// Families for every admissible k <= k_limit, largest first (ties by k).
std::vector<PrimeFamily> find_k(const FactoredInt& L, const std::vector<u64>& D, const ConstructionConfig& config,
                                unsigned threads = 1);

struct EquidistributionStat {
  u64 modulus = 0;
  std::vector<std::pair<u64, u64>> counts;  // (residue, count) for residues that occur
  u64 units_total = 0;                       // members of D coprime to the modulus
  double max_relative_deviation = 0.0;       // over all unit residues
};

EquidistributionStat equidistribution_stat(const std::vector<u64>& D, const FactoredInt& modulus);

/// (l0+1)/2 for odd l0, (l0+2)/4 for l0 = 6 (mod 8), (3*l0+2)/4 for l0 = 2 (mod 8).
/// Throws PreconditionError when 4 | l0.
u64 compute_w0(u64 l0);

struct ConstructionTarget {
  Residue mod_L;                  // modulus must equal the family's L
  std::optional<Residue> extra;   // modulus coprime to L, e.g. k
  FactoredInt cofactor;           // multiplies each product before verification
  /// omega(product) = omega_residue (mod omega_modulus); modulus 1 disables.
  u64 omega_residue = 0;
  u64 omega_modulus = 1;
};

struct ConstructedNumber {
  BigInt n;
  FactoredInt factors;
  std::vector<u64> chosen;  // primes taken from the family
  u64 k = 0;
  u64 L = 0;
  std::string method;
  u64 seed = 0;
};

/// Subset products of family primes hitting the target, found on
/// (Z/LZ)^x [+ (Z/eZ)^x] [+ Z/omega_modulus]. Every product times the cofactor
/// is re-checked with is_carmichael; failures are dropped. Throws NotFoundError
/// when nothing verifies.
std::vector<ConstructedNumber> construct_carmichael(const PrimeFamily& family, const ConstructionTarget& target,
                                                    std::size_t max_solutions = 4,
                                                    const SubsetSolveConfig& solver = {});

/// Target 1 mod L with the configured omega constraint.
ConstructionTarget unit_target(const PrimeFamily& family, const ConstructionConfig& config);

struct DivisibleSearchBudget {
  std::size_t max_witnesses = 4;
  u64 k_limit = 200;
  std::size_t min_family = 8;
  SubsetSolveConfig subset;
};

struct DivisibleWitness {
  BigInt n;
  FactoredInt factors;
  std::string method;  // "corpus" or "construct"
};

/// Carmichael numbers divisible by m: corpus records first, then products
/// m * Pi with Pi = m^-1 modulo kL for a smooth L with lambda(m) | L.
/// Throws PreconditionError when gcd(m, 2 phi(m)) > 1.
std::vector<DivisibleWitness> construct_divisible_by(const FactoredInt& m, const std::vector<CarmichaelRecord>& corpus,
                                                     const DivisibleSearchBudget& budget = {});

struct ConstructionState {
  ConstructionConfig config;
  std::vector<QualifiedPrime> Q, Q1, Q2;
  FactoredInt L;
  std::vector<u64> D;
  FindKState search;
  std::vector<ConstructedNumber> solutions;
  std::vector<std::string> notes;
};

/// Q, split, divisors, find_k, then construct_carmichael on the largest
/// families. Resumes from `resume` when given.
ConstructionState run_construction(const ConstructionConfig& config, unsigned threads = 1,
                                   const ConstructionState* resume = nullptr);

std::string to_json(const ConstructionState& state);
ConstructionState construction_state_from_json(const std::string& text);

}  // namespace carmichael
