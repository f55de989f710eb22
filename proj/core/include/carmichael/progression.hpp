#pragma once

// From a compatible class r mod m to seed parameters (a0, q0, m0, l0), and
// assembly of Carmichael numbers g*P*pi in that class.

#include <optional>
#include <string>
#include <vector>

#include "carmichael/enumerate.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/numtheory.hpp"

namespace carmichael {

enum class ReductionKind {
  None,
  Reduce1,  // r/g mod m/g misses +-1 mod 12
  Reduce2,  // g^-1 mod lambda(g) misses +-1 mod 12
  Joint,    // each side is fine alone but a mod q misses +-1 mod 12
};

std::string_view to_string(ReductionKind kind);

struct ProgressionConfig {
  u64 floor = 3;                     // (p - 1)/s of an auxiliary prime has no prime factor <= floor
  u64 reduction_ceiling = 1'000'000;
  unsigned T = 3;                    // halves of P's primes avoid prime factors = 1 mod 2^T
  u64 prime_ceiling = 20'000;        // candidate primes for P
  std::size_t max_candidates = 150;  // cap for the three-prime search
  std::size_t max_witnesses = 3;     // per path in end_to_end
  bool try_construct = true;
  u64 construct_k_limit = 400;       // values of k tried by the construct path
  std::size_t construct_L_primes = 6;
};

struct ReductionStep {
  ReductionKind kind = ReductionKind::None;
  u64 p = 0;
  u64 s = 0;
  Residue before;
  Residue after;
};

/// Throws PreconditionError for incompatible input.
ReductionKind needs_reduction(i64 r, u64 m);

/// Intersects r mod m with 0 mod p for the first suitable auxiliary prime p.
/// Throws ResourceLimitError when no p below the ceiling works.
ReductionStep apply_reduction(i64 r, u64 m, ReductionKind which, const ProgressionConfig& config = {});

struct FindPResult {
  FactoredInt P;
  unsigned ell = 0;
  std::vector<u64> a_parts;  // p_i mod q
  u64 lambda_half = 1;       // lambda(P)/2
  u64 order_mod_q = 1;       // order of a^-1 P mod q
  u64 order_mod_half = 1;    // order of g P mod lambda(P)/2
};

/// Smallest squarefree P = p_1...p_ell (ell in {2, 3}, parity forced by a mod
/// 3 and mod 4) with lambda(P)/2 coprime to 2q, a^-1 P of odd order mod q and
/// g P of odd order mod lambda(P)/2. Throws ResourceLimitError naming the
/// starved stage.
FindPResult find_P(const Residue& a, u64 g, const ProgressionConfig& config = {});

struct DerivationTrace {
  Residue input;
  std::vector<ReductionStep> reductions;
  Residue target;  // the class after reductions
  u64 g = 1;
  u64 h = 1;
  u64 m_tilde_rule = 1;  // m/3 or m
  u64 m_tilde = 1;       // with primes of gcd(r/g, m~) removed
  Residue a;             // modulus q
  FindPResult P;
  Residue a_prime;       // modulus q'
  Residue a0;            // modulus q0
  u64 l0 = 1;
  FactoredInt m0;
  unsigned T = 3;

  u64 q() const { return a.modulus; }
  u64 q_prime() const { return a_prime.modulus; }
  u64 q0() const { return a0.modulus; }
  SeedParams seed_params() const { return SeedParams{a0, m0, l0}; }
};

DerivationTrace derive_params(i64 r, u64 m, const ProgressionConfig& config = {});

/// Names of violated trace invariants; empty when the trace is sound.
std::vector<std::string> check_trace(const DerivationTrace& trace);

/// pi = a' (mod q'), the congruence every seed product satisfies.
bool seed_matches_trace(const DerivationTrace& trace, const FactoredInt& pi);

struct ProgressionWitness {
  BigInt n;
  FactoredInt factors;
  std::string method;  // "corpus", "corpus-seed" or "construct"
};

struct EndToEndResult {
  std::optional<DerivationTrace> trace;
  std::vector<ProgressionWitness> witnesses;
  std::vector<std::string> notes;
};

/// Witnesses n = r (mod m): corpus members of the class, corpus seeds
/// assembled as g*P*pi, then constructed seeds. Every witness is re-verified.
/// Throws PreconditionError for incompatible input.
EndToEndResult end_to_end(i64 r, u64 m, const std::vector<CarmichaelRecord>& corpus,
                          const ProgressionConfig& config = {});

std::string to_json(const DerivationTrace& trace);
std::string transcript(const DerivationTrace& trace);

}  // namespace carmichael
