#pragma once

// Ideals of Z[zeta_3] coprime to 3, stored by factorization, and the
// semi-multiplicative function nu on them.

#include <functional>
#include <string>
#include <vector>

#include "carmichael/numtheory.hpp"

namespace carmichael {

/// A prime ideal above a rational prime p != 3. Split primes (p = 1 mod 3)
/// carry a tag 0 or 1 for the two conjugates; inert primes (p = 2 mod 3) have tag 0.
struct EisensteinPrimeIdeal {
  u64 p = 2;
  unsigned tag = 0;

  static EisensteinPrimeIdeal make(u64 p, unsigned tag = 0);
  bool split() const { return p % 3 == 1; }
  u64 norm() const { return split() ? p : p * p; }

  friend auto operator<=>(const EisensteinPrimeIdeal&, const EisensteinPrimeIdeal&) = default;
};

struct EisensteinPrimePower {
  EisensteinPrimeIdeal prime;
  unsigned exponent = 1;
  friend bool operator==(const EisensteinPrimePower&, const EisensteinPrimePower&) = default;
};

class EisensteinIdeal {
 public:
  EisensteinIdeal() = default;  // the unit ideal

  /// Merges repeated primes; drops zero exponents.
  explicit EisensteinIdeal(std::vector<EisensteinPrimePower> parts);

  const std::vector<EisensteinPrimePower>& parts() const { return parts_; }
  u64 norm() const;
  bool is_unit() const { return parts_.empty(); }
  /// True iff the norm is squarefree.
  bool norm_squarefree() const;
  /// All ideal divisors, the unit ideal and this ideal included.
  std::vector<EisensteinIdeal> divisors() const;
  /// "1" for the unit ideal, otherwise e.g. "7a^2*7b*(2)".
  std::string signature() const;

  friend EisensteinIdeal operator*(const EisensteinIdeal& a, const EisensteinIdeal& b);
  friend bool operator==(const EisensteinIdeal&, const EisensteinIdeal&) = default;

 private:
  std::vector<EisensteinPrimePower> parts_;  // sorted by prime
};

inline constexpr u64 kIdealEnumerationMax = 1'000'000;

/// Calls visit(ideal) for every ideal of norm <= Q in depth-first order.
void for_each_ideal(u64 Q, const std::function<void(const EisensteinIdeal&)>& visit);

/// Every ideal of norm <= Q, by ascending norm then signature. Throws
/// ResourceLimitError above kIdealEnumerationMax.
std::vector<EisensteinIdeal> ideals_up_to(u64 Q);

/// Product over rational primes of the block values.
int nu(const EisensteinIdeal& ideal);

/// Number of ideals of norm n coprime to 3: sum of chi_{-3}(d) over d | n,
/// and 0 when 3 | n.
u64 ideal_count_formula(u64 n);

struct MobiusRow {
  u64 norm = 0;
  std::string signature;
  i64 divisor_sum = 0;
  int mu_squared = 0;
  bool ok() const { return divisor_sum == mu_squared; }
};

struct MobiusReport {
  u64 Q = 0;
  u64 checked = 0;
  std::vector<MobiusRow> failures;
  std::vector<MobiusRow> rows;  // filled only when requested
  bool ok() const { return failures.empty(); }
};

/// Sums nu over all divisors of each ideal of norm <= Q and compares with
/// mu^2 of the norm. Throws ResourceLimitError above 10^5.
MobiusReport verify_mobius_identity(u64 Q, bool keep_rows = false);

/// "norm,ideal_signature,divisor_sum,mu_squared,ok"
std::string mobius_csv(const MobiusReport& report);

struct ZetaPartial {
  i64 s_num = 1;
  u64 s_den = 1;
  u64 Q = 0;
  std::vector<u64> bounds;      // ascending, default Q/4, Q/2, Q
  std::vector<double> values;   // partial sums at those bounds
  double error_bound = 0.0;     // absolute rounding bound for every value
  u64 terms = 0;                // ideals with nu != 0 up to Q
  std::vector<std::string> exact_digits;  // 30 significant digits per value
};

/// Sum of |nu(d)| N(d)^-s over N(d) <= Q, with s = s_num/s_den > 0,
/// accumulated in 256-bit MPFR arithmetic.
ZetaPartial zeta_nu_partial(i64 s_num, u64 s_den, u64 Q);

/// Same sum, recorded at each of the ascending `bounds`; Q is the last one.
ZetaPartial zeta_nu_partial(i64 s_num, u64 s_den, std::vector<u64> bounds);

}  // namespace carmichael
