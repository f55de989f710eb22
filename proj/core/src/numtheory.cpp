#include "carmichael/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "carmichael/error.hpp"

namespace carmichael {

// ---------------------------------------------------------------------------
// bigint helpers
// ---------------------------------------------------------------------------

u64 to_u64(const BigInt& v) {
  auto r = try_u64(v);
  if (!r) throw OverflowError("value " + v.get_str() + " does not fit in 64 bits");
  return *r;
}

BigInt parse_big(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw PreconditionError("expected a nonnegative decimal integer, got '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

u64 parse_u64(std::string_view text) { return to_u64(parse_big(text)); }

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------------------
// modular arithmetic
// ---------------------------------------------------------------------------

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 mul_checked(u64 a, u64 b) {
  u64 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("product " + std::to_string(a) + "*" + std::to_string(b) + " overflows 64 bits");
  }
  return out;
}

u64 lcm_checked(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return mul_checked(a / std::gcd(a, b), b);
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 0) throw PreconditionError("inverse_mod: modulus must be positive");
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit to avoid overflow for any 64-bit m.
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw PreconditionError("inverse_mod: " + std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  __int128 mm = static_cast<__int128>(m);
  __int128 v = old_s % mm;
  if (v < 0) v += mm;
  return static_cast<u64>(v);
}

int jacobi(i64 a, u64 n) {
  if (n == 0 || n % 2 == 0) throw PreconditionError("jacobi: modulus must be odd and positive");
  u64 x;
  if (a >= 0) {
    x = static_cast<u64>(a) % n;
  } else {
    u64 neg = static_cast<u64>(-(a + 1)) + 1;  // |a| without overflow
    x = (n - neg % n) % n;
  }
  int result = 1;
  u64 m = n;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      u64 r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

int jacobi(const BigInt& a, u64 n) {
  if (n == 0 || n % 2 == 0) throw PreconditionError("jacobi: modulus must be odd and positive");
  BigInt r = a % to_big(n);
  if (r < 0) r += to_big(n);
  return jacobi(static_cast<i64>(to_u64(r) % n), n);
}

// ---------------------------------------------------------------------------
// primality
// ---------------------------------------------------------------------------

namespace {

bool miller_rabin_round(u64 n, u64 d, unsigned s, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

constexpr u64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 53 * 53) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Sinclair's witness set: correct for every n < 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (auto small = try_u64(n)) return is_prime(*small);
  if (sgn(n) <= 0) return false;
  // GMP runs Baillie-PSW then (reps - 24) Miller-Rabin rounds with random bases.
  return mpz_probab_prime_p(n.get_mpz_t(), 65 + 24) != 0;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    if (i <= limit / i) {
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  return out;
}

u64 next_prime(u64 n) {
  if (n < 2) return 2;
  u64 c = n + (n % 2 == 0 ? 1 : 2);
  if (n == 2) return 3;
  for (;; c += 2) {
    if (c < n) throw OverflowError("next_prime: no 64-bit prime above " + std::to_string(n));
    if (is_prime(c)) return c;
  }
}

// ---------------------------------------------------------------------------
// FactoredInt
// ---------------------------------------------------------------------------

FactoredInt::FactoredInt() : value_(1) {}

FactoredInt FactoredInt::from_factors(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  FactoredInt out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.exponent == 0) throw PreconditionError("FactoredInt: zero exponent for " + std::to_string(f.prime));
    if (i > 0 && factors[i - 1].prime == f.prime) {
      throw PreconditionError("FactoredInt: duplicate prime " + std::to_string(f.prime));
    }
    if (!carmichael::is_prime(f.prime)) {
      throw PreconditionError("FactoredInt: " + std::to_string(f.prime) + " is not prime");
    }
    BigInt pp;
    mpz_pow_ui(pp.get_mpz_t(), to_big(f.prime).get_mpz_t(), f.exponent);
    out.value_ *= pp;
  }
  out.factors_ = std::move(factors);
  return out;
}

FactoredInt FactoredInt::from_primes(std::span<const u64> primes) {
  std::vector<PrimePower> f;
  f.reserve(primes.size());
  for (u64 p : primes) f.push_back({p, 1});
  return from_factors(std::move(f));
}

bool FactoredInt::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

std::vector<u64> FactoredInt::primes() const {
  std::vector<u64> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

bool FactoredInt::divisible_by(u64 p) const {
  return std::binary_search(factors_.begin(), factors_.end(), PrimePower{p, 1},
                            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
}

bool FactoredInt::coprime_to(const FactoredInt& other) const {
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < other.factors_.size()) {
    if (factors_[i].prime == other.factors_[j].prime) return false;
    if (factors_[i].prime < other.factors_[j].prime) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

std::string FactoredInt::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) os << "·";
    os << factors_[i].prime;
    if (factors_[i].exponent > 1) os << '^' << factors_[i].exponent;
  }
  return os.str();
}

FactoredInt operator*(const FactoredInt& a, const FactoredInt& b) {
  FactoredInt out;
  out.value_ = a.value_ * b.value_;
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].prime < b.factors_[j].prime)) {
      out.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || b.factors_[j].prime < a.factors_[i].prime) {
      out.factors_.push_back(b.factors_[j++]);
    } else {
      out.factors_.push_back({a.factors_[i].prime, a.factors_[i].exponent + b.factors_[j].exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

namespace {

const std::vector<u64>& default_trial_primes() {
  static const std::vector<u64> primes = primes_up_to(FactorConfig{}.trial_cutoff);
  return primes;
}

struct RhoBudget {
  u64 remaining;
  void spend(u64 n) {
    if (n > remaining) throw ResourceLimitError("factorize: Pollard-rho budget exhausted");
    remaining -= n;
  }
};

inline u64 absdiff(u64 a, u64 b) { return a > b ? a - b : b - a; }

// Brent's variant of Pollard rho with batched gcds. Returns a nontrivial
// divisor of the odd composite n, or n when this polynomial fails.
u64 brent_rho(u64 n, u64 c, u64 seed, RhoBudget& budget) {
  auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(mulmod(v, v, n)) + c) % n); };
  constexpr u64 kBatch = 128;
  u64 y = seed % n, x = y, ys = y, q = 1, g = 1;
  u64 r = 1;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    budget.spend(r);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod(q, absdiff(x, y), n);
      }
      budget.spend(lim);
      g = std::gcd(q, n);
      k += lim;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      budget.spend(1);
      g = std::gcd(absdiff(x, ys), n);
    } while (g == 1);
  }
  return g;
}

void factor_rho(u64 n, std::vector<u64>& out, RhoBudget& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  // Perfect squares defeat some polynomials; peel them first.
  u64 s = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(s) * s > n) --s;
  while (static_cast<u128>(s + 1) * (s + 1) <= n) ++s;
  if (static_cast<u128>(s) * s == n) {
    factor_rho(s, out, budget);
    factor_rho(s, out, budget);
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = brent_rho(n, c, c + 1, budget);
    if (d != n && d != 1) {
      factor_rho(d, out, budget);
      factor_rho(n / d, out, budget);
      return;
    }
  }
}

FactoredInt collect(std::vector<u64>& primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> f;
  for (u64 p : primes) {
    if (!f.empty() && f.back().prime == p) {
      ++f.back().exponent;
    } else {
      f.push_back({p, 1});
    }
  }
  return FactoredInt::from_factors(std::move(f));
}

void trial_divide(u64& n, u64 cutoff, std::vector<u64>& out) {
  std::vector<u64> custom;
  if (cutoff != FactorConfig{}.trial_cutoff) custom = primes_up_to(cutoff);
  const std::vector<u64>& primes = custom.empty() ? default_trial_primes() : custom;
  for (u64 p : primes) {
    if (p > cutoff || p * p > n) break;
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
}

// Pollard-Brent over GMP for composites above 2^64.
BigInt brent_rho_big(const BigInt& n, unsigned long c, RhoBudget& budget) {
  auto f = [&](const BigInt& v) {
    BigInt r = v * v + c;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
  };
  BigInt y = c + 1, x = y, ys = y, q = 1, g = 1, diff;
  u64 r = 1;
  constexpr u64 kBatch = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    budget.spend(r);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        diff = abs(x - y);
        q = q * diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      budget.spend(lim);
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      budget.spend(1);
      diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_rho_big(const BigInt& n, std::vector<u64>& out, RhoBudget& budget) {
  if (auto small = try_u64(n)) {
    factor_rho(*small, out, budget);
    return;
  }
  if (is_prime(n)) {
    throw ResourceLimitError("factorize: prime factor " + n.get_str() + " exceeds 64 bits");
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt s = sqrt(n);
    factor_rho_big(s, out, budget);
    factor_rho_big(s, out, budget);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    BigInt d = brent_rho_big(n, c, budget);
    if (d != n && d != 1) {
      factor_rho_big(d, out, budget);
      factor_rho_big(n / d, out, budget);
      return;
    }
  }
}

}  // namespace

FactoredInt factorize(u64 n, const FactorConfig& config) {
  if (n == 0) throw PreconditionError("factorize: n must be positive");
  std::vector<u64> primes;
  while (n % 2 == 0 && n > 1) {
    primes.push_back(2);
    n /= 2;
  }
  trial_divide(n, config.trial_cutoff, primes);
  RhoBudget budget{config.rho_budget};
  factor_rho(n, primes, budget);
  return collect(primes);
}

FactoredInt factorize(const BigInt& n, const FactorConfig& config) {
  if (sgn(n) <= 0) throw PreconditionError("factorize: n must be positive");
  if (auto small = try_u64(n)) return factorize(*small, config);
  std::vector<u64> primes;
  BigInt rest = n;
  for (u64 p : primes_up_to(config.trial_cutoff)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.push_back(p);
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  RhoBudget budget{config.rho_budget};
  factor_rho_big(rest, primes, budget);
  return collect(primes);
}

// ---------------------------------------------------------------------------
// multiplicative functions
// ---------------------------------------------------------------------------

BigInt euler_phi(const FactoredInt& n) {
  BigInt out = 1;
  for (const auto& f : n.factors()) {
    BigInt p = to_big(f.prime);
    BigInt pp;
    mpz_pow_ui(pp.get_mpz_t(), p.get_mpz_t(), f.exponent - 1);
    out *= pp * (p - 1);
  }
  return out;
}

BigInt carmichael_lambda(const FactoredInt& n) {
  BigInt out = 1;
  for (const auto& f : n.factors()) {
    BigInt part;
    if (f.prime == 2) {
      if (f.exponent == 1) {
        part = 1;
      } else if (f.exponent == 2) {
        part = 2;
      } else {
        mpz_ui_pow_ui(part.get_mpz_t(), 2, f.exponent - 2);
      }
    } else {
      BigInt p = to_big(f.prime);
      mpz_pow_ui(part.get_mpz_t(), p.get_mpz_t(), f.exponent - 1);
      part *= p - 1;
    }
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), part.get_mpz_t());
  }
  return out;
}

u64 euler_phi(u64 n) { return to_u64(euler_phi(factorize(n))); }

u64 carmichael_lambda(u64 n) { return to_u64(carmichael_lambda(factorize(n))); }

u64 radical(u64 n) {
  u64 r = 1;
  for (u64 p : factorize(n).primes()) r *= p;
  return r;
}

// ---------------------------------------------------------------------------
// residues
// ---------------------------------------------------------------------------

Residue Residue::of(i64 v, u64 m) {
  if (m == 0) throw PreconditionError("Residue: modulus must be positive");
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(m);
  if (r < 0) r += m;
  return Residue{static_cast<u64>(r), m};
}

Residue crt(const Residue& a, const Residue& b) {
  if (a.modulus == 0 || b.modulus == 0) throw PreconditionError("crt: modulus must be positive");
  u64 g = std::gcd(a.modulus, b.modulus);
  u64 av = a.value % a.modulus, bv = b.value % b.modulus;
  if (av % g != bv % g) {
    throw CrtConflictError("crt: " + std::to_string(av) + " mod " + std::to_string(a.modulus) + " and " +
                           std::to_string(bv) + " mod " + std::to_string(b.modulus) + " are incompatible");
  }
  u64 l = lcm_checked(a.modulus, b.modulus);
  u64 m1 = a.modulus / g, m2 = b.modulus / g;
  // x = av + a.modulus * t with t = ((bv - av)/g) * inv(m1, m2) mod m2.
  __int128 diff = (static_cast<__int128>(bv) - static_cast<__int128>(av)) / static_cast<__int128>(g);
  __int128 dm = diff % static_cast<__int128>(m2);
  if (dm < 0) dm += m2;
  u64 t = mulmod(static_cast<u64>(dm), inverse_mod(m1 % m2, m2), m2);
  u128 x = static_cast<u128>(av) + static_cast<u128>(a.modulus) * t;
  return Residue{static_cast<u64>(x % l), l};
}

Residue crt(std::span<const Residue> residues) {
  Residue acc{0, 1};
  for (const auto& r : residues) acc = crt(acc, r);
  return acc;
}

// ---------------------------------------------------------------------------
// orders and roots
// ---------------------------------------------------------------------------

u64 multiplicative_order(u64 x, u64 n, u64 lambda_n) {
  if (n == 1) return 1;
  if (std::gcd(x % n, n) != 1) {
    throw PreconditionError("multiplicative_order: " + std::to_string(x) + " is not a unit modulo " + std::to_string(n));
  }
  u64 order = lambda_n;
  for (u64 q : factorize(lambda_n).primes()) {
    while (order % q == 0 && powmod(x, order / q, n) == 1) order /= q;
  }
  return order;
}

u64 multiplicative_order(u64 x, u64 n) { return multiplicative_order(x, n, carmichael_lambda(n)); }

bool has_odd_order(u64 x, u64 n) {
  if (n == 1) return true;
  if (std::gcd(x % n, n) != 1) return false;
  return powmod(x, odd_part(carmichael_lambda(n)), n) == 1;
}

namespace {

// Tonelli-Shanks modulo an odd prime; `a` must be a nonzero quadratic residue.
u64 tonelli_shanks(u64 a, u64 p) {
  a %= p;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (jacobi(static_cast<i64>(z), p) != -1) ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

u64 pow_u64_checked(u64 p, unsigned e) {
  u64 out = 1;
  for (unsigned i = 0; i < e; ++i) out = mul_checked(out, p);
  return out;
}

}  // namespace

std::vector<u64> sqrt_mod_prime_power(u64 a, u64 p, unsigned e) {
  if (e == 0) return {0};
  u64 pe = pow_u64_checked(p, e);
  a %= pe;
  if (std::gcd(a, p) != 1) throw PreconditionError("sqrt_mod_prime_power: argument must be a unit");
  if (p == 2) {
    // Lift roots one bit at a time; every root mod 2^(k+1) reduces to a root mod 2^k.
    std::vector<u64> roots{1};
    for (unsigned k = 1; k < e; ++k) {
      u64 next_mod = u64{1} << (k + 1);
      std::vector<u64> next;
      for (u64 r : roots) {
        for (u64 cand : {r, r + (u64{1} << k)}) {
          if (mulmod(cand, cand, next_mod) == a % next_mod) next.push_back(cand);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      roots = std::move(next);
      if (roots.empty()) return roots;
    }
    if (mulmod(1, 1, 2) != a % 2) return {};
    return roots;
  }
  if (jacobi(static_cast<i64>(a % p), p) != 1) return {};
  u64 r = tonelli_shanks(a, p);
  // Hensel: r <- r - (r^2 - a) / (2r) modulo successive powers of p.
  u64 pk = p;
  for (unsigned k = 1; k < e; ++k) {
    u64 next = pk * p;
    u64 f = (mulmod(r, r, next) + next - a % next) % next;
    u64 inv = inverse_mod(mulmod(2, r, next), next);
    r = (r + next - mulmod(f, inv, next)) % next;
    pk = next;
  }
  std::vector<u64> roots{r, (pe - r) % pe};
  std::sort(roots.begin(), roots.end());
  return roots;
}

u64 primitive_root_prime_power(u64 p, unsigned e) {
  if (p == 2 || !is_prime(p)) throw PreconditionError("primitive_root_prime_power: p must be an odd prime");
  auto qs = factorize(p - 1).primes();
  u64 g = 2;
  for (;; ++g) {
    bool ok = std::all_of(qs.begin(), qs.end(), [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (ok) break;
  }
  if (e >= 2) {
    u64 p2 = mul_checked(p, p);
    if (powmod(g, p - 1, p2) == 1) g += p;
  }
  return g % pow_u64_checked(p, e);
}

// ---------------------------------------------------------------------------
// smallest-prime-factor sieve
// ---------------------------------------------------------------------------

SmallestPrimeFactorSieve::SmallestPrimeFactorSieve(u64 limit, const SieveConfig& config) : limit_(limit) {
  if (limit < 2) throw PreconditionError("SmallestPrimeFactorSieve: limit must be at least 2");
  if (limit > config.max_limit) {
    throw ResourceLimitError("SmallestPrimeFactorSieve: limit " + std::to_string(limit) + " exceeds budget " +
                             std::to_string(config.max_limit));
  }
  spf_.assign(limit + 1, 0);
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  const auto base = primes_up_to(root);
  const u64 seg = std::max<u64>(config.segment_size, 1024);
  for (u64 lo = 2; lo <= limit; lo += seg) {
    u64 hi = std::min(limit, lo + seg - 1);
    for (u64 p : base) {
      if (p * p > hi) break;
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(p);
      }
    }
    for (u64 n = lo; n <= hi; ++n) {
      if (spf_[n] == 0) spf_[n] = static_cast<std::uint32_t>(n);
    }
  }
}

FactoredInt SmallestPrimeFactorSieve::factor(u64 n) const {
  if (n == 0 || n > limit_) throw PreconditionError("SmallestPrimeFactorSieve::factor: out of range");
  std::vector<PrimePower> f;
  while (n > 1) {
    u64 p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  return FactoredInt::from_factors(std::move(f));
}

bool SmallestPrimeFactorSieve::squarefree_primes(u64 n, std::vector<u64>& out) const {
  out.clear();
  while (n > 1) {
    u64 p = spf_[n];
    n /= p;
    if (n % p == 0) return false;
    out.push_back(p);
  }
  return true;
}

}  // namespace carmichael
