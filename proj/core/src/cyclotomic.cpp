#include "carmichael/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <mpfr.h>

#include "carmichael/error.hpp"

namespace carmichael {

EisensteinPrimeIdeal EisensteinPrimeIdeal::make(u64 p, unsigned tag) {
  if (p == 3 || !is_prime(p)) throw PreconditionError("Eisenstein prime: " + std::to_string(p) + " is 3 or not prime");
  if (tag > 1 || (p % 3 == 2 && tag != 0)) throw PreconditionError("Eisenstein prime: bad conjugate tag");
  return {p, tag};
}

EisensteinIdeal::EisensteinIdeal(std::vector<EisensteinPrimePower> parts) {
  std::map<EisensteinPrimeIdeal, unsigned> merged;
  for (const auto& pp : parts) {
    EisensteinPrimeIdeal::make(pp.prime.p, pp.prime.tag);
    if (pp.exponent > 0) merged[pp.prime] += pp.exponent;
  }
  for (const auto& [p, e] : merged) parts_.push_back({p, e});
}

u64 EisensteinIdeal::norm() const {
  u64 n = 1;
  for (const auto& pp : parts_) {
    for (unsigned i = 0; i < pp.exponent; ++i) n = mul_checked(n, pp.prime.norm());
  }
  return n;
}

bool EisensteinIdeal::norm_squarefree() const {
  std::map<u64, unsigned> per_p;
  for (const auto& pp : parts_) {
    if (!pp.prime.split()) return false;
    per_p[pp.prime.p] += pp.exponent;
  }
  return std::all_of(per_p.begin(), per_p.end(), [](const auto& kv) { return kv.second == 1; });
}

std::vector<EisensteinIdeal> EisensteinIdeal::divisors() const {
  std::vector<std::vector<EisensteinPrimePower>> acc{{}};
  for (const auto& pp : parts_) {
    std::vector<std::vector<EisensteinPrimePower>> next;
    for (const auto& base : acc) {
      for (unsigned e = 0; e <= pp.exponent; ++e) {
        auto v = base;
        if (e > 0) v.push_back({pp.prime, e});
        next.push_back(std::move(v));
      }
    }
    acc = std::move(next);
  }
  std::vector<EisensteinIdeal> out;
  for (auto& v : acc) out.emplace_back(std::move(v));
  return out;
}

std::string EisensteinIdeal::signature() const {
  if (parts_.empty()) return "1";
  std::string s;
  for (const auto& pp : parts_) {
    if (!s.empty()) s += '*';
    if (pp.prime.split()) {
      s += std::to_string(pp.prime.p) + (pp.prime.tag == 0 ? "a" : "b");
    } else {
      s += "(" + std::to_string(pp.prime.p) + ")";
    }
    if (pp.exponent > 1) s += "^" + std::to_string(pp.exponent);
  }
  return s;
}

EisensteinIdeal operator*(const EisensteinIdeal& a, const EisensteinIdeal& b) {
  auto parts = a.parts_;
  parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
  return EisensteinIdeal(std::move(parts));
}

namespace {

// nu on the block of primes above one rational prime.
int block_nu(bool split, unsigned a, unsigned b) {
  if (!split) return a == 0 ? 1 : a == 1 ? -1 : 0;
  const unsigned i = a + b;
  const unsigned distinct = (a > 0) + (b > 0);
  if (i == 0) return 1;
  const int sign = (i - 1) % 2 == 0 ? 1 : -1;
  if (distinct == i) return sign * static_cast<int>(i - 1);
  if (distinct + 1 == i) return sign;
  return 0;
}

void dfs(const std::vector<u64>& primes, std::size_t from, u64 norm, u64 Q, std::vector<EisensteinPrimePower>& parts,
         const std::function<void(const EisensteinIdeal&)>& visit) {
  visit(EisensteinIdeal(parts));
  for (std::size_t i = from; i < primes.size(); ++i) {
    const u64 p = primes[i];
    const u64 room = Q / norm;
    if (p > room) break;
    if (p % 3 == 2) {
      if (p > room / p) continue;
      u64 n = norm;
      for (unsigned c = 1; n <= Q / (p * p); ++c) {
        n *= p * p;
        parts.push_back({{p, 0}, c});
        dfs(primes, i + 1, n, Q, parts, visit);
        parts.pop_back();
      }
      continue;
    }
    // Split: exponents (a, b) not both zero with p^(a+b) <= room.
    for (unsigned a = 0;; ++a) {
      u64 na = norm;
      bool fits = true;
      for (unsigned j = 0; j < a; ++j) {
        if (na > Q / p) {
          fits = false;
          break;
        }
        na *= p;
      }
      if (!fits) break;
      u64 n = na;
      for (unsigned b = 0;; ++b) {
        if (b > 0) {
          if (n > Q / p) break;
          n *= p;
        }
        if (a == 0 && b == 0) continue;
        if (a > 0) parts.push_back({{p, 0}, a});
        if (b > 0) parts.push_back({{p, 1}, b});
        dfs(primes, i + 1, n, Q, parts, visit);
        if (b > 0) parts.pop_back();
        if (a > 0) parts.pop_back();
      }
    }
  }
}

}  // namespace

void for_each_ideal(u64 Q, const std::function<void(const EisensteinIdeal&)>& visit) {
  if (Q == 0) return;
  std::vector<u64> primes;
  for (u64 p : primes_up_to(Q)) {
    if (p != 3) primes.push_back(p);
  }
  std::vector<EisensteinPrimePower> parts;
  dfs(primes, 0, 1, Q, parts, visit);
}

std::vector<EisensteinIdeal> ideals_up_to(u64 Q) {
  if (Q < 1) throw PreconditionError("ideals_up_to: Q must be at least 1");
  if (Q > kIdealEnumerationMax) {
    throw ResourceLimitError("ideals_up_to: Q = " + std::to_string(Q) + " exceeds " +
                             std::to_string(kIdealEnumerationMax));
  }
  std::vector<std::pair<u64, EisensteinIdeal>> keyed;
  for_each_ideal(Q, [&](const EisensteinIdeal& I) { keyed.emplace_back(I.norm(), I); });
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second.signature() < y.second.signature();
  });
  std::vector<EisensteinIdeal> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

int nu(const EisensteinIdeal& ideal) {
  int value = 1;
  const auto& parts = ideal.parts();
  for (std::size_t i = 0; i < parts.size();) {
    const u64 p = parts[i].prime.p;
    unsigned e[2] = {0, 0};
    for (; i < parts.size() && parts[i].prime.p == p; ++i) e[parts[i].prime.tag] = parts[i].exponent;
    value *= block_nu(p % 3 == 1, e[0], e[1]);
    if (value == 0) return 0;
  }
  return value;
}

u64 ideal_count_formula(u64 n) {
  if (n == 0) throw PreconditionError("ideal_count_formula: n must be positive");
  if (n % 3 == 0) return 0;
  i64 sum = 0;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    auto chi = [](u64 x) { return x % 3 == 0 ? 0 : x % 3 == 1 ? 1 : -1; };
    sum += chi(d);
    if (d != n / d) sum += chi(n / d);
  }
  return static_cast<u64>(sum);
}

MobiusReport verify_mobius_identity(u64 Q, bool keep_rows) {
  if (Q > 100'000) throw ResourceLimitError("verify_mobius_identity: Q above 10^5");
  MobiusReport report;
  report.Q = Q;
  for (const auto& I : ideals_up_to(std::max<u64>(Q, 1))) {
    MobiusRow row;
    row.norm = I.norm();
    row.signature = I.signature();
    for (const auto& d : I.divisors()) row.divisor_sum += nu(d);
    row.mu_squared = I.norm_squarefree() ? 1 : 0;
    ++report.checked;
    if (!row.ok()) report.failures.push_back(row);
    if (keep_rows) report.rows.push_back(std::move(row));
  }
  return report;
}

std::string mobius_csv(const MobiusReport& report) {
  std::ostringstream o;
  o << "norm,ideal_signature,divisor_sum,mu_squared,ok\n";
  const auto& rows = report.rows.empty() ? report.failures : report.rows;
  for (const auto& r : rows) {
    o << r.norm << ',' << r.signature << ',' << r.divisor_sum << ',' << r.mu_squared << ',' << (r.ok() ? 1 : 0) << '\n';
  }
  return o.str();
}

ZetaPartial zeta_nu_partial(i64 s_num, u64 s_den, u64 Q) { return zeta_nu_partial(s_num, s_den, {Q / 4, Q / 2, Q}); }

ZetaPartial zeta_nu_partial(i64 s_num, u64 s_den, std::vector<u64> bounds) {
  if (s_den == 0 || s_num <= 0) throw PreconditionError("zeta_nu_partial: s must be a positive rational");
  if (bounds.empty() || !std::is_sorted(bounds.begin(), bounds.end())) {
    throw PreconditionError("zeta_nu_partial: bounds must be nonempty and ascending");
  }
  const u64 Q = bounds.back();
  if (Q > kIdealEnumerationMax) throw ResourceLimitError("zeta_nu_partial: Q above the enumeration limit");
  ZetaPartial out;
  out.s_num = s_num;
  out.s_den = s_den;
  out.Q = Q;
  out.bounds = std::move(bounds);

  // |nu| per norm; only norms with a nonzero term matter.
  std::map<u64, u64> weight;
  for_each_ideal(Q, [&](const EisensteinIdeal& I) {
    const int v = nu(I);
    if (v != 0) weight[I.norm()] += static_cast<u64>(std::abs(v));
  });

  constexpr mpfr_prec_t prec = 256;
  mpfr_t s, term, sum, base;
  mpfr_inits2(prec, s, term, sum, base, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(s, -s_num, MPFR_RNDN);
  mpfr_div_ui(s, s, s_den, MPFR_RNDN);
  mpfr_set_zero(sum, 1);
  std::size_t next = 0;
  auto record = [&]() {
    out.values.push_back(mpfr_get_d(sum, MPFR_RNDN));
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.30Rg", sum);
    out.exact_digits.emplace_back(buf);
  };
  for (const auto& [n, w] : weight) {
    while (next < out.bounds.size() && n > out.bounds[next]) {
      record();
      ++next;
    }
    mpfr_set_ui(base, n, MPFR_RNDN);
    mpfr_pow(term, base, s, MPFR_RNDN);
    mpfr_mul_ui(term, term, w, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    out.terms += w;
  }
  while (next < out.bounds.size()) {
    record();
    ++next;
  }
  // Each term and addition is correctly rounded; s itself carries one rounding.
  // A generous bound: (3 * terms + 3) ulps at 2^-250 relative to the final sum,
  // plus the double conversion.
  const double final_value = out.values.back();
  out.error_bound = final_value * (std::ldexp(3.0 * static_cast<double>(out.terms + 1), -250) + std::ldexp(1.0, -52));
  mpfr_clears(s, term, sum, base, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace carmichael
