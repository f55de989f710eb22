#include "carmichael/korselt.hpp"

#include <numeric>
#include <stdexcept>

#include "carmichael/error.hpp"

namespace carmichael {

bool is_carmichael(const FactoredInt& n) {
  if (n.omega() < 2 || !n.is_squarefree()) return false;
  BigInt n_minus_1 = n.value() - 1;
  for (u64 p : n.primes()) {
    if (mod_u64(n_minus_1, p - 1) != 0) return false;
  }
  return true;
}

bool is_carmichael(u64 n) {
  if (n < 2 || n % 2 == 0) return false;
  return is_carmichael(factorize(n));
}

bool is_carmichael(const BigInt& n) {
  if (n < 2 || mpz_even_p(n.get_mpz_t())) return false;
  return is_carmichael(factorize(n));
}

void SeedParams::validate() const {
  const u64 q0 = a0.modulus;
  if (q0 == 0 || a0.value >= q0) throw PreconditionError("seed params: a0 must be reduced modulo q0");
  if (std::gcd(a0.value, q0) != 1) throw PreconditionError("seed params: gcd(a0, q0) != 1");
  const u64 a0m1 = (a0.value + q0 - 1) % q0;
  if (std::gcd(a0m1, q0) != 2) throw PreconditionError("seed params: gcd(a0 - 1, q0) != 2");
  if (m0.divisible_by(2) || !m0.is_squarefree()) throw PreconditionError("seed params: m0 must be odd and squarefree");
  if (l0 == 0 || l0 % 4 == 0) throw PreconditionError("seed params: l0 must be positive and not divisible by 4");
}

bool SeedCertificate::valid() const {
  if (!squarefree || !coprime_to_2m0 || !omega_ok) return false;
  for (const auto& c : per_prime) {
    if (!c.half_divides || !c.residue_ok) return false;
  }
  return true;
}

SeedCertificate check_seed(const FactoredInt& pi, const SeedParams& params) {
  params.validate();
  SeedCertificate cert;
  cert.pi = pi;
  cert.params = params;
  cert.squarefree = pi.is_squarefree();
  cert.coprime_to_2m0 = !pi.divisible_by(2) && pi.coprime_to(params.m0);
  cert.omega_ok = pi.omega() >= 1 && pi.omega() % params.l0 == 2 % params.l0;
  const BigInt m0pi_minus_1 = params.m0.value() * pi.value() - 1;
  for (u64 p : pi.primes()) {
    SeedPrimeCheck c;
    c.p = p;
    c.half_divides = p > 2 && mod_u64(m0pi_minus_1, (p - 1) / 2) == 0;
    c.residue_ok = params.a0.contains(p);
    cert.per_prime.push_back(c);
  }
  return cert;
}

bool check_assembly(const FactoredInt& g, const FactoredInt& P, const SeedCertificate& cert, const Residue& r) {
  if (!cert.valid()) throw PreconditionError("check_assembly: seed certificate is not valid");
  if (!g.coprime_to(P) || !g.coprime_to(cert.pi) || !P.coprime_to(cert.pi)) {
    throw OverlapError("check_assembly: g, P and pi share a prime factor");
  }
  const FactoredInt n = g * P * cert.pi;
  if (n.omega() < 3) return false;
  return is_carmichael(n) && r.contains(n.value());
}

std::vector<ChernickEntry> chernick_scan(u64 k_limit) {
  std::vector<ChernickEntry> out;
  for (u64 k = 1; k <= k_limit; ++k) {
    const u64 a = 6 * k + 1, b = 12 * k + 1, c = 18 * k + 1;
    if (!is_prime(a) || !is_prime(b) || !is_prime(c)) continue;
    const u64 primes[] = {a, b, c};
    FactoredInt n = FactoredInt::from_primes(primes);
    if (!is_carmichael(n)) throw std::logic_error("chernick_scan: Korselt rejected " + n.to_string());
    out.push_back({k, std::move(n)});
  }
  return out;
}

}  // namespace carmichael
