#include "carmichael/progression.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "carmichael/compat.hpp"
#include "carmichael/construct.hpp"
#include "carmichael/error.hpp"

namespace carmichael {

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::None: return "none";
    case ReductionKind::Reduce1: return "reduce1";
    case ReductionKind::Reduce2: return "reduce2";
    case ReductionKind::Joint: return "joint";
  }
  return "unknown";
}

namespace {

// True iff some integer = v (mod n) is 1 or 11 mod 12.
bool hits_pm1_mod12(u64 v, u64 n) {
  const u64 d = std::gcd(n, u64{12});
  return v % d == 1 % d || v % d == 11 % d;
}

// Strips from x every prime dividing y.
u64 strip_primes(u64 x, u64 y) {
  for (u64 p = std::gcd(x, y); p > 1; p = std::gcd(x, y)) {
    while (x % p == 0) x /= p;
  }
  return x;
}

struct ClassData {
  u64 r = 0, m = 1, g = 1, h = 1, lambda_g = 1;
  u64 m_tilde_rule = 1, m_tilde = 1;
  Residue a;
};

ClassData class_data(const Residue& rm) {
  const CompatVerdict v = classify(rm);
  if (!v.compatible()) {
    throw PreconditionError("progression: " + std::to_string(rm.value) + " mod " + std::to_string(rm.modulus) +
                            " is incompatible (" + std::string(to_string(v.reason)) + ")");
  }
  ClassData c;
  c.r = rm.value;
  c.m = rm.modulus;
  c.g = v.g;
  c.h = v.h;
  c.lambda_g = carmichael_lambda(c.g);
  c.m_tilde_rule = (c.g % 3 == 0 && c.m % 9 != 0) ? c.m / 3 : c.m;
  const u64 rg = c.r / c.g;
  // gcd(r/g, m/g) = 1, so only primes of g can be stripped and m/g | m~ survives.
  c.m_tilde = strip_primes(c.m_tilde_rule, rg == 0 ? c.m_tilde_rule : rg);
  const Residue lhs{rg % c.m_tilde, c.m_tilde};
  const Residue rhs{inverse_mod(c.g % c.lambda_g, c.lambda_g), c.lambda_g};
  c.a = crt(lhs, rhs);
  return c;
}

}  // namespace

ReductionKind needs_reduction(i64 r, u64 m) {
  const ClassData c = class_data(Residue::of(r, m));
  if (!hits_pm1_mod12((c.r / c.g) % (c.m / c.g), c.m / c.g)) return ReductionKind::Reduce1;
  if (!hits_pm1_mod12(inverse_mod(c.g % c.lambda_g, c.lambda_g), c.lambda_g)) return ReductionKind::Reduce2;
  if (!hits_pm1_mod12(c.a.value, c.a.modulus)) return ReductionKind::Joint;
  return ReductionKind::None;
}

ReductionStep apply_reduction(i64 r_in, u64 m, ReductionKind which, const ProgressionConfig& config) {
  if (which == ReductionKind::None) throw PreconditionError("apply_reduction: no reduction requested");
  const Residue rm = Residue::of(r_in, m);
  const ClassData c = class_data(rm);
  // Allowed s values: Reduce1 fixes s from r - 1, the others try both.
  std::vector<u64> allowed{4, 6};
  if (which == ReductionKind::Reduce1) {
    const u64 r12 = c.r % 12;
    if ((r12 + 11) % 3 == 0) {
      allowed = {6};
    } else if ((r12 + 11) % 4 == 0) {
      allowed = {4};
    } else {
      throw PreconditionError("apply_reduction: neither 3 nor 4 divides r - 1");
    }
  }
  for (u64 p = 5; p <= config.reduction_ceiling; p = next_prime(p)) {
    const u64 s = p % 12 == 5 ? 4 : p % 12 == 7 ? 6 : 0;
    if (s == 0 || std::find(allowed.begin(), allowed.end(), s) == allowed.end()) continue;
    if (m % p == 0) continue;
    const u64 rest = (p - 1) / s;
    if (rest > 1 && factorize(rest).smallest_prime() <= config.floor) continue;
    const u64 m2 = mul_checked(p, m);
    const Residue r2 = crt(Residue{0, p}, rm);
    if (!classify(r2).compatible()) continue;
    const ReductionKind after = needs_reduction(static_cast<i64>(r2.value), m2);
    bool fixed = false;
    switch (which) {
      case ReductionKind::Reduce1: fixed = after != ReductionKind::Reduce1; break;
      case ReductionKind::Reduce2: fixed = after != ReductionKind::Reduce1 && after != ReductionKind::Reduce2; break;
      default: fixed = after == ReductionKind::None; break;
    }
    if (!fixed) continue;
    return ReductionStep{which, p, s, rm, r2};
  }
  throw ResourceLimitError("apply_reduction: no auxiliary prime below " + std::to_string(config.reduction_ceiling) +
                           " for " + std::to_string(rm.value) + " mod " + std::to_string(m));
}

// ---------------------------------------------------------------------------
// P
// ---------------------------------------------------------------------------

FindPResult find_P(const Residue& a, u64 g, const ProgressionConfig& config) {
  const u64 q = a.modulus;
  if (std::gcd(a.value, q) != 1) throw PreconditionError("find_P: a is not a unit mod q");
  if (!hits_pm1_mod12(a.value, q)) {
    throw ResourceLimitError("find_P: stage a-decomposition: a mod q has no member = 1 or 11 mod 12");
  }
  // Each p_i = 2 mod 3 (when 3 | q) and 3 mod 4 (when 4 | q), so P = (-1)^ell there.
  std::vector<unsigned> ells;
  for (unsigned ell : {2u, 3u}) {
    const u64 sign = ell % 2 == 0 ? 1 : q - 1;
    if (q % 3 == 0 && sign % 3 != a.value % 3) continue;
    if (q % 4 == 0 && sign % 4 != a.value % 4) continue;
    ells.push_back(ell);
  }
  if (ells.empty()) throw ResourceLimitError("find_P: stage a-decomposition: no admissible ell");

  const u64 two_t = u64{1} << config.T;
  std::vector<u64> cand;
  std::vector<u64> halves;
  for (u64 p = 3; p <= config.prime_ceiling; p = next_prime(p)) {
    if (p % 4 != 3 || q % p == 0 || g % p == 0) continue;
    const u64 half = (p - 1) / 2;
    if (std::gcd(half, q) != 1 || std::gcd(half, g) != 1) continue;
    const FactoredInt hf = factorize(half);
    if (!hf.is_squarefree()) continue;
    bool ok = true;
    for (u64 r : hf.primes()) ok = ok && r % two_t != 1;
    if (!ok) continue;
    cand.push_back(p);
    halves.push_back(half);
  }
  if (cand.size() < 2) throw ResourceLimitError("find_P: stage P1: fewer than two candidate primes");

  const u64 a_inv = inverse_mod(a.value % q, q);
  std::optional<FindPResult> best;
  u128 best_product = ~u128{0};
  auto consider = [&](const std::vector<std::size_t>& idx, unsigned ell) {
    u128 product = 1;
    for (std::size_t i : idx) product *= cand[i];
    if (product >= best_product || product > ~u64{0}) return;
    u64 H = 1;
    for (std::size_t i : idx) H = lcm_checked(H, halves[i]);
    for (std::size_t i : idx) {
      if (H % cand[i] == 0) return;
    }
    const u64 P = static_cast<u64>(product);
    if (!has_odd_order(mulmod(a_inv, P % q, q), q)) return;
    if (std::gcd(g % H, H) != 1 && H > 1) return;
    const u64 gp = mulmod(g % H, P % H, H);
    if (!has_odd_order(gp, H)) return;
    FindPResult r;
    std::vector<u64> ps;
    for (std::size_t i : idx) {
      ps.push_back(cand[i]);
      r.a_parts.push_back(cand[i] % q);
    }
    r.P = FactoredInt::from_primes(ps);
    r.ell = ell;
    r.lambda_half = H;
    r.order_mod_q = multiplicative_order(mulmod(a_inv, P % q, q), q);
    r.order_mod_half = multiplicative_order(gp, H);
    best = std::move(r);
    best_product = product;
  };
  const std::size_t n = cand.size();
  for (unsigned ell : ells) {
    if (ell == 2) {
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (static_cast<u128>(cand[i]) * cand[j] >= best_product) break;
          consider({i, j}, 2);
        }
      }
    } else {
      const std::size_t lim = std::min(n, config.max_candidates);
      for (std::size_t k = 2; k < lim; ++k) {
        for (std::size_t j = 1; j < k; ++j) {
          if (static_cast<u128>(cand[0]) * cand[j] * cand[k] >= best_product) break;
          for (std::size_t i = 0; i < j; ++i) {
            if (static_cast<u128>(cand[i]) * cand[j] * cand[k] >= best_product) break;
            consider({i, j, k}, 3);
          }
        }
      }
    }
  }
  if (!best) {
    throw ResourceLimitError(std::string("find_P: stage ") + (ells.back() == 3 ? "P3" : "P2") +
                             ": no qualifying product of primes below " + std::to_string(config.prime_ceiling));
  }
  return *best;
}

// ---------------------------------------------------------------------------
// derivation
// ---------------------------------------------------------------------------

namespace {

// Square roots of `target` mod q0 that are not 1 modulo any odd prime of q0 and
// are 3 mod 4. Returns the smallest. `target` is meaningful modulo q', q0 = lcm(q', 4).
u64 normalized_root(u64 target, u64 q_prime, u64 q0) {
  std::vector<Residue> choices_mod;
  std::vector<std::vector<u64>> choices;
  for (const auto& f : factorize(q0).factors()) {
    u64 pe = 1;
    for (unsigned i = 0; i < f.exponent; ++i) pe *= f.prime;
    std::vector<u64> roots;
    if (f.prime == 2) {
      // Only q' constrains the square; 4 | q0 adds the 3 mod 4 condition.
      const unsigned v = two_adic_valuation(q_prime);
      if (pe <= 64) {
        const u64 mod_v = u64{1} << std::min(v, 6u);
        for (u64 x = 3; x < pe; x += 4) {
          if (mulmod(x, x, mod_v) == target % mod_v) roots.push_back(x);
        }
      } else {
        for (u64 x : sqrt_mod_prime_power(target % pe, 2, f.exponent)) {
          if (x % 4 == 3) roots.push_back(x);
        }
      }
    } else {
      for (u64 x : sqrt_mod_prime_power(target % pe, f.prime, f.exponent)) {
        if (x % f.prime != 1) roots.push_back(x);
      }
    }
    if (roots.empty()) throw std::logic_error("derive_params: a' has no normalized square root");
    choices_mod.push_back(Residue{0, pe});
    choices.push_back(std::move(roots));
  }
  u64 best = ~u64{0};
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    Residue acc{0, 1};
    for (std::size_t i = 0; i < choices.size(); ++i) acc = crt(acc, Residue{choices[i][pick[i]], choices_mod[i].modulus});
    best = std::min(best, acc.value);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return best;
}

}  // namespace

DerivationTrace derive_params(i64 r_in, u64 m_in, const ProgressionConfig& config) {
  DerivationTrace t;
  t.input = Residue::of(r_in, m_in);
  t.T = config.T;
  Residue cur = t.input;
  class_data(cur);  // rejects incompatible input
  for (int step = 0; step < 6; ++step) {
    const ReductionKind kind = needs_reduction(static_cast<i64>(cur.value), cur.modulus);
    if (kind == ReductionKind::None) break;
    ReductionStep rs = apply_reduction(static_cast<i64>(cur.value), cur.modulus, kind, config);
    cur = rs.after;
    t.reductions.push_back(rs);
  }
  if (needs_reduction(static_cast<i64>(cur.value), cur.modulus) != ReductionKind::None) {
    throw ResourceLimitError("derive_params: reductions did not settle");
  }
  t.target = cur;
  const ClassData c = class_data(cur);
  t.g = c.g;
  t.h = c.h;
  t.m_tilde_rule = c.m_tilde_rule;
  t.m_tilde = c.m_tilde;
  t.a = c.a;
  t.P = find_P(t.a, t.g, config);

  const u64 q = t.q();
  const u64 H = t.P.lambda_half;
  const u64 P = t.P.P.to_u64();
  const Residue r3{mulmod(t.a.value, inverse_mod(P % q, q), q), q};
  const Residue r4{H == 1 ? 0 : inverse_mod(mulmod(t.g % H, P % H, H), H), H};
  t.a_prime = crt(r3, r4);
  const u64 q0 = lcm_checked(t.a_prime.modulus, 4);
  t.a0 = Residue{normalized_root(t.a_prime.value, t.a_prime.modulus, q0), q0};
  t.l0 = multiplicative_order(t.a0.value, q0);
  t.m0 = factorize(t.g) * t.P.P;
  const auto bad = check_trace(t);
  if (!bad.empty()) throw std::logic_error("derive_params: trace invariant failed: " + bad.front());
  return t;
}

std::vector<std::string> check_trace(const DerivationTrace& t) {
  std::vector<std::string> bad;
  auto need = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  const u64 m = t.target.modulus, r = t.target.value;
  const u64 g = std::gcd(r, m);
  const u64 lg = carmichael_lambda(g);
  need(t.g == g, "g = gcd(r, m)");
  need(t.input.modulus != 0 && m % t.input.modulus == 0 && r % t.input.modulus == t.input.value,
       "reduced class lies inside the input class");
  for (const auto& s : t.reductions) need(classify(s.after).compatible(), "reduced class is compatible");
  need(classify(t.target).compatible(), "target class is compatible");
  need(t.m_tilde_rule == ((g % 3 == 0 && m % 9 != 0) ? m / 3 : m), "m~ = m/3 if 3 | g and 9 does not divide m, else m");
  need(t.m_tilde_rule % t.m_tilde == 0 && t.m_tilde % (m / g) == 0, "m/g | m~ | m~ rule");
  const u64 q = t.q();
  need(q == lcm_checked(t.m_tilde, lg), "q = lcm(m~, lambda(g))");
  need(t.a.value % t.m_tilde == (r / g) % t.m_tilde, "a = r/g mod m~");
  need(mulmod(t.a.value % lg, g % lg, lg) == 1 % lg, "a = g^-1 mod lambda(g)");
  need(std::gcd(t.a.value, q) == 1, "a is a unit mod q");
  if (!bad.empty()) return bad;

  const FactoredInt& Pf = t.P.P;
  need(Pf.is_squarefree() && (Pf.omega() == 2 || Pf.omega() == 3), "P is a squarefree product of 2 or 3 primes");
  const u64 P = Pf.to_u64();
  const u64 H = to_u64(carmichael_lambda(Pf)) / 2;
  need(H == t.P.lambda_half, "lambda(P)/2 recorded");
  need(H % 2 == 1 && std::gcd(H, q) == 1, "lambda(P)/2 coprime to 2q");
  const u64 x = mulmod(inverse_mod(t.a.value, q), P % q, q);
  const u64 ox = multiplicative_order(x, q);
  need(ox % 2 == 1 && ox == t.P.order_mod_q, "a^-1 P has odd order mod q");
  const u64 y = mulmod(g % H, P % H, H);
  const bool unit_y = std::gcd(y, H) == 1;
  need(unit_y, "gP is a unit mod lambda(P)/2");
  if (unit_y) {
    const u64 oy = multiplicative_order(y, H);
    need(oy % 2 == 1 && oy == t.P.order_mod_half, "gP has odd order mod lambda(P)/2");
  }

  const u64 qp = t.q_prime();
  need(qp == lcm_checked(q, H), "q' = lcm(q, lambda(P)/2)");
  need(mulmod(t.a_prime.value % q, P % q, q) == t.a.value % q, "a' = a P^-1 mod q");
  need(H == 1 || mulmod(t.a_prime.value % H, y, H) == 1, "a' = (gP)^-1 mod lambda(P)/2");
  const u64 q0 = t.q0();
  need(q0 == lcm_checked(qp, 4), "q0 = lcm(q', 4)");
  need(mulmod(t.a0.value, t.a0.value, qp) == t.a_prime.value % qp, "a0^2 = a' mod q'");
  need(std::gcd((t.a0.value + q0 - 1) % q0, q0) == 2, "gcd(a0 - 1, q0) = 2");
  need(t.a0.value % 4 == 3, "a0 = 3 mod 4");
  const bool unit_a0 = std::gcd(t.a0.value, q0) == 1;
  need(unit_a0, "a0 is a unit mod q0");
  if (unit_a0) need(t.l0 == multiplicative_order(t.a0.value, q0), "l0 = order of a0 mod q0");
  need(t.m0 == factorize(g) * Pf, "m0 = gP");
  return bad;
}

bool seed_matches_trace(const DerivationTrace& t, const FactoredInt& pi) {
  return t.a_prime.contains(pi.value());
}

// ---------------------------------------------------------------------------
// end to end
// ---------------------------------------------------------------------------

namespace {

bool verified(const FactoredInt& n, const Residue& cls) {
  if (!cls.contains(n.value())) return false;
  if (fits_u64(n.value())) return is_carmichael(to_u64(n.value()));
  return is_carmichael(n);
}

// Best-effort seeds: primes p = 2dk + 1 = a0 (mod q0) with d | L odd, and
// m0 * pi = 1 modulo 2kL, omega(pi) = 2 (mod l0).
std::vector<FactoredInt> constructed_seeds(const DerivationTrace& t, const ProgressionConfig& config,
                                           std::vector<std::string>& notes) {
  const u64 q0 = t.q0();
  const u64 m0 = t.m0.to_u64();
  std::vector<u64> lp;
  for (u64 p = 3; lp.size() < config.construct_L_primes; p = next_prime(p)) {
    if (q0 % p != 0 && m0 % p != 0) lp.push_back(p);
  }
  const FactoredInt Lodd = FactoredInt::from_primes(lp);
  const u64 L2 = mul_checked(2, Lodd.to_u64());
  const FactoredInt L2f = factorize(L2);
  // p = 2dk + 1 = a0 (mod q0) iff dk = (a0 - 1)/2 (mod q0/2). Divisors d sharing a
  // residue mod q0/2 all land in the class for one residue of k.
  const u64 h0 = q0 / 2;
  const u64 c = ((t.a0.value + q0 - 1) % q0) / 2 % h0;
  std::map<u64, std::vector<u64>> by_class;
  for (u64 d : all_divisors(Lodd)) {
    if (std::gcd(d, h0) == 1) by_class[d % h0].push_back(d);
  }
  std::vector<std::pair<u64, std::vector<u64>>> classes(by_class.begin(), by_class.end());
  std::stable_sort(classes.begin(), classes.end(),
                   [](const auto& x, const auto& y) { return x.second.size() > y.second.size(); });
  std::vector<FactoredInt> out;
  std::size_t families = 0, tried = 0;
  for (const auto& [cls, ds] : classes) {
    if (ds.size() < 3 || out.size() >= config.max_witnesses) break;
    const u64 k0 = mulmod(c, inverse_mod(cls, h0), h0);
    for (u64 k = k0 == 0 ? h0 : k0; tried < config.construct_k_limit && out.size() < config.max_witnesses; k += h0) {
      ++tried;
      if (k % 2 == 0 || std::gcd(k, L2) != 1 || std::gcd(k, m0) != 1) continue;
      PrimeFamily fam{k, L2f, {}};
      for (u64 d : ds) {
        const u64 p = mul_checked(2 * d, k) + 1;
        if (!t.a0.contains(p) || m0 % p == 0 || L2 % p == 0 || !is_prime(p)) continue;
        fam.members.push_back({2 * d, p});
      }
      if (fam.members.size() < 3) continue;
      ++families;
      ConstructionTarget target{Residue{inverse_mod(m0 % L2, L2), L2}, std::nullopt, t.m0, 2 % t.l0, t.l0};
      if (k > 1) target.extra = Residue{inverse_mod(m0 % k, k), k};
      try {
        for (auto& cn : construct_carmichael(fam, target, config.max_witnesses - out.size())) {
          out.push_back(FactoredInt::from_primes(cn.chosen));
        }
      } catch (const NotFoundError&) {
      }
    }
  }
  if (out.empty()) {
    notes.push_back("construct path: no seed from " + std::to_string(families) + " families over " +
                    std::to_string(tried) + " values of k");
  }
  return out;
}

}  // namespace

EndToEndResult end_to_end(i64 r, u64 m, const std::vector<CarmichaelRecord>& corpus, const ProgressionConfig& config) {
  EndToEndResult res;
  const Residue cls = Residue::of(r, m);
  class_data(cls);
  std::set<BigInt> seen;
  auto emit = [&](const FactoredInt& n, const char* method) {
    if (seen.count(n.value()) || !verified(n, cls)) return false;
    seen.insert(n.value());
    res.witnesses.push_back({n.value(), n, method});
    return true;
  };

  std::size_t direct = 0;
  for (const auto& rec : corpus) {
    if (direct >= config.max_witnesses) break;
    if (cls.contains(rec.n) && emit(FactoredInt::from_primes(rec.factors), "corpus")) ++direct;
  }
  if (direct == 0) res.notes.push_back("corpus path: no corpus member in the class");

  try {
    res.trace = derive_params(r, m, config);
  } catch (const ResourceLimitError& e) {
    res.notes.push_back(e.what());
    return res;
  }
  const DerivationTrace& t = *res.trace;
  const SeedParams params = t.seed_params();
  const FactoredInt gf = factorize(t.g);
  auto assemble = [&](const FactoredInt& pi, const char* method) {
    if (!pi.coprime_to(t.m0)) return false;
    const SeedCertificate cert = check_seed(pi, params);
    if (!cert.valid() || !seed_matches_trace(t, pi)) return false;
    if (!check_assembly(gf, t.P.P, cert, t.target)) return false;
    return emit(gf * t.P.P * pi, method);
  };

  std::size_t seeded = 0;
  for (const auto& rec : corpus) {
    if (seeded >= config.max_witnesses) break;
    bool residues = true;
    for (u64 p : rec.factors) residues = residues && t.a0.contains(p);
    if (!residues) continue;
    if (assemble(FactoredInt::from_primes(rec.factors), "corpus-seed")) ++seeded;
  }
  if (seeded == 0) res.notes.push_back("corpus-seed path: no corpus member is a seed for the derived parameters");

  if (config.try_construct) {
    for (const auto& pi : constructed_seeds(t, config, res.notes)) assemble(pi, "construct");
  }
  if (res.witnesses.empty()) res.notes.push_back("no witness found within the configured budgets");
  return res;
}

// ---------------------------------------------------------------------------
// output
// ---------------------------------------------------------------------------

std::string to_json(const DerivationTrace& t) {
  using nlohmann::json;
  auto res = [](const Residue& x) { return json{{"value", x.value}, {"modulus", x.modulus}}; };
  json reds = json::array();
  for (const auto& s : t.reductions) {
    reds.push_back({{"kind", std::string(to_string(s.kind))},
                    {"p", s.p},
                    {"s", s.s},
                    {"before", res(s.before)},
                    {"after", res(s.after)}});
  }
  json j{{"input", res(t.input)},
         {"reductions", reds},
         {"target", res(t.target)},
         {"g", t.g},
         {"h", t.h},
         {"m_tilde_rule", t.m_tilde_rule},
         {"m_tilde", t.m_tilde},
         {"a", res(t.a)},
         {"P", {{"value", t.P.P.to_u64()},
                {"primes", t.P.P.primes()},
                {"ell", t.P.ell},
                {"a_parts", t.P.a_parts},
                {"lambda_half", t.P.lambda_half},
                {"order_mod_q", t.P.order_mod_q},
                {"order_mod_half", t.P.order_mod_half}}},
         {"a_prime", res(t.a_prime)},
         {"a0", res(t.a0)},
         {"l0", t.l0},
         {"m0", t.m0.to_u64()},
         {"T", t.T},
         {"invariant_failures", check_trace(t)}};
  return j.dump(2);
}

std::string transcript(const DerivationTrace& t) {
  std::ostringstream o;
  o << "class        " << t.input.value << " mod " << t.input.modulus << "\n";
  for (const auto& s : t.reductions) {
    o << "reduction    " << to_string(s.kind) << ": p = " << s.p << ", s = " << s.s << " -> " << s.after.value
      << " mod " << s.after.modulus << "\n";
  }
  o << "working      " << t.target.value << " mod " << t.target.modulus << "\n";
  o << "g, h         " << t.g << ", " << t.h << "\n";
  o << "m~           " << t.m_tilde_rule;
  if (t.m_tilde != t.m_tilde_rule) o << " (unit-adjusted to " << t.m_tilde << ")";
  o << "\n";
  o << "a mod q      " << t.a.value << " mod " << t.a.modulus << "\n";
  o << "P            " << t.P.P.to_string() << " (lambda(P)/2 = " << t.P.lambda_half << ", orders "
    << t.P.order_mod_q << " and " << t.P.order_mod_half << ")\n";
  o << "a' mod q'    " << t.a_prime.value << " mod " << t.a_prime.modulus << "\n";
  o << "a0 mod q0    " << t.a0.value << " mod " << t.a0.modulus << "\n";
  o << "l0           " << t.l0 << "\n";
  o << "m0 = gP      " << t.m0.to_string() << "\n";
  const auto bad = check_trace(t);
  o << "invariants   " << (bad.empty() ? "all hold" : "FAILED: " + bad.front()) << "\n";
  return o.str();
}

}  // namespace carmichael
