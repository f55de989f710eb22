#include "carmichael/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "carmichael/error.hpp"
#include "carmichael/korselt.hpp"

namespace carmichael {

void ConstructionConfig::validate() {
  if (w == 0) throw PreconditionError("construction config: w must be at least 1");
  if (R1 >= R2) throw PreconditionError("construction config: R1 must be below R2");
  if (T == 0 || T > 63) throw PreconditionError("construction config: T must lie in [1, 63]");
  if (l0 == 0) throw PreconditionError("construction config: l0 must be positive");
  if (L == 0 && y < 50) throw PreconditionError("construction config: y must be at least 50");
  if (use_dstar && !seed_residue) throw PreconditionError("construction config: the d* clause needs a0 mod q0");
  const u64 expected = compute_w0(l0);
  if (w0 == 0) {
    w0 = expected;
  } else if (w0 != expected) {
    throw PreconditionError("construction config: w0 = " + std::to_string(w0) + " but l0 = " + std::to_string(l0) +
                            " forces " + std::to_string(expected));
  }
}

void PrimeFamily::validate() const {
  const u64 l = L.to_u64();
  if (k == 0) throw PreconditionError("prime family: k must be positive");
  if (std::gcd(k, l) != 1) throw PreconditionError("prime family: gcd(k, L) != 1");
  for (const auto& m : members) {
    if (l % m.d != 0) throw PreconditionError("prime family: " + std::to_string(m.d) + " does not divide L");
    if (m.p != mul_checked(m.d, k) + 1 || !is_prime(m.p)) {
      throw PreconditionError("prime family: " + std::to_string(m.p) + " is not a prime d*k + 1");
    }
  }
}

std::vector<QualifiedPrime> build_Q(const ConstructionConfig& config) {
  if (config.y < 50) throw PreconditionError("build_Q: y must be at least 50");
  std::vector<QualifiedPrime> out;
  for (u64 q : primes_up_to(config.y)) {
    const u64 half = (q - 1) / 2;
    if (q < 5 || half % 2 == 0) continue;
    FactoredInt f = factorize(half);
    if (!f.is_squarefree() || f.omega() < 2 || f.smallest_prime() < config.floor) continue;
    bool qr = true;
    if (config.m0 > 1) qr = jacobi(static_cast<i64>(config.m0 % q), q) == 1;
    if (!qr) continue;
    out.push_back({q, std::move(f), qr});
  }
  return out;
}

std::pair<std::vector<QualifiedPrime>, std::vector<QualifiedPrime>> split_Q(const std::vector<QualifiedPrime>& qs) {
  if (qs.size() < 2) throw PreconditionError("split_Q: need at least two primes");
  std::vector<const QualifiedPrime*> order;
  for (const auto& q : qs) order.push_back(&q);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->q > b->q; });
  std::vector<QualifiedPrime> side[2];
  std::map<u64, std::size_t> load[2];
  for (const auto* q : order) {
    int pick;
    if (side[0].size() != side[1].size()) {
      pick = side[0].size() < side[1].size() ? 0 : 1;
    } else {
      std::size_t c[2] = {0, 0};
      for (u64 p : q->half.primes()) {
        for (int s = 0; s < 2; ++s) c[s] += load[s][p];
      }
      pick = c[1] < c[0] ? 1 : 0;
    }
    for (u64 p : q->half.primes()) ++load[pick][p];
    side[pick].push_back(*q);
  }
  return {std::move(side[0]), std::move(side[1])};
}

FactoredInt sub_modulus(const std::vector<QualifiedPrime>& qs, u64 p) {
  std::vector<u64> primes;
  for (const auto& q : qs) {
    if (q.q % p == 1) primes.push_back(q.q);
  }
  return FactoredInt::from_primes(primes);
}

std::vector<u64> divisors_with_weight(const FactoredInt& L, unsigned w) {
  if (!L.is_squarefree()) throw PreconditionError("divisors_with_weight: L must be squarefree");
  const auto primes = L.primes();
  std::vector<u64> out;
  if (w > primes.size()) return out;
  std::vector<bool> pick(primes.size(), false);
  std::fill(pick.begin(), pick.begin() + w, true);
  do {
    u64 d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (pick[i]) d = mul_checked(d, primes[i]);
    }
    out.push_back(d);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> all_divisors(const FactoredInt& L) {
  std::vector<u64> out{1};
  for (const auto& f : L.factors()) {
    const std::size_t n = out.size();
    u64 pe = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pe = mul_checked(pe, f.prime);
      for (std::size_t i = 0; i < n; ++i) out.push_back(mul_checked(out[i], pe));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 most_common_residue(const std::vector<u64>& D, u64 q0) {
  if (q0 == 0) throw PreconditionError("most_common_residue: modulus must be positive");
  std::map<u64, u64> tally;
  for (u64 d : D) ++tally[d % q0];
  u64 best = 0, best_count = 0;
  for (const auto& [r, c] : tally) {
    if (c > best_count) {
      best = r;
      best_count = c;
    }
  }
  return best;
}

KVerdict k_admissible(u64 k, const FactoredInt& L, const ConstructionConfig& config, std::optional<u64> dstar) {
  const u64 l = L.to_u64();
  if (config.admissibility == Admissibility::CoprimeOnly) {
    if (k == 0 || std::gcd(k, l) != 1) return {false, "gcd(k, L) > 1"};
    return {true, ""};
  }
  if (k < 2) return {false, "k < 2"};
  if (k % 2 != 0) return {false, "k is odd"};
  const u64 half = k / 2;
  const FactoredInt hf = factorize(half);
  if (!hf.is_one() && hf.smallest_prime() <= config.floor) return {false, "k/2 has a prime factor at or below the floor"};
  if (hf.is_prime()) return {false, "k/2 is prime"};
  if (config.use_dstar) {
    if (!config.seed_residue || !dstar) return {false, "d* clause enabled without d* or a0 mod q0"};
    const Residue& a0 = *config.seed_residue;
    const u64 lhs = mulmod(*dstar % a0.modulus, k % a0.modulus, a0.modulus);
    if (lhs != (a0.value + a0.modulus - 1) % a0.modulus) return {false, "d* k differs from a0 - 1 mod q0"};
  }
  const FactoredInt kf = factorize(k);
  const u64 phi_k = to_u64(euler_phi(kf));
  for (const auto& f : factorize(phi_k).factors()) {
    if (f.prime >= config.R1 && f.prime <= config.R2) return {false, "phi(k) has a prime factor in [R1, R2]"};
  }
  const u64 lam_k = to_u64(carmichael_lambda(kf));
  if (two_adic_valuation(lam_k) >= config.T) return {false, "2^T divides lambda(k)"};
  const u64 g = std::gcd(phi_k, to_u64(euler_phi(L)));
  if (!is_power_of_two(g)) return {false, "gcd(phi(k), phi(L)) is not a power of 2"};
  return {true, ""};
}

namespace {

std::optional<PrimeFamily> family_for(u64 k, const FactoredInt& L, const std::vector<u64>& D,
                                      const ConstructionConfig& config, std::optional<u64> dstar) {
  if (!k_admissible(k, L, config, dstar).ok) return std::nullopt;
  const u64 l = L.to_u64();
  if (std::gcd(k, l) != 1) return std::nullopt;
  PrimeFamily fam;
  fam.k = k;
  fam.L = L;
  for (u64 d : D) {
    const u64 p = mul_checked(d, k) + 1;
    if (l % p == 0 || !is_prime(p)) continue;
    fam.members.push_back({d, p});
  }
  if (fam.members.size() < config.min_family) return std::nullopt;
  return fam;
}

}  // namespace

void find_k_step(const FactoredInt& L, const std::vector<u64>& D, const ConstructionConfig& config, FindKState& state,
                 u64 k_stop, unsigned threads) {
  if (D.empty()) throw PreconditionError("find_k: divisor list is empty");
  if (state.next_k > k_stop) return;
  std::optional<u64> dstar;
  if (config.use_dstar && config.seed_residue) dstar = most_common_residue(D, config.seed_residue->modulus);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const u64 first = state.next_k;
  const u64 span = k_stop - first + 1;
  threads = static_cast<unsigned>(std::min<u64>(threads, span));
  std::vector<std::vector<PrimeFamily>> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      const u64 lo = first + span * t / threads;
      const u64 hi = first + span * (t + 1) / threads;
      for (u64 k = lo; k < hi; ++k) {
        if (auto fam = family_for(k, L, D, config, dstar)) parts[t].push_back(std::move(*fam));
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& part : parts) {
    for (auto& fam : part) state.families.push_back(std::move(fam));
  }
  state.next_k = k_stop + 1;
}

std::vector<PrimeFamily> find_k(const FactoredInt& L, const std::vector<u64>& D, const ConstructionConfig& config,
                                unsigned threads) {
  FindKState state;
  find_k_step(L, D, config, state, config.k_limit, threads);
  auto out = std::move(state.families);
  std::stable_sort(out.begin(), out.end(), [](const PrimeFamily& a, const PrimeFamily& b) {
    return a.members.size() > b.members.size();
  });
  return out;
}

EquidistributionStat equidistribution_stat(const std::vector<u64>& D, const FactoredInt& modulus) {
  const u64 m = modulus.to_u64();
  if (m <= 1) throw PreconditionError("equidistribution_stat: modulus must exceed 1");
  EquidistributionStat out;
  out.modulus = m;
  std::map<u64, u64> tally;
  for (u64 d : D) ++tally[d % m];
  std::size_t unit_classes = 0;
  for (const auto& [r, c] : tally) {
    out.counts.emplace_back(r, c);
    if (std::gcd(r, m) == 1) {
      out.units_total += c;
      ++unit_classes;
    }
  }
  const u64 phi = to_u64(euler_phi(modulus));
  if (out.units_total == 0) return out;
  const double expected = static_cast<double>(out.units_total) / static_cast<double>(phi);
  double dev = unit_classes < phi ? 1.0 : 0.0;
  for (const auto& [r, c] : tally) {
    if (std::gcd(r, m) != 1) continue;
    dev = std::max(dev, std::abs(static_cast<double>(c) - expected) / expected);
  }
  out.max_relative_deviation = dev;
  return out;
}

u64 compute_w0(u64 l0) {
  u64 w0;
  if (l0 == 0) throw PreconditionError("compute_w0: l0 must be positive");
  if (l0 % 2 == 1) {
    w0 = (l0 + 1) / 2;
  } else if (l0 % 8 == 6) {
    w0 = (l0 + 2) / 4;
  } else if (l0 % 8 == 2) {
    w0 = (3 * l0 + 2) / 4;
  } else {
    throw PreconditionError("compute_w0: 4 divides l0 = " + std::to_string(l0));
  }
  if ((4 * w0) % l0 != 2 % l0 || (l0 / std::gcd(w0, l0)) % 2 == 0) {
    throw std::logic_error("compute_w0: derived w0 fails its congruences");
  }
  return w0;
}

ConstructionTarget unit_target(const PrimeFamily& family, const ConstructionConfig& config) {
  const u64 l = family.L.to_u64();
  ConstructionTarget t{Residue{1 % l, l}, std::nullopt, FactoredInt{}, 0, 1};
  if (config.l0 > 1) {
    t.omega_modulus = config.l0;
    t.omega_residue = (config.w0 != 0 ? config.w0 : compute_w0(config.l0)) % config.l0;
  }
  return t;
}

namespace {

bool verify_from_scratch(const BigInt& n, const FactoredInt& claimed) {
  if (claimed.value() != n) return false;
  if (fits_u64(n)) return is_carmichael(to_u64(n));
  return is_carmichael(claimed);
}

}  // namespace

std::vector<ConstructedNumber> construct_carmichael(const PrimeFamily& family, const ConstructionTarget& target,
                                                    std::size_t max_solutions, const SubsetSolveConfig& solver) {
  family.validate();
  if (family.members.size() < 3) throw PreconditionError("construct_carmichael: family needs at least three primes");
  const u64 l = family.L.to_u64();
  if (target.mod_L.modulus != l) throw PreconditionError("construct_carmichael: target modulus differs from L");

  const AbelianGroup gl = unit_group(family.L);
  std::optional<AbelianGroup> ge;
  if (target.extra && target.extra->modulus > 1) {
    if (std::gcd(target.extra->modulus, l) != 1) {
      throw PreconditionError("construct_carmichael: extra modulus must be coprime to L");
    }
    ge = unit_group(factorize(target.extra->modulus));
  }
  std::vector<u64> orders = gl.cyclic_orders();
  if (ge) orders.insert(orders.end(), ge->cyclic_orders().begin(), ge->cyclic_orders().end());
  const bool omega = target.omega_modulus > 1;
  if (omega) orders.push_back(target.omega_modulus);
  const AbelianGroup group(orders);

  auto embed = [&](u64 x_l, std::optional<u64> x_e, u64 count) {
    GroupVector v = gl.dlog(x_l);
    if (ge) {
      auto e = ge->dlog(*x_e);
      v.insert(v.end(), e.begin(), e.end());
    }
    if (omega) v.push_back(count % target.omega_modulus);
    return v;
  };
  std::vector<GroupVector> elements;
  for (const auto& m : family.members) {
    if (m.p % l == 0 || (ge && m.p % target.extra->modulus == 0)) {
      throw PreconditionError("construct_carmichael: family prime divides a modulus");
    }
    elements.push_back(embed(m.p % l, ge ? std::optional<u64>(m.p % target.extra->modulus) : std::nullopt, 1));
  }
  const GroupVector goal =
      embed(target.mod_L.value, ge ? std::optional<u64>(target.extra->value) : std::nullopt, target.omega_residue);

  const std::size_t co = target.cofactor.omega();
  SizeWindow window{co >= 3 ? 1 : 3 - co, family.members.size()};

  std::vector<ConstructedNumber> out;
  std::set<BigInt> seen;
  std::size_t rejected = 0;
  std::vector<std::set<std::size_t>> queue{{}};
  std::set<std::set<std::size_t>> tried;
  const std::size_t max_attempts = 4 * std::max<std::size_t>(max_solutions, 1);
  std::size_t attempts = 0;
  bool budget_hit = false;
  while (!queue.empty() && out.size() < max_solutions && attempts < max_attempts) {
    const auto banned = queue.front();
    queue.erase(queue.begin());
    if (!tried.insert(banned).second) continue;
    ++attempts;
    std::vector<std::size_t> map;
    std::vector<GroupVector> sub;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (banned.count(i)) continue;
      map.push_back(i);
      sub.push_back(elements[i]);
    }
    std::optional<SubsetSolution> sol;
    try {
      sol = subset_product_solve(group, sub, goal, window, solver);
    } catch (const ResourceLimitError&) {
      budget_hit = true;
      continue;
    }
    if (!sol) continue;
    std::vector<u64> chosen;
    std::vector<std::size_t> picked;
    for (std::size_t j : sol->indices) {
      picked.push_back(map[j]);
      chosen.push_back(family.members[map[j]].p);
    }
    for (std::size_t i : picked) {
      auto next = banned;
      next.insert(i);
      queue.push_back(std::move(next));
    }
    std::sort(chosen.begin(), chosen.end());
    FactoredInt pi = FactoredInt::from_primes(chosen);
    if (!target.cofactor.coprime_to(pi)) {
      ++rejected;
      continue;
    }
    FactoredInt n = target.cofactor * pi;
    if (seen.count(n.value())) continue;
    // Each p - 1 = d*k divides kL, so n = 1 (mod kL) is what Korselt needs.
    if (target.cofactor.is_one() && target.mod_L.value == 1 % l && !target.extra) {
      const BigInt kl = to_big(family.k) * to_big(l);
      if (BigInt(pi.value() % kl) != BigInt(1 % kl)) throw std::logic_error("construct_carmichael: product not 1 mod kL");
    }
    if (!verify_from_scratch(n.value(), n)) {
      ++rejected;
      continue;
    }
    seen.insert(n.value());
    out.push_back({n.value(), n, chosen, family.k, l, sol->method, sol->seed});
  }
  if (out.empty()) {
    std::string why = attempts == 0 ? "no attempt" : "no subset reaches the target";
    if (budget_hit) why = "subset search budget exhausted";
    if (rejected) why += ", " + std::to_string(rejected) + " candidates failed verification";
    throw NotFoundError("construct_carmichael: k = " + std::to_string(family.k) + ", L = " + std::to_string(l) + ": " +
                        why);
  }
  return out;
}

std::vector<DivisibleWitness> construct_divisible_by(const FactoredInt& m, const std::vector<CarmichaelRecord>& corpus,
                                                     const DivisibleSearchBudget& budget) {
  const BigInt g = gcd(m.value(), 2 * euler_phi(m));
  if (g != 1) {
    throw PreconditionError("construct_divisible_by: gcd(m, 2 phi(m)) = " + to_string(g) + " for m = " +
                            to_string(m.value()));
  }
  std::vector<DivisibleWitness> out;
  std::set<BigInt> seen;
  const u64 mv = m.to_u64();
  for (const auto& r : corpus) {
    if (out.size() >= budget.max_witnesses) break;
    if (r.n % mv != 0 || !is_carmichael(r.n)) continue;
    out.push_back({to_big(r.n), FactoredInt::from_primes(r.factors), "corpus"});
    seen.insert(to_big(r.n));
  }
  if (out.size() >= budget.max_witnesses) return out;

  // lambda(m) is coprime to m, so L stays coprime to m. Smoother bases give
  // larger families when m is small.
  for (u64 base : {u64{840}, u64{55'440}, u64{720'720}, u64{12'252'240}, u64{232'792'560}}) {
    if (out.size() >= budget.max_witnesses) break;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19}) {
      while (mv % p == 0 && base % p == 0) base /= p;
    }
    const u64 l = lcm_checked(base, to_u64(carmichael_lambda(m)));
    const FactoredInt lf = factorize(l);
    const auto D = all_divisors(lf);
    const Residue inv_l{inverse_mod(mv % l, l), l};
    for (u64 k = 1; k <= budget.k_limit && out.size() < budget.max_witnesses; k += 2) {
      if (std::gcd(k, l) != 1 || std::gcd(k, mv) != 1) continue;
      PrimeFamily fam{k, lf, {}};
      for (u64 d : D) {
        const u64 p = mul_checked(d, k) + 1;
        if (l % p == 0 || mv % p == 0 || !is_prime(p)) continue;
        fam.members.push_back({d, p});
      }
      if (fam.members.size() < std::max<std::size_t>(budget.min_family, 3)) continue;
      ConstructionTarget t{inv_l, std::nullopt, m, 0, 1};
      if (k > 1) t.extra = Residue{inverse_mod(mv % k, k), k};
      try {
        for (auto& c : construct_carmichael(fam, t, budget.max_witnesses - out.size(), budget.subset)) {
          if (seen.count(c.n) || mod_u64(c.n, mv) != 0) continue;
          seen.insert(c.n);
          out.push_back({c.n, c.factors, "construct"});
        }
      } catch (const NotFoundError&) {
      }
    }
  }
  return out;
}

ConstructionState run_construction(const ConstructionConfig& config_in, unsigned threads,
                                   const ConstructionState* resume) {
  ConstructionConfig config = config_in;
  config.validate();
  ConstructionState state;
  if (resume) {
    state = *resume;
    state.config.k_limit = std::max(state.config.k_limit, config.k_limit);
    config = state.config;
    config.validate();
  } else {
    state.config = config;
    if (config.L != 0) {
      state.L = factorize(config.L);
      state.D = config.all_divisors ? all_divisors(state.L) : divisors_with_weight(state.L, config.w);
    } else {
      state.Q = build_Q(config);
      if (state.Q.size() < 2) {
        state.notes.push_back("fewer than two qualified primes below y");
        return state;
      }
      std::tie(state.Q1, state.Q2) = split_Q(state.Q);
      auto side = state.Q1;
      std::sort(side.begin(), side.end(), [](const auto& a, const auto& b) { return a.q < b.q; });
      if (config.max_q != 0 && side.size() > config.max_q) side.resize(config.max_q);
      std::vector<u64> primes;
      for (const auto& q : side) primes.push_back(q.q);
      state.L = FactoredInt::from_primes(primes);
      state.D = divisors_with_weight(state.L, config.w);
    }
    if (state.D.empty()) {
      state.notes.push_back("no divisors of the requested weight");
      return state;
    }
    state.search.next_k = config.admissibility == Admissibility::Full ? 2 : 1;
  }
  find_k_step(state.L, state.D, config, state.search, config.k_limit, threads);

  std::vector<const PrimeFamily*> ranked;
  for (const auto& f : state.search.families) ranked.push_back(&f);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](auto* a, auto* b) { return a->members.size() > b->members.size(); });
  state.solutions.clear();
  std::size_t used = 0;
  for (const auto* fam : ranked) {
    if (used >= config.max_families || fam->members.size() < 3) break;
    ++used;
    try {
      auto found = construct_carmichael(*fam, unit_target(*fam, config), config.max_solutions, config.subset);
      state.solutions.insert(state.solutions.end(), found.begin(), found.end());
    } catch (const NotFoundError& e) {
      state.notes.push_back(e.what());
    }
  }
  return state;
}

// ---------------------------------------------------------------------------
// checkpoints
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json config_json(const ConstructionConfig& c) {
  json j{{"y", c.y},
         {"floor", c.floor},
         {"w", c.w},
         {"k_limit", c.k_limit},
         {"m0", c.m0},
         {"l0", c.l0},
         {"w0", c.w0},
         {"T", c.T},
         {"R1", c.R1},
         {"R2", c.R2},
         {"use_dstar", c.use_dstar},
         {"admissibility", c.admissibility == Admissibility::Full ? "full" : "coprime"},
         {"L", c.L},
         {"all_divisors", c.all_divisors},
         {"max_q", c.max_q},
         {"min_family", c.min_family},
         {"max_families", c.max_families},
         {"max_solutions", c.max_solutions},
         {"subset_seed", c.subset.seed}};
  if (c.seed_residue) j["seed_residue"] = {c.seed_residue->value, c.seed_residue->modulus};
  return j;
}

ConstructionConfig config_from(const json& j) {
  ConstructionConfig c;
  c.y = j.at("y");
  c.floor = j.at("floor");
  c.w = j.at("w");
  c.k_limit = j.at("k_limit");
  c.m0 = j.at("m0");
  c.l0 = j.at("l0");
  c.w0 = j.at("w0");
  c.T = j.at("T");
  c.R1 = j.at("R1");
  c.R2 = j.at("R2");
  c.use_dstar = j.at("use_dstar");
  c.admissibility = j.at("admissibility") == "full" ? Admissibility::Full : Admissibility::CoprimeOnly;
  c.L = j.at("L");
  c.all_divisors = j.at("all_divisors");
  c.max_q = j.at("max_q");
  c.min_family = j.at("min_family");
  c.max_families = j.at("max_families");
  c.max_solutions = j.at("max_solutions");
  c.subset.seed = j.at("subset_seed");
  if (j.contains("seed_residue")) c.seed_residue = Residue{j["seed_residue"][0], j["seed_residue"][1]};
  return c;
}

json qs_json(const std::vector<QualifiedPrime>& qs) {
  json a = json::array();
  for (const auto& q : qs) a.push_back(q.q);
  return a;
}

std::vector<QualifiedPrime> qs_from(const json& a, const ConstructionConfig& c) {
  std::vector<QualifiedPrime> out;
  for (u64 q : a.get<std::vector<u64>>()) {
    if (!is_prime(q)) throw CorruptFileError("checkpoint: " + std::to_string(q) + " is not prime");
    const bool qr = c.m0 <= 1 || jacobi(static_cast<i64>(c.m0 % q), q) == 1;
    out.push_back({q, factorize((q - 1) / 2), qr});
  }
  return out;
}

}  // namespace

std::string to_json(const ConstructionState& s) {
  json fams = json::array();
  for (const auto& f : s.search.families) {
    json members = json::array();
    for (const auto& m : f.members) members.push_back({m.d, m.p});
    fams.push_back({{"k", f.k}, {"L", f.L.to_u64()}, {"members", members}});
  }
  json sols = json::array();
  for (const auto& c : s.solutions) {
    sols.push_back({{"n", to_string(c.n)},
                    {"factors", c.factors.to_string()},
                    {"chosen", c.chosen},
                    {"k", c.k},
                    {"L", c.L},
                    {"method", c.method},
                    {"seed", c.seed}});
  }
  json j{{"format", "carmichael-construction v1"},
         {"config", config_json(s.config)},
         {"Q", qs_json(s.Q)},
         {"Q1", qs_json(s.Q1)},
         {"Q2", qs_json(s.Q2)},
         {"L", to_string(s.L.value())},
         {"D", s.D},
         {"next_k", s.search.next_k},
         {"families", fams},
         {"solutions", sols},
         {"notes", s.notes}};
  return j.dump(2);
}

ConstructionState construction_state_from_json(const std::string& text) {
  ConstructionState s;
  try {
    const json j = json::parse(text);
    if (j.at("format") != "carmichael-construction v1") throw CorruptFileError("checkpoint: unknown format");
    s.config = config_from(j.at("config"));
    s.Q = qs_from(j.at("Q"), s.config);
    s.Q1 = qs_from(j.at("Q1"), s.config);
    s.Q2 = qs_from(j.at("Q2"), s.config);
    s.L = factorize(parse_big(j.at("L").get<std::string>()));
    s.D = j.at("D").get<std::vector<u64>>();
    s.search.next_k = j.at("next_k");
    for (const auto& f : j.at("families")) {
      PrimeFamily fam{f.at("k"), factorize(f.at("L").get<u64>()), {}};
      for (const auto& m : f.at("members")) fam.members.push_back({m[0], m[1]});
      fam.validate();
      s.search.families.push_back(std::move(fam));
    }
    for (const auto& c : j.at("solutions")) {
      ConstructedNumber n;
      n.n = parse_big(c.at("n").get<std::string>());
      n.chosen = c.at("chosen").get<std::vector<u64>>();
      n.k = c.at("k");
      n.L = c.at("L");
      n.method = c.at("method");
      n.seed = c.at("seed");
      n.factors = factorize(n.n);
      if (!is_carmichael(n.factors)) throw CorruptFileError("checkpoint: stored solution is not Carmichael");
      s.solutions.push_back(std::move(n));
    }
    s.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw CorruptFileError(std::string("checkpoint: ") + e.what());
  }
  return s;
}

}  // namespace carmichael
