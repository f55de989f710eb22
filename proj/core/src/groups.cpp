#include "carmichael/groups.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include "carmichael/error.hpp"

namespace carmichael {

// ---------------------------------------------------------------------------
// AbelianGroup
// ---------------------------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<u64> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (u64 d : orders_) {
    if (d == 0) throw PreconditionError("AbelianGroup: cyclic orders must be positive");
  }
}

namespace {

// Baby-step giant-step for x = g^k (mod m) with k in [0, order).
u64 bsgs(u64 g, u64 x, u64 m, u64 order) {
  if (order == 1) return 0;
  const u64 steps = static_cast<u64>(std::ceil(std::sqrt(static_cast<long double>(order))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(steps * 2);
  u64 cur = 1;
  for (u64 j = 0; j < steps; ++j) {
    baby.emplace(cur, j);
    cur = mulmod(cur, g, m);
  }
  const u64 giant = inverse_mod(powmod(g, steps, m), m);
  u64 y = x % m;
  for (u64 i = 0; i <= steps; ++i) {
    auto it = baby.find(y);
    if (it != baby.end()) {
      const u64 k = i * steps + it->second;
      if (k < order) return k;
    }
    y = mulmod(y, giant, m);
  }
  throw PreconditionError("dlog: element is outside the cyclic subgroup");
}

}  // namespace

AbelianGroup AbelianGroup::units(const FactoredInt& n) {
  AbelianGroup out;
  out.modulus_ = n.to_u64();
  for (const auto& f : n.factors()) {
    u64 pe = 1;
    for (unsigned i = 0; i < f.exponent; ++i) pe = mul_checked(pe, f.prime);
    const u64 rest = out.modulus_ / pe;
    auto lift = [&](u64 local) { return crt(Residue{local % pe, pe}, Residue{1 % rest, rest}).value; };
    auto push = [&](u64 local, u64 order) {
      out.basis_.push_back({f.prime, f.exponent, pe, local, lift(local), order});
      out.orders_.push_back(order);
    };
    if (f.prime == 2) {
      if (f.exponent >= 2) push(pe - 1, 2);
      if (f.exponent >= 3) push(5, pe / 4);
    } else {
      push(primitive_root_prime_power(f.prime, f.exponent), pe / f.prime * (f.prime - 1));
    }
  }
  return out;
}

u64 AbelianGroup::order() const {
  u64 o = 1;
  for (u64 d : orders_) o = mul_checked(o, d);
  return o;
}

u64 AbelianGroup::exponent() const {
  u64 e = 1;
  for (u64 d : orders_) e = lcm_checked(e, d);
  return e;
}

std::vector<u64> AbelianGroup::invariant_factors() const {
  std::map<u64, std::vector<u64>> by_prime;
  for (u64 d : orders_) {
    if (d == 1) continue;
    for (const auto& f : factorize(d).factors()) {
      u64 pe = 1;
      for (unsigned i = 0; i < f.exponent; ++i) pe *= f.prime;
      by_prime[f.prime].push_back(pe);
    }
  }
  std::size_t k = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    k = std::max(k, v.size());
  }
  std::vector<u64> inv(k, 1);
  for (const auto& [p, v] : by_prime) {
    for (std::size_t i = 0; i < v.size(); ++i) inv[k - 1 - i] *= v[i];
  }
  return inv;
}

AbelianGroup AbelianGroup::with_cyclic(u64 order) const {
  std::vector<u64> o = orders_;
  o.push_back(order);
  return AbelianGroup(std::move(o));
}

void AbelianGroup::check(const GroupVector& a) const {
  if (a.size() != orders_.size()) throw PreconditionError("group vector has the wrong length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= orders_[i]) throw PreconditionError("group vector entry is not reduced");
  }
}

GroupVector AbelianGroup::add(const GroupVector& a, const GroupVector& b) const {
  GroupVector out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<u64>((static_cast<u128>(a[i]) + b[i]) % orders_[i]);
  }
  return out;
}

GroupVector AbelianGroup::negate(const GroupVector& a) const {
  GroupVector out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (orders_[i] - a[i] % orders_[i]) % orders_[i];
  return out;
}

GroupVector AbelianGroup::scale(const GroupVector& a, u64 k) const {
  GroupVector out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mulmod(a[i], k % orders_[i], orders_[i]);
  return out;
}

bool AbelianGroup::is_identity(const GroupVector& a) const {
  return std::all_of(a.begin(), a.end(), [](u64 v) { return v == 0; });
}

u64 AbelianGroup::element_order(const GroupVector& a) const {
  u64 o = 1;
  for (std::size_t i = 0; i < a.size(); ++i) o = lcm_checked(o, orders_[i] / std::gcd(a[i], orders_[i]));
  return o;
}

u64 AbelianGroup::encode(const GroupVector& a) const {
  u64 code = 0, radix = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    code += a[i] * radix;
    radix = mul_checked(radix, orders_[i]);
  }
  return code;
}

GroupVector AbelianGroup::decode(u64 index) const {
  GroupVector out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out[i] = index % orders_[i];
    index /= orders_[i];
  }
  return out;
}

u64 AbelianGroup::evaluate(const GroupVector& a) const {
  if (!is_unit_group()) throw PreconditionError("evaluate: not a unit group");
  check(a);
  u64 x = 1 % modulus_;
  for (std::size_t i = 0; i < basis_.size(); ++i) x = mulmod(x, powmod(basis_[i].generator, a[i], modulus_), modulus_);
  return x;
}

GroupVector AbelianGroup::dlog(u64 x) const {
  if (!is_unit_group()) throw PreconditionError("dlog: not a unit group");
  x %= modulus_;
  if (std::gcd(x, modulus_) != 1) {
    throw PreconditionError("dlog: " + std::to_string(x) + " is not a unit modulo " + std::to_string(modulus_));
  }
  GroupVector out(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& c = basis_[i];
    u64 local = x % c.prime_power;
    if (c.prime == 2 && c.local_generator == c.prime_power - 1) {
      // The -1 factor: its exponent is read off modulo 4.
      out[i] = local % 4 == 3 ? 1 : 0;
      continue;
    }
    if (c.prime == 2) {
      if (local % 4 == 3) local = c.prime_power - local;  // strip the -1 part
    }
    out[i] = bsgs(c.local_generator, local, c.prime_power, c.order);
  }
  return out;
}

GroupVector dlog(const AbelianGroup& group, const Residue& x) {
  if (x.modulus != group.modulus()) throw PreconditionError("dlog: residue modulus does not match the group");
  return group.dlog(x.value);
}

// ---------------------------------------------------------------------------
// Davenport constant
// ---------------------------------------------------------------------------

u64 davenport_lower_bound(const AbelianGroup& group) {
  u64 d = 1;
  for (u64 f : group.invariant_factors()) d += f - 1;
  return d;
}

u64 davenport_bound(const FactoredInt& n) {
  const u64 l = to_u64(carmichael_lambda(n));
  return mul_checked(l, l);
}

namespace {

class ZeroSumFreeSearch {
 public:
  ZeroSumFreeSearch(const std::vector<u64>& inv, u64 budget) : group_(inv), budget_(budget) {
    size_ = group_.order();
    words_ = (size_ + 63) / 64;
    add_.assign(size_ * size_, 0);
    for (u64 a = 0; a < size_; ++a) {
      const auto va = group_.decode(a);
      for (u64 b = 0; b < size_; ++b) add_[a * size_ + b] = static_cast<std::uint32_t>(group_.encode(group_.add(va, group_.decode(b))));
    }
    // Componentwise unit scalings are automorphisms; canonicalize under them.
    std::vector<std::vector<u64>> units;
    for (u64 d : inv) {
      std::vector<u64> u;
      for (u64 k = 1; k <= d; ++k) {
        if (std::gcd(k, d) == 1) u.push_back(k % d);
      }
      units.push_back(u);
    }
    std::vector<u64> pick(inv.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == inv.size()) {
        std::vector<std::uint32_t> perm(size_);
        for (u64 x = 0; x < size_; ++x) {
          auto v = group_.decode(x);
          for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * pick[j] % inv[j];
          perm[x] = static_cast<std::uint32_t>(group_.encode(v));
        }
        autos_.push_back(std::move(perm));
        return;
      }
      for (u64 u : units[i]) {
        pick[i] = u;
        rec(i + 1);
      }
    };
    rec(0);
  }

  using Bits = std::vector<u64>;

  Bits empty() const { return Bits(words_, 0); }

  // Adds g to the sequence; false when a zero sum appears.
  bool extend(const Bits& s, u64 g, Bits& out) const {
    out = s;
    for (u64 w = 0; w < words_; ++w) {
      u64 bits = s[w];
      while (bits) {
        const u64 x = w * 64 + static_cast<u64>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const u64 y = add_[x * size_ + g];
        if (y == 0) return false;
        out[y / 64] |= u64{1} << (y % 64);
      }
    }
    out[g / 64] |= u64{1} << (g % 64);
    return true;
  }

  bool exists(const Bits& s, u64 need) {
    if (need == 0) return true;
    if (++nodes_ > budget_) {
      throw ResourceLimitError("davenport_exact: node budget " + std::to_string(budget_) + " exhausted for group of order " +
                               std::to_string(size_));
    }
    Bits t;
    for (u64 g = 1; g < size_; ++g) {
      if (!extend(s, g, t)) continue;
      if (size_ - 1 - popcount(t) < need - 1) continue;
      Bits c = canonical(t);
      std::string key(reinterpret_cast<const char*>(c.data()), c.size() * sizeof(u64));
      auto it = failed_.find(key);
      if (it != failed_.end() && it->second <= need - 1) continue;
      if (exists(c, need - 1)) return true;
      auto& slot = failed_[key];
      if (slot == 0 || slot > need - 1) slot = need - 1;
    }
    return false;
  }

  u64 size() const { return size_; }
  u64 nodes() const { return nodes_; }
  const AbelianGroup& group() const { return group_; }

 private:
  static u64 popcount(const Bits& b) {
    u64 c = 0;
    for (u64 w : b) c += static_cast<u64>(__builtin_popcountll(w));
    return c;
  }

  static bool less(const Bits& a, const Bits& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

  Bits canonical(const Bits& s) const {
    Bits best = s, img(words_);
    for (const auto& perm : autos_) {
      std::fill(img.begin(), img.end(), 0);
      for (u64 w = 0; w < words_; ++w) {
        u64 bits = s[w];
        while (bits) {
          const u64 x = w * 64 + static_cast<u64>(__builtin_ctzll(bits));
          bits &= bits - 1;
          const u64 y = perm[x];
          img[y / 64] |= u64{1} << (y % 64);
        }
      }
      if (less(img, best)) best = img;
    }
    return best;
  }

  AbelianGroup group_;
  u64 budget_;
  u64 size_ = 1;
  u64 words_ = 1;
  u64 nodes_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::vector<std::uint32_t>> autos_;
  std::unordered_map<std::string, u64> failed_;
};

}  // namespace

DavenportResult davenport_search(const AbelianGroup& group, const DavenportConfig& config) {
  const auto inv = group.invariant_factors();
  const u64 lower = davenport_lower_bound(group);
  if (inv.empty()) return {1, 0, "formula"};
  if (config.use_known_formulas) {
    const auto primes = factorize(inv.back()).primes();
    // Every invariant factor divides the last one, so one prime there means a p-group.
    if (inv.size() <= 2 || primes.size() == 1) return {lower, 0, "formula"};
  }
  if (group.order() > config.max_order) {
    throw ResourceLimitError("davenport_exact: group order " + std::to_string(group.order()) + " exceeds " +
                             std::to_string(config.max_order));
  }
  ZeroSumFreeSearch search(inv, config.node_budget);
  // The basis sequence e_i repeated d_i - 1 times is zero-sum free; confirm it.
  auto s = search.empty();
  ZeroSumFreeSearch::Bits t;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    GroupVector e(inv.size(), 0);
    e[i] = 1;
    const u64 code = search.group().encode(e);
    for (u64 j = 0; j + 1 < inv[i]; ++j) {
      if (!search.extend(s, code, t)) throw std::logic_error("davenport_exact: basis sequence has a zero sum");
      s = t;
    }
  }
  u64 length = lower;
  while (search.exists(search.empty(), length)) ++length;
  return {length, search.nodes(), "search"};
}

// ---------------------------------------------------------------------------
// subsequence counts
// ---------------------------------------------------------------------------

namespace {

// Translation tables x -> x + e on encoded elements, one per sequence term.
std::vector<std::vector<u64>> translations(const AbelianGroup& group, const std::vector<GroupVector>& seq) {
  const u64 n = group.order();
  if (n > (u64{1} << 22)) throw ResourceLimitError("subsequence count: group order too large for the table method");
  std::vector<std::vector<u64>> out;
  for (const auto& e : seq) {
    std::vector<u64> t(n);
    for (u64 x = 0; x < n; ++x) t[x] = group.encode(group.add(group.decode(x), e));
    out.push_back(std::move(t));
  }
  return out;
}

BigInt count_exhaustive(const AbelianGroup& group, const std::vector<GroupVector>& seq, const GroupVector& target,
                        std::size_t max_len) {
  const std::size_t n = seq.size();
  if (n > 40) throw ResourceLimitError("subsequence count: sequence too long for enumeration");
  std::vector<GroupVector> neg;
  for (const auto& e : seq) neg.push_back(group.negate(e));
  GroupVector sum = group.identity();
  u64 count = (group.is_identity(target) ? 1 : 0);
  std::size_t size = 0;
  // Gray code: step i flips the lowest set bit of i.
  u64 mask = 0;
  for (u64 i = 1; i < (u64{1} << n); ++i) {
    const unsigned bit = static_cast<unsigned>(__builtin_ctzll(i));
    mask ^= u64{1} << bit;
    if (mask >> bit & 1) {
      sum = group.add(sum, seq[bit]);
      ++size;
    } else {
      sum = group.add(sum, neg[bit]);
      --size;
    }
    if (size <= max_len && sum == target) ++count;
  }
  return to_big(count);
}

BigInt count_dp(const AbelianGroup& group, const std::vector<GroupVector>& seq, const GroupVector& target,
                std::size_t max_len) {
  const u64 n = group.order();
  const auto tr = translations(group, seq);
  const std::size_t lens = std::min(max_len, seq.size()) + 1;
  // cnt[len][x]: subsequences of the processed prefix with that length and sum.
  std::vector<std::vector<BigInt>> cnt(lens, std::vector<BigInt>(n, 0));
  cnt[0][0] = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t len = std::min(i + 1, lens - 1); len >= 1; --len) {
      auto& dst = cnt[len];
      const auto& src = cnt[len - 1];
      for (u64 x = 0; x < n; ++x) {
        if (src[x] != 0) dst[tr[i][x]] += src[x];
      }
    }
  }
  const u64 code = group.encode(target);
  BigInt total = 0;
  for (std::size_t len = 0; len < lens; ++len) total += cnt[len][code];
  return total;
}

BigInt count_with(const AbelianGroup& group, const std::vector<GroupVector>& seq, const GroupVector& target,
                  std::size_t max_len, CountMethod method) {
  for (const auto& e : seq) group.check(e);
  group.check(target);
  if (method == CountMethod::Auto) {
    method = seq.size() <= kExhaustiveCountMax ? CountMethod::Exhaustive : CountMethod::DynamicProgramming;
  }
  return method == CountMethod::Exhaustive ? count_exhaustive(group, seq, target, max_len)
                                           : count_dp(group, seq, target, max_len);
}

}  // namespace

BigInt count_identity_subsequences(const AbelianGroup& group, const std::vector<GroupVector>& sequence,
                                   CountMethod method) {
  return count_with(group, sequence, group.identity(), sequence.size(), method);
}

BigInt count_target_subsequences(const AbelianGroup& group, const std::vector<GroupVector>& sequence,
                                 const GroupVector& target, std::size_t max_len, CountMethod method) {
  group.check(target);
  GroupVector total = group.identity();
  for (const auto& e : sequence) {
    group.check(e);
    total = group.add(total, e);
  }
  if (total != target) throw PreconditionError("count_target_subsequences: sequence does not sum to the target");
  return count_with(group, sequence, target, max_len, method);
}

// ---------------------------------------------------------------------------
// subset products
// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  std::vector<std::size_t> indices;

  bool better_than(const Candidate& o) const {
    if (indices.size() != o.indices.size()) return indices.size() < o.indices.size();
    return indices < o.indices;
  }
};

std::vector<std::size_t> mask_indices(u64 mask, const std::vector<std::size_t>& pool) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask >> i & 1) out.push_back(pool[i]);
  }
  return out;
}

// Enumerates every subset of `pool`, calling visit(mask, size, sum).
template <typename Visit>
void for_each_subset(const AbelianGroup& group, const std::vector<GroupVector>& elements,
                     const std::vector<std::size_t>& pool, Visit&& visit) {
  std::vector<GroupVector> neg;
  for (std::size_t i : pool) neg.push_back(group.negate(elements[i]));
  GroupVector sum = group.identity();
  std::size_t size = 0;
  u64 mask = 0;
  visit(mask, size, sum);
  for (u64 i = 1; i < (u64{1} << pool.size()); ++i) {
    const unsigned bit = static_cast<unsigned>(__builtin_ctzll(i));
    mask ^= u64{1} << bit;
    if (mask >> bit & 1) {
      sum = group.add(sum, elements[pool[bit]]);
      ++size;
    } else {
      sum = group.add(sum, neg[bit]);
      --size;
    }
    visit(mask, size, sum);
  }
}

std::optional<Candidate> solve_exhaustive(const AbelianGroup& group, const std::vector<GroupVector>& elements,
                                          const std::vector<std::size_t>& pool, const GroupVector& target,
                                          SizeWindow window) {
  std::optional<Candidate> best;
  for_each_subset(group, elements, pool, [&](u64 mask, std::size_t size, const GroupVector& sum) {
    if (size < window.min || size > window.max || sum != target) return;
    Candidate c{mask_indices(mask, pool)};
    if (!best || c.better_than(*best)) best = std::move(c);
  });
  return best;
}

struct PairHash {
  std::size_t operator()(const std::pair<u64, std::size_t>& k) const {
    return std::hash<u64>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

std::optional<Candidate> solve_mitm(const AbelianGroup& group, const std::vector<GroupVector>& elements,
                                    std::vector<std::size_t> pool, const GroupVector& target, SizeWindow window,
                                    std::mt19937_64& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::size_t> left, right;
  for (std::size_t i = 0; i < pool.size(); ++i) (i % 2 == 0 ? left : right).push_back(pool[i]);
  // Left half: (encoded sum, size) -> first mask reaching it.
  std::unordered_map<std::pair<u64, std::size_t>, u64, PairHash> table;
  table.reserve(std::size_t{1} << left.size());
  for_each_subset(group, elements, left, [&](u64 mask, std::size_t size, const GroupVector& sum) {
    table.emplace(std::make_pair(group.encode(sum), size), mask);
  });
  std::optional<Candidate> best;
  for_each_subset(group, elements, right, [&](u64 mask, std::size_t size, const GroupVector& sum) {
    if (size > window.max) return;
    const u64 need = group.encode(group.add(target, group.negate(sum)));
    const std::size_t lo = window.min > size ? window.min - size : 0;
    const std::size_t hi = std::min(left.size(), window.max - size);
    for (std::size_t k = lo; k <= hi; ++k) {
      auto it = table.find({need, k});
      if (it == table.end()) continue;
      Candidate c{mask_indices(it->second, left)};
      auto r = mask_indices(mask, right);
      c.indices.insert(c.indices.end(), r.begin(), r.end());
      std::sort(c.indices.begin(), c.indices.end());
      if (!best || c.better_than(*best)) best = std::move(c);
      break;
    }
  });
  return best;
}

}  // namespace

std::optional<SubsetSolution> subset_product_solve(const AbelianGroup& group, const std::vector<GroupVector>& elements,
                                                   const GroupVector& target, SizeWindow window,
                                                   const SubsetSolveConfig& config) {
  group.check(target);
  for (const auto& e : elements) group.check(e);
  if (window.min > window.max) return std::nullopt;
  std::vector<std::size_t> all(elements.size());
  std::iota(all.begin(), all.end(), 0);
  std::mt19937_64 rng(config.seed);

  std::optional<Candidate> found;
  std::string method;
  if (elements.size() < config.exhaustive_below) {
    found = solve_exhaustive(group, elements, all, target, window);
    method = "exhaustive";
  } else if (elements.size() <= config.mitm_max) {
    found = solve_mitm(group, elements, all, target, window, rng);
    method = "mitm";
  } else {
    method = "random-mitm";
    const std::size_t take = std::min(config.restart_size, config.mitm_max);
    for (u64 attempt = 0; attempt < config.restarts && !found; ++attempt) {
      std::vector<std::size_t> pool = all;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(take);
      std::sort(pool.begin(), pool.end());
      found = solve_mitm(group, elements, pool, target, window, rng);
    }
    if (!found) {
      throw ResourceLimitError("subset_product_solve: no solution in " + std::to_string(config.restarts) +
                               " random sub-families of " + std::to_string(take) + " out of " +
                               std::to_string(elements.size()) + " elements (seed " + std::to_string(config.seed) +
                               ")");
    }
  }
  if (!found) return std::nullopt;

  GroupVector check = group.identity();
  for (std::size_t i : found->indices) check = group.add(check, elements[i]);
  if (check != target || found->indices.size() < window.min || found->indices.size() > window.max) {
    throw std::logic_error("subset_product_solve: candidate failed re-verification");
  }
  return SubsetSolution{std::move(found->indices), method, config.seed};
}

}  // namespace carmichael
