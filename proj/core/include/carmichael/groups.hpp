#pragma once

// Finite abelian groups as direct sums of cyclic groups, with the unit group
// (Z/nZ)^x realized through explicit generators.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "carmichael/numtheory.hpp"

namespace carmichael {

/// Exponent vector; entry i is reduced modulo the i-th cyclic order.
using GroupVector = std::vector<u64>;

/// One cyclic factor of (Z/nZ)^x living on a prime-power component.
struct UnitComponent {
  u64 prime = 0;
  unsigned exponent = 0;
  u64 prime_power = 0;
  u64 local_generator = 0;  // generator modulo prime_power
  u64 generator = 0;        // lifted: local_generator mod p^e, 1 mod n/p^e
  u64 order = 0;
};

class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup() = default;

  /// Direct sum Z/d1 + ... + Z/dk. Orders must be at least 1.
  explicit AbelianGroup(std::vector<u64> cyclic_orders);

  /// (Z/nZ)^x with primitive roots on odd prime powers and {-1, 5} on 2^e.
  /// Trivial factors are omitted.
  static AbelianGroup units(const FactoredInt& n);

  const std::vector<u64>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }

  /// Group order; throws OverflowError beyond 64 bits.
  u64 order() const;
  u64 exponent() const;

  /// Invariant factors d1 | d2 | ... | dk, all greater than 1.
  std::vector<u64> invariant_factors() const;

  /// Appends a cyclic factor; any unit-group realization is dropped.
  AbelianGroup with_cyclic(u64 order) const;

  bool is_unit_group() const { return modulus_ != 0; }
  u64 modulus() const { return modulus_; }
  const std::vector<UnitComponent>& basis() const { return basis_; }

  GroupVector identity() const { return GroupVector(orders_.size(), 0); }
  GroupVector add(const GroupVector& a, const GroupVector& b) const;
  GroupVector negate(const GroupVector& a) const;
  GroupVector scale(const GroupVector& a, u64 k) const;
  bool is_identity(const GroupVector& a) const;
  u64 element_order(const GroupVector& a) const;

  /// Throws PreconditionError unless `a` has the right length and reduced entries.
  void check(const GroupVector& a) const;

  /// Mixed-radix index in [0, order()).
  u64 encode(const GroupVector& a) const;
  GroupVector decode(u64 index) const;

  /// Unit groups only: the residue with exponent vector `a`.
  u64 evaluate(const GroupVector& a) const;

  /// Unit groups only: exponent vector of the unit x, by baby-step
  /// giant-step on each cyclic factor. Throws PreconditionError for non-units.
  GroupVector dlog(u64 x) const;

 private:
  std::vector<u64> orders_;
  u64 modulus_ = 0;
  std::vector<UnitComponent> basis_;
};

inline AbelianGroup unit_group(const FactoredInt& n) { return AbelianGroup::units(n); }

/// Unit-group discrete logarithm of a residue whose modulus matches the group.
GroupVector dlog(const AbelianGroup& group, const Residue& x);

/// 1 + sum (d_i - 1) over invariant factors; always a lower bound for D(G).
u64 davenport_lower_bound(const AbelianGroup& group);

struct DavenportConfig {
  /// Search nodes visited before giving up.
  u64 node_budget = 4'000'000;
  /// Largest group order searched.
  u64 max_order = 1024;
  /// Return 1 + sum (d_i - 1) without searching for cyclic groups, p-groups
  /// and groups of rank two, where that value is known to be exact (Olson;
  /// van Emde Boas and Kruyswijk).
  bool use_known_formulas = true;
};

struct DavenportResult {
  u64 value = 0;
  u64 nodes = 0;
  std::string method;  // "formula" or "search"
};

/// Exact Davenport constant: the least l such that every length-l sequence
/// has a nonempty zero-sum subsequence. Found by an exhaustive search over
/// subset-sum sets (memoized up to componentwise unit scaling) for a
/// zero-sum-free sequence longer than the lower bound. Throws
/// ResourceLimitError when the budget is exhausted.
DavenportResult davenport_search(const AbelianGroup& group, const DavenportConfig& config = {});
inline u64 davenport_exact(const AbelianGroup& group, const DavenportConfig& config = {}) {
  return davenport_search(group, config).value;
}

/// lambda(n)^2.
u64 davenport_bound(const FactoredInt& n);

enum class CountMethod { Auto, Exhaustive, DynamicProgramming };

/// Largest sequence length counted by subset enumeration.
inline constexpr std::size_t kExhaustiveCountMax = 24;

/// Number of subsequences (the empty one included) summing to the identity.
/// Auto enumerates subsets up to kExhaustiveCountMax terms and otherwise runs
/// a dynamic program over group elements.
BigInt count_identity_subsequences(const AbelianGroup& group, const std::vector<GroupVector>& sequence,
                                   CountMethod method = CountMethod::Auto);

/// Subsequences of length at most max_len summing to `target`. The whole
/// sequence must sum to `target` (PreconditionError otherwise).
BigInt count_target_subsequences(const AbelianGroup& group, const std::vector<GroupVector>& sequence,
                                 const GroupVector& target, std::size_t max_len,
                                 CountMethod method = CountMethod::Auto);

struct SizeWindow {
  std::size_t min = 1;
  std::size_t max = static_cast<std::size_t>(-1);
};

struct SubsetSolveConfig {
  u64 seed = 0x5eed;
  std::size_t exhaustive_below = 20;
  std::size_t mitm_max = 40;
  /// Random sub-families tried when there are more than mitm_max elements.
  u64 restarts = 64;
  /// Size of each random sub-family.
  std::size_t restart_size = 36;
};

struct SubsetSolution {
  std::vector<std::size_t> indices;  // ascending
  std::string method;                // "exhaustive", "mitm" or "random-mitm"
  u64 seed = 0;
};

/// Indices of a subset of `elements` summing to `target` with size inside the
/// window. Exhaustive and meet-in-the-middle modes are complete: nullopt means
/// no such subset exists. Above mitm_max elements the search samples random
/// sub-families and throws ResourceLimitError when the restarts run out.
/// Results are re-summed before they are returned.
std::optional<SubsetSolution> subset_product_solve(const AbelianGroup& group, const std::vector<GroupVector>& elements,
                                                   const GroupVector& target, SizeWindow window = {},
                                                   const SubsetSolveConfig& config = {});

}  // namespace carmichael
