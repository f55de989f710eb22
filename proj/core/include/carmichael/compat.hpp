#pragma once

// Classification of residue classes r (mod m) by whether they can contain
// Carmichael numbers, and corpus-driven checks of that classification.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carmichael/enumerate.hpp"
#include "carmichael/numtheory.hpp"

namespace carmichael {

enum class IncompatReason {
  None,
  GcdCondition,    // gcd(g, 2*phi(g)) > 1
  OrderCondition,  // h does not divide r - 1
  Mod12Condition,  // 36 | m, r = 3 (mod 12), r/g = 5 or 7 (mod 12)
};

std::string_view to_string(IncompatReason reason);

struct CompatVerdict {
  Residue r;
  u64 g = 1;  // gcd(r, m), with gcd(0, m) = m
  u64 h = 1;  // gcd(lambda(g), m)
  IncompatReason reason = IncompatReason::None;

  u64 m() const { return r.modulus; }
  bool compatible() const { return reason == IncompatReason::None; }
};

/// Canonicalizes r into [0, m). When several conditions hold the reported
/// reason is the first of Gcd, Order, Mod12.
CompatVerdict classify(i64 r, u64 m);
CompatVerdict classify(const Residue& r);

struct NecessityCounterexample {
  u64 n = 0;
  u64 m = 0;
  CompatVerdict verdict;
};

struct NecessityReport {
  std::size_t records_checked = 0;
  u64 m_max = 0;
  std::vector<NecessityCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Classifies n mod m for every record and every 1 <= m <= m_max.
NecessityReport validate_necessity(const std::vector<CarmichaelRecord>& records, u64 m_max, unsigned threads = 1);

struct CoverageEntry {
  CompatVerdict verdict;
  std::optional<u64> first_witness;  // least corpus member in the class
};

/// Every class r (mod m) for 1 <= m <= m_max, with its least witness from
/// `records` (which must be ascending). Incompatible classes are listed with
/// no witness.
std::vector<CoverageEntry> coverage_report(const std::vector<CarmichaelRecord>& records, u64 m_max);

/// Same table restricted to a single modulus.
std::vector<CoverageEntry> coverage_for_modulus(const std::vector<CarmichaelRecord>& records, u64 m);

/// CSV with header "r,m,g,h,verdict,reason,first_witness".
std::string coverage_csv(const std::vector<CoverageEntry>& entries);

}  // namespace carmichael
