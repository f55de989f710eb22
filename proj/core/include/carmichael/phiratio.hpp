#pragma once

// phi(n)/n for Carmichael numbers and the prime sequence that drives it down.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "carmichael/enumerate.hpp"
#include "carmichael/numtheory.hpp"

namespace carmichael {

/// q_1 = 3; q_i is the least prime above q_{i-1} with q_i - 1 divisible by no earlier term.
struct ErdosSequence {
  std::vector<u64> terms;
  std::vector<FactoredInt> prefix_products;
  std::vector<mpq_class> prefix_ratios;  // phi(Q)/Q, exact
};

ErdosSequence erdos_sequence(std::size_t count);

/// Re-checks the rule, minimality against every skipped prime, and strict
/// decrease of the ratios. Returns the first problem, empty when sound.
std::string verify_erdos_sequence(const ErdosSequence& seq);

struct PhiRatioMinimum {
  u64 bound = 0;  // records n <= bound
  u64 n = 0;      // 0 when no record lies below the bound
  u64 phi_num = 0;
  u64 phi_den = 1;
};

/// Running minimum of phi(n)/n over records below each power of ten from
/// 10^3 up to the first power covering the corpus.
std::vector<PhiRatioMinimum> min_phi_ratio(const std::vector<CarmichaelRecord>& corpus);

/// Counts of phi(n)/n in [i/bins, (i+1)/bins).
std::vector<u64> density_probe(const std::vector<CarmichaelRecord>& corpus, unsigned bins);

std::string erdos_csv(const ErdosSequence& seq);
std::string min_phi_csv(const std::vector<PhiRatioMinimum>& minima);
std::string histogram_csv(const std::vector<u64>& counts);

}  // namespace carmichael
