#include "carmichael/phiratio.hpp"

#include <sstream>

#include "carmichael/error.hpp"

namespace carmichael {

ErdosSequence erdos_sequence(std::size_t count) {
  if (count < 1) throw PreconditionError("erdos_sequence: count must be at least 1");
  ErdosSequence seq;
  mpq_class ratio = 1;
  std::vector<u64> primes;
  for (u64 q = 3; seq.terms.size() < count; q = next_prime(q)) {
    bool ok = true;
    for (u64 t : seq.terms) ok = ok && (q - 1) % t != 0;
    if (!ok) continue;
    seq.terms.push_back(q);
    ratio *= mpq_class(to_big(q - 1), to_big(q));
    ratio.canonicalize();
    seq.prefix_ratios.push_back(ratio);
    seq.prefix_products.push_back(FactoredInt::from_primes(seq.terms));
  }
  return seq;
}

std::string verify_erdos_sequence(const ErdosSequence& seq) {
  if (seq.terms.empty() || seq.terms[0] != 3) return "first term is not 3";
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    const u64 q = seq.terms[i];
    if (!is_prime(q)) return std::to_string(q) + " is not prime";
    for (std::size_t j = 0; j < i; ++j) {
      if ((q - 1) % seq.terms[j] == 0) return std::to_string(seq.terms[j]) + " divides " + std::to_string(q) + " - 1";
    }
    if (i > 0) {
      for (u64 p = next_prime(seq.terms[i - 1]); p < q; p = next_prime(p)) {
        bool blocked = false;
        for (std::size_t j = 0; j < i; ++j) blocked = blocked || (p - 1) % seq.terms[j] == 0;
        if (!blocked) return "skipped prime " + std::to_string(p) + " qualifies before " + std::to_string(q);
      }
      if (!(seq.prefix_ratios[i] < seq.prefix_ratios[i - 1])) return "ratio does not decrease at term " + std::to_string(i + 1);
    }
    mpq_class direct(euler_phi(seq.prefix_products[i]), seq.prefix_products[i].value());
    direct.canonicalize();
    if (direct != seq.prefix_ratios[i]) return "prefix ratio disagrees with phi(Q)/Q at term " + std::to_string(i + 1);
  }
  return "";
}

namespace {

bool less_ratio(u64 an, u64 ad, u64 bn, u64 bd) {
  return static_cast<u128>(an) * bd < static_cast<u128>(bn) * ad;
}

}  // namespace

std::vector<PhiRatioMinimum> min_phi_ratio(const std::vector<CarmichaelRecord>& corpus) {
  if (corpus.empty()) throw PreconditionError("min_phi_ratio: corpus is empty");
  u64 top = corpus.back().n;
  std::vector<PhiRatioMinimum> out;
  PhiRatioMinimum cur;
  std::size_t i = 0;
  for (u64 bound = 1000;; bound *= 10) {
    for (; i < corpus.size() && corpus[i].n <= bound; ++i) {
      const auto& r = corpus[i];
      if (cur.n == 0 || less_ratio(r.phi_num, r.phi_den, cur.phi_num, cur.phi_den)) {
        cur.n = r.n;
        cur.phi_num = r.phi_num;
        cur.phi_den = r.phi_den;
      }
    }
    cur.bound = bound;
    out.push_back(cur);
    if (bound >= top || bound > ~u64{0} / 10) break;
  }
  return out;
}

std::vector<u64> density_probe(const std::vector<CarmichaelRecord>& corpus, unsigned bins) {
  if (bins < 1) throw PreconditionError("density_probe: bins must be at least 1");
  std::vector<u64> counts(bins, 0);
  for (const auto& r : corpus) {
    // floor(bins * num / den), exact.
    const u64 idx = static_cast<u64>(static_cast<u128>(bins) * r.phi_num / r.phi_den);
    ++counts[std::min<u64>(idx, bins - 1)];
  }
  return counts;
}

std::string erdos_csv(const ErdosSequence& seq) {
  std::ostringstream o;
  o << "index,q,Q,phi_ratio,phi_ratio_decimal\n";
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    o << i + 1 << ',' << seq.terms[i] << ',' << seq.prefix_products[i].value() << ',' << seq.prefix_ratios[i].get_str()
      << ',' << seq.prefix_ratios[i].get_d() << '\n';
  }
  return o.str();
}

std::string min_phi_csv(const std::vector<PhiRatioMinimum>& minima) {
  std::ostringstream o;
  o << "bound,n,phi_ratio,phi_ratio_decimal\n";
  for (const auto& m : minima) {
    o << m.bound << ',' << m.n << ',' << m.phi_num << '/' << m.phi_den << ','
      << (m.n == 0 ? 0.0 : static_cast<double>(m.phi_num) / static_cast<double>(m.phi_den)) << '\n';
  }
  return o.str();
}

std::string histogram_csv(const std::vector<u64>& counts) {
  std::ostringstream o;
  o << "bin_low,bin_high,count\n";
  const double w = 1.0 / static_cast<double>(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) o << i * w << ',' << (i + 1) * w << ',' << counts[i] << '\n';
  return o.str();
}

}  // namespace carmichael
