#include "carmichael/compat.hpp"

#include <numeric>
#include <sstream>
#include <thread>

#include "carmichael/error.hpp"

namespace carmichael {

std::string_view to_string(IncompatReason reason) {
  switch (reason) {
    case IncompatReason::None: return "none";
    case IncompatReason::GcdCondition: return "gcd";
    case IncompatReason::OrderCondition: return "order";
    case IncompatReason::Mod12Condition: return "mod12";
  }
  return "unknown";
}

CompatVerdict classify(const Residue& res) {
  const u64 m = res.modulus;
  if (m == 0) throw PreconditionError("classify: modulus must be positive");
  const u64 r = res.value % m;
  CompatVerdict v;
  v.r = Residue{r, m};
  v.g = std::gcd(r, m);
  const FactoredInt gf = factorize(v.g);
  const u64 phi_g = to_u64(euler_phi(gf));
  const u64 lambda_g = to_u64(carmichael_lambda(gf));
  v.h = std::gcd(lambda_g, m);
  // r - 1 modulo h; h | m so any representative gives the same answer.
  const u64 r_minus_1 = (r % v.h + v.h - 1 % v.h) % v.h;
  if (std::gcd(v.g, mul_checked(2, phi_g)) > 1) {
    v.reason = IncompatReason::GcdCondition;
  } else if (r_minus_1 != 0) {
    v.reason = IncompatReason::OrderCondition;
  } else if (m % 36 == 0 && r % 12 == 3 && ((r / v.g) % 12 == 5 || (r / v.g) % 12 == 7)) {
    v.reason = IncompatReason::Mod12Condition;
  }
  return v;
}

CompatVerdict classify(i64 r, u64 m) {
  if (m == 0) throw PreconditionError("classify: modulus must be positive");
  return classify(Residue::of(r, m));
}

NecessityReport validate_necessity(const std::vector<CarmichaelRecord>& records, u64 m_max, unsigned threads) {
  NecessityReport report;
  report.records_checked = records.size();
  report.m_max = m_max;
  const unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  std::vector<std::vector<NecessityCounterexample>> parts(workers);
  auto work = [&](unsigned id) {
    for (u64 m = 1 + id; m <= m_max; m += workers) {
      // Classes repeat across records; classify each residue once.
      std::vector<std::optional<CompatVerdict>> memo(m);
      for (const auto& rec : records) {
        const u64 r = rec.n % m;
        if (!memo[r]) memo[r] = classify(Residue{r, m});
        if (!memo[r]->compatible()) parts[id].push_back({rec.n, m, *memo[r]});
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work, i);
  work(0);
  for (auto& t : pool) t.join();
  for (auto& p : parts) report.counterexamples.insert(report.counterexamples.end(), p.begin(), p.end());
  return report;
}

std::vector<CoverageEntry> coverage_for_modulus(const std::vector<CarmichaelRecord>& records, u64 m) {
  std::vector<CoverageEntry> out;
  out.reserve(m);
  for (u64 r = 0; r < m; ++r) out.push_back({classify(Residue{r, m}), std::nullopt});
  std::size_t open = 0;
  for (const auto& e : out) open += e.verdict.compatible();
  for (const auto& rec : records) {
    if (open == 0) break;
    auto& e = out[rec.n % m];
    if (e.verdict.compatible() && !e.first_witness) {
      e.first_witness = rec.n;
      --open;
    }
  }
  return out;
}

std::vector<CoverageEntry> coverage_report(const std::vector<CarmichaelRecord>& records, u64 m_max) {
  std::vector<CoverageEntry> out;
  for (u64 m = 1; m <= m_max; ++m) {
    auto part = coverage_for_modulus(records, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string coverage_csv(const std::vector<CoverageEntry>& entries) {
  std::ostringstream os;
  os << "r,m,g,h,verdict,reason,first_witness\n";
  for (const auto& e : entries) {
    const auto& v = e.verdict;
    os << v.r.value << ',' << v.m() << ',' << v.g << ',' << v.h << ','
       << (v.compatible() ? "compatible" : "incompatible") << ',' << to_string(v.reason) << ',';
    if (e.first_witness) {
      os << *e.first_witness;
    } else if (v.compatible()) {
      os << "none";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace carmichael
