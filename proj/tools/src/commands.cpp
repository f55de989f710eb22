#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "carmichael/compat.hpp"
#include "carmichael/construct.hpp"
#include "carmichael/cyclotomic.hpp"
#include "carmichael/enumerate.hpp"
#include "carmichael/error.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/phiratio.hpp"
#include "carmichael/progression.hpp"

namespace carmichael::cli {

namespace {

void add_corpus_keys(CLI::App* app, Settings& s) {
  s.add(app, "--limit", "limit", "10000000", "corpus bound");
  s.add(app, "--cache", "cache", "", "corpus cache file, read when it covers the bound and written otherwise");
}

std::vector<CarmichaelRecord> load_corpus(Context& ctx) {
  const u64 limit = ctx.settings->u("limit");
  const std::string cache = ctx.settings->str("cache");
  if (!cache.empty() && std::filesystem::exists(cache)) {
    auto c = load_cache(cache);
    if (c.limit >= limit) {
      std::erase_if(c.records, [&](const CarmichaelRecord& r) { return r.n > limit; });
      ctx.note("corpus: " + std::to_string(c.records.size()) + " records from " + cache);
      return c.records;
    }
  }
  auto records = enumerate_products(limit, 0, ctx.threads);
  if (!cache.empty()) {
    save_cache(cache, records, limit);
    ctx.note("corpus: wrote " + cache);
  }
  return records;
}

std::string record_line(const CarmichaelRecord& r) {
  std::string s = std::to_string(r.n) + ":";
  for (std::size_t i = 0; i < r.factors.size(); ++i) s += (i ? "," : "") + std::to_string(r.factors[i]);
  return s;
}

// ------------------------------------------------------------------ test

int run_test(Context& ctx) {
  const BigInt n = parse_big(ctx.settings->str("n"));
  if (n < 1) throw PreconditionError("n must be positive");
  FactorConfig fc;
  fc.rho_budget = ctx.settings->u("rho_budget");
  const FactoredInt f = factorize(n, fc);
  std::string reason;
  if (f.is_one()) {
    reason = "1 is not composite";
  } else if (f.is_prime()) {
    reason = "prime";
  } else if (!f.is_squarefree()) {
    reason = "not squarefree: " + f.to_string();
  } else {
    const BigInt n1 = n - 1;
    for (u64 p : f.primes()) {
      if (mod_u64(n1, p - 1) != 0) {
        reason = std::to_string(p) + " - 1 does not divide n - 1: " + f.to_string();
        break;
      }
    }
  }
  const bool yes = reason.empty();
  if (yes && !is_carmichael(f)) throw std::logic_error("Korselt certificate disagrees with is_carmichael");
  if (ctx.settings->flag("json")) {
    nlohmann::json j{{"n", to_string(n)}, {"carmichael", yes}, {"factors", f.primes()}};
    if (!yes) j["reason"] = reason;
    ctx.output = j.dump(2) + "\n";
  } else {
    ctx.output = "carmichael: " + std::string(yes ? "yes (" + f.to_string() + ")" : "no (" + reason + ")") + "\n";
  }
  return yes ? kSuccess : kNegative;
}

// ------------------------------------------------------------- enumerate

int run_enumerate(Context& ctx) {
  const u64 limit = ctx.settings->u("limit");
  const std::string method = ctx.settings->str("method");
  if (method != "scan" && method != "products" && method != "both") {
    throw PreconditionError("--method must be scan, products or both");
  }
  const std::string cache = ctx.settings->str("cache");
  std::vector<CarmichaelRecord> records;
  bool from_cache = false;
  if (!cache.empty() && std::filesystem::exists(cache) && method != "both") {
    auto c = load_cache(cache);
    if (c.limit >= limit) {
      std::erase_if(c.records, [&](const CarmichaelRecord& r) { return r.n > limit; });
      records = std::move(c.records);
      from_cache = true;
      ctx.note("read " + cache);
    }
  }
  if (!from_cache) {
    if (method == "scan") {
      records = enumerate_scan(limit, ctx.threads);
    } else if (method == "products") {
      records = enumerate_products(limit, 0, ctx.threads);
    } else {
      records = enumerate_scan(limit, ctx.threads);
      const auto other = enumerate_products(limit, 0, ctx.threads);
      if (records != other) {
        std::vector<u64> a, b, only_scan, only_products;
        for (const auto& r : records) a.push_back(r.n);
        for (const auto& r : other) b.push_back(r.n);
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_scan));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_products));
        ctx.note("mismatch: " + std::to_string(only_scan.size()) + " only from scan, " +
                 std::to_string(only_products.size()) + " only from products");
        return kNegative;
      }
      ctx.note("scan and products agree on " + std::to_string(records.size()) + " numbers");
    }
    if (!cache.empty()) {
      save_cache(cache, records, limit);
      ctx.note("wrote " + cache);
    }
  }
  for (const auto& r : records) ctx.output += record_line(r) + "\n";
  return kSuccess;
}

// -------------------------------------------------------------- classify

int run_classify(Context& ctx) {
  const bool single = ctx.settings->has("r") || ctx.settings->has("m");
  const bool table = ctx.settings->has("table");
  if (single == table) throw PreconditionError("give either --r and --m, or --table");
  if (single) {
    if (!ctx.settings->has("r") || !ctx.settings->has("m")) throw PreconditionError("--r and --m go together");
    const u64 m = ctx.settings->u("m");
    if (m == 0) throw PreconditionError("--m must be positive");
    const CompatVerdict v = classify(ctx.settings->i("r"), m);
    ctx.output = v.compatible() ? "compatible\n" : "incompatible " + std::string(to_string(v.reason)) + "\n";
    return v.compatible() ? kSuccess : kNegative;
  }
  const u64 m_max = ctx.settings->u("table");
  if (m_max == 0) throw PreconditionError("--table must be positive");
  ctx.output = coverage_csv(coverage_report(load_corpus(ctx), m_max));
  return kSuccess;
}

// ------------------------------------------------------------- construct

ConstructionConfig construction_config(const Settings& s) {
  ConstructionConfig c;
  c.y = s.u("y");
  c.floor = s.u("floor");
  c.w = static_cast<unsigned>(s.u("w"));
  c.k_limit = s.u("k_limit");
  c.m0 = s.u("m0");
  c.l0 = s.u("l0");
  c.w0 = s.u("w0");
  c.T = static_cast<unsigned>(s.u("T"));
  c.R1 = s.u("R1");
  c.R2 = s.u("R2");
  c.use_dstar = s.flag("use_dstar");
  if (s.has("a0") != s.has("q0")) throw PreconditionError("a0 and q0 go together");
  if (s.has("a0")) c.seed_residue = Residue{s.u("a0"), s.u("q0")};
  const std::string adm = s.str("admissibility");
  if (adm == "full") {
    c.admissibility = Admissibility::Full;
  } else if (adm == "coprime") {
    c.admissibility = Admissibility::CoprimeOnly;
  } else {
    throw PreconditionError("admissibility must be full or coprime");
  }
  c.L = s.u("L");
  c.all_divisors = s.flag("all_divisors");
  c.max_q = s.u("max_q");
  c.min_family = s.u("min_family");
  c.max_families = s.u("max_families");
  c.max_solutions = s.u("max_solutions");
  c.subset.seed = s.u("seed");
  c.subset.exhaustive_below = s.u("exhaustive_below");
  c.subset.mitm_max = s.u("mitm_max");
  c.subset.restarts = s.u("restarts");
  c.subset.restart_size = s.u("restart_size");
  return c;
}

int run_construct(Context& ctx) {
  const Settings& s = *ctx.settings;
  ConstructionConfig config = construction_config(s);
  ctx.manifest->add_seed("subset", config.subset.seed);
  if (s.has("divisible_by")) {
    DivisibleSearchBudget budget;
    budget.max_witnesses = config.max_solutions;
    budget.k_limit = std::min<u64>(config.k_limit, 200);
    budget.subset = config.subset;
    const auto witnesses = construct_divisible_by(factorize(s.u("divisible_by")), {}, budget);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : witnesses) {
      arr.push_back({{"n", to_string(w.n)}, {"factors", w.factors.primes()}, {"method", w.method}});
    }
    ctx.output = nlohmann::json{{"divisible_by", s.u("divisible_by")}, {"witnesses", arr}}.dump(2) + "\n";
    return witnesses.empty() ? kNegative : kSuccess;
  }
  std::optional<ConstructionState> resume;
  if (s.has("resume")) {
    std::ifstream in(s.str("resume"));
    if (!in) throw PreconditionError("cannot read " + s.str("resume"));
    std::stringstream buf;
    buf << in.rdbuf();
    resume = construction_state_from_json(buf.str());
  }
  const ConstructionState state = run_construction(config, ctx.threads, resume ? &*resume : nullptr);
  for (const auto& n : state.notes) ctx.note(n);
  ctx.note(std::to_string(state.search.families.size()) + " families, " + std::to_string(state.solutions.size()) +
           " verified Carmichael numbers");
  ctx.output = to_json(state) + "\n";
  return state.solutions.empty() ? kNegative : kSuccess;
}

// ----------------------------------------------------------- progression

int run_progression(Context& ctx) {
  const Settings& s = *ctx.settings;
  if (!s.has("r") || !s.has("m")) throw PreconditionError("--r and --m are required");
  const u64 m = s.u("m");
  if (m == 0) throw PreconditionError("--m must be positive");
  ProgressionConfig pc;
  pc.floor = s.u("floor");
  pc.T = static_cast<unsigned>(s.u("T"));
  pc.prime_ceiling = s.u("prime_ceiling");
  pc.reduction_ceiling = s.u("reduction_ceiling");
  pc.max_witnesses = s.u("max_witnesses");
  pc.try_construct = s.flag("construct");
  pc.construct_k_limit = s.u("construct_k_limit");
  const i64 r = s.i("r");
  if (!classify(r, m).compatible()) {
    ctx.output = "incompatible " + std::string(to_string(classify(r, m).reason)) + "\n";
    return kNegative;
  }
  const auto corpus = load_corpus(ctx);
  const EndToEndResult res = end_to_end(r, m, corpus, pc);
  for (const auto& n : res.notes) ctx.note(n);
  if (s.str("format") == "json") {
    nlohmann::json j;
    j["trace"] = res.trace ? nlohmann::json::parse(to_json(*res.trace)) : nlohmann::json(nullptr);
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : res.witnesses) {
      w.push_back({{"n", to_string(x.n)}, {"factors", x.factors.primes()}, {"method", x.method}});
    }
    j["witnesses"] = w;
    ctx.output = j.dump(2) + "\n";
  } else if (s.str("format") == "text") {
    if (res.trace) ctx.output = transcript(*res.trace);
    for (const auto& x : res.witnesses) {
      ctx.output += "witness      " + to_string(x.n) + " = " + x.factors.to_string() + " [" + x.method + "]\n";
    }
  } else {
    throw PreconditionError("--format must be text or json");
  }
  return res.witnesses.empty() ? kNegative : kSuccess;
}

// -------------------------------------------------------------------- nu

int run_nu(Context& ctx) {
  const u64 Q = ctx.settings->u("Q");
  if (Q == 0) throw PreconditionError("--Q must be positive");
  if (ctx.settings->has("zeta")) {
    const std::string s = ctx.settings->str("zeta");
    const auto slash = s.find('/');
    const i64 num = std::stoll(s.substr(0, slash));
    const u64 den = slash == std::string::npos ? 1 : parse_u64(s.substr(slash + 1));
    const ZetaPartial z = zeta_nu_partial(num, den, Q);
    nlohmann::json j{{"s", s},        {"Q", z.Q},         {"bounds", z.bounds}, {"values", z.exact_digits},
                     {"terms", z.terms}, {"error_bound", z.error_bound}};
    ctx.output = j.dump(2) + "\n";
    return kSuccess;
  }
  const MobiusReport rep = verify_mobius_identity(Q, true);
  ctx.note(std::to_string(rep.checked) + " ideals checked, " + std::to_string(rep.failures.size()) + " failures");
  ctx.output = mobius_csv(rep);
  return rep.ok() ? kSuccess : kNegative;
}

// ----------------------------------------------------------------- erdos

int run_erdos(Context& ctx) {
  const u64 count = ctx.settings->u("count");
  if (count == 0) throw PreconditionError("--count must be positive");
  const ErdosSequence seq = erdos_sequence(count);
  if (const auto problem = verify_erdos_sequence(seq); !problem.empty()) {
    throw std::logic_error("erdos sequence failed re-verification: " + problem);
  }
  const std::string format = ctx.settings->str("format");
  if (format == "list") {
    for (std::size_t i = 0; i < seq.terms.size(); ++i) ctx.output += (i ? "," : "") + std::to_string(seq.terms[i]);
    ctx.output += "\n";
  } else if (format == "csv") {
    ctx.output = erdos_csv(seq);
  } else if (format == "phi-min") {
    ctx.output = min_phi_csv(min_phi_ratio(load_corpus(ctx)));
  } else {
    throw PreconditionError("--format must be list, csv or phi-min");
  }
  return kSuccess;
}

}  // namespace

void register_test(CLI::App& root, Command& cmd) {
  auto* app = root.add_subcommand("test", "Factor n and apply Korselt's criterion");
  cmd.settings.add(app, "n", "n", "", "number to test")->required();
  cmd.settings.add(app, "--rho-budget", "rho_budget", "10000000", "Pollard rho iterations");
  cmd.settings.add(app, "--json", "json", "false", "JSON certificate instead of a verdict line");
  cmd.name = "test";
  cmd.app = app;
  cmd.run = run_test;
}

void register_enumerate(CLI::App& root, Command& cmd) {
  auto* app = root.add_subcommand("enumerate", "List Carmichael numbers up to a bound");
  cmd.settings.add(app, "--limit", "limit", "10000", "inclusive bound");
  cmd.settings.add(app, "--method", "method", "products", "scan, products or both (both fails on any mismatch)");
  cmd.settings.add(app, "--cache", "cache", "", "cache file to read or update");
  cmd.name = "enumerate";
  cmd.app = app;
  cmd.run = run_enumerate;
}

void register_classify(CLI::App& root, Command& cmd) {
  auto* app = root.add_subcommand("classify", "Classify r mod m, or tabulate every class up to a modulus");
  cmd.settings.add(app, "--r", "r", "", "residue");
  cmd.settings.add(app, "--m", "m", "", "modulus");
  cmd.settings.add(app, "--table", "table", "", "largest modulus of the coverage table");
  add_corpus_keys(app, cmd.settings);
  cmd.name = "classify";
  cmd.app = app;
  cmd.run = run_classify;
}

void register_construct(CLI::App& root, Command& cmd) {
  auto* app = root.add_subcommand("construct", "Build Carmichael numbers from prime families");
  const ConstructionConfig d;
  const SubsetSolveConfig sd;
  auto& s = cmd.settings;
  s.add(app, "--y", "y", std::to_string(d.y), "ceiling for the primes q");
  s.add(app, "--floor", "floor", std::to_string(d.floor), "least prime factor allowed in (q - 1)/2");
  s.add(app, "--w", "w", std::to_string(d.w), "prime factors per divisor d");
  s.add(app, "--k-limit", "k_limit", std::to_string(d.k_limit), "largest k scanned");
  s.add(app, "--m0", "m0", std::to_string(d.m0), "quadratic residue filter (1 disables)");
  s.add(app, "--l0", "l0", std::to_string(d.l0), "omega modulus");
  s.add(app, "--w0", "w0", std::to_string(d.w0), "omega residue (0 derives it from l0)");
  s.add(app, "--T", "T", std::to_string(d.T), "2^T must not divide lambda(k)");
  s.add(app, "--R1", "R1", std::to_string(d.R1), "phi(k) avoids primes in [R1, R2]");
  s.add(app, "--R2", "R2", std::to_string(d.R2), "see R1");
  s.add(app, "--use-dstar", "use_dstar", "false", "enable the d* clause (needs a0 and q0)");
  s.add(app, "--a0", "a0", "", "seed residue");
  s.add(app, "--q0", "q0", "", "seed modulus");
  s.add(app, "--admissibility", "admissibility", "full", "full or coprime");
  s.add(app, "--L", "L", "0", "explicit modulus L (0 builds L from the primes q)");
  s.add(app, "--all-divisors", "all_divisors", "false", "with --L, use every divisor");
  s.add(app, "--max-q", "max_q", std::to_string(d.max_q), "primes q used for L (0: all)");
  s.add(app, "--min-family", "min_family", std::to_string(d.min_family), "least family size kept");
  s.add(app, "--max-families", "max_families", std::to_string(d.max_families), "families handed to the solver");
  s.add(app, "--max-solutions", "max_solutions", std::to_string(d.max_solutions), "solutions per family");
  s.add(app, "--seed", "seed", std::to_string(sd.seed), "subset solver seed");
  s.add(app, "--exhaustive-below", "exhaustive_below", std::to_string(sd.exhaustive_below), "exhaustive subset search below this size");
  s.add(app, "--mitm-max", "mitm_max", std::to_string(sd.mitm_max), "largest family solved by meet in the middle");
  s.add(app, "--restarts", "restarts", std::to_string(sd.restarts), "random sub-families above mitm-max");
  s.add(app, "--restart-size", "restart_size", std::to_string(sd.restart_size), "size of each random sub-family");
  s.add(app, "--resume", "resume", "", "state JSON from an earlier run");
  s.add(app, "--divisible-by", "divisible_by", "", "search for Carmichael numbers divisible by this m instead");
  cmd.name = "construct";
  cmd.app = app;
  cmd.run = run_construct;
}

void register_progression(CLI::App& root, Command& cmd) {
  auto* app = root.add_subcommand("progression", "Derive seed parameters for r mod m and find witnesses");
  const ProgressionConfig d;
  auto& s = cmd.settings;
  s.add(app, "--r", "r", "", "residue");
  s.add(app, "--m", "m", "", "modulus");
  s.add(app, "--floor", "floor", std::to_string(d.floor), "auxiliary primes: (p - 1)/s has no prime factor up to this");
  s.add(app, "--T", "T", std::to_string(d.T), "halves of P's primes avoid prime factors = 1 mod 2^T");
  s.add(app, "--prime-ceiling", "prime_ceiling", std::to_string(d.prime_ceiling), "candidate primes for P");
  s.add(app, "--reduction-ceiling", "reduction_ceiling", std::to_string(d.reduction_ceiling), "auxiliary primes for reductions");
  s.add(app, "--max-witnesses", "max_witnesses", std::to_string(d.max_witnesses), "witnesses per path");
  s.add(app, "--construct", "construct", d.try_construct ? "true" : "false", "also try constructed seeds");
  s.add(app, "--construct-k-limit", "construct_k_limit", std::to_string(d.construct_k_limit), "values of k tried");
  s.add(app, "--format", "format", "text", "text or json");
  add_corpus_keys(app, cmd.settings);
  cmd.name = "progression";
  cmd.app = app;
  cmd.run = run_progression;
}

void register_nu(CLI::App& root, Command& cmd) {
  auto* app = root.add_subcommand("nu", "Check the nu divisor-sum identity, or sum |nu| N^-s");
  cmd.settings.add(app, "--Q", "Q", "10000", "norm bound");
  cmd.settings.add(app, "--zeta", "zeta", "", "exponent s as a/b; prints partial sums instead");
  cmd.name = "nu";
  cmd.app = app;
  cmd.run = run_nu;
}

void register_erdos(CLI::App& root, Command& cmd) {
  auto* app = root.add_subcommand("erdos", "The prime sequence driving phi(n)/n down");
  cmd.settings.add(app, "--count", "count", "25", "terms");
  cmd.settings.add(app, "--format", "format", "list", "list, csv, or phi-min (running minimum over the corpus)");
  add_corpus_keys(app, cmd.settings);
  cmd.name = "erdos";
  cmd.app = app;
  cmd.run = run_erdos;
}

}  // namespace carmichael::cli
