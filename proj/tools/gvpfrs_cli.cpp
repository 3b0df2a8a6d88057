// gvpfrs: approximations, relation checks, the law suite and timings from the
// command line. Data goes to stdout as JSON, diagnostics to stderr.
//
// Exit codes: 0 success, 1 validation/parse/registry error, 2 premise or
// refusal error, 3 law failures (or an oracle mismatch in bench).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gvpfrs/connectives.hpp"
#include "gvpfrs/engine.hpp"
#include "gvpfrs/errors.hpp"
#include "gvpfrs/fuzzy.hpp"
#include "gvpfrs/laws.hpp"
#include "gvpfrs/problem.hpp"
#include "gvpfrs/random.hpp"

using json = nlohmann::json;
using namespace gvpfrs;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kPremise = 2;
constexpr int kFailures = 3;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("GVPFRS_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw ValidationError(std::string("GVPFRS_SEED must be a non-negative integer, got '") + env + "'");
    }
  }
  return flag;
}

// approximate -------------------------------------------------------------------

struct ApproximateArgs {
  std::string input;
  std::string side = "both";
  bool oracle = false;
  double tolerance = 0.0;
};

int cmd_approximate(const ApproximateArgs& args) {
  const Problem p = load_problem(args.input);
  p.require_approximation_inputs();
  const Side side = side_from_string(args.side);
  const double tol = args.tolerance > 0.0 ? args.tolerance : p.options.tolerance;
  const Model model = p.model();
  const double beta = *p.beta;

  auto solve = [&](const FuzzySet& a) {
    ApproximationResult res;
    if (side == Side::lower) res = lower_approx(p.relation, model.overlap, a, beta);
    else if (side == Side::upper) res = upper_approx(p.relation, model.grouping, model.negation, a, beta);
    else res = approximate(p.relation, model, a, beta);
    json out = result_to_json(res, p.universe, side);
    if (args.oracle) {
      const ApproximationResult ref = bruteforce_approximate(p.relation, model, a, beta, p.options.oracle_cap);
      const double d = max_discrepancy(res, ref, side);
      out["max_discrepancy"] = d;
      if (d > tol) {
        std::cerr << "selection and brute force differ by " << d << " (tolerance " << tol << ")\n";
        return std::make_pair(out, false);
      }
    }
    return std::make_pair(out, true);
  };

  bool ok = true;
  json out;
  if (p.sets.size() == 1 && p.sets.begin()->first == "A") {
    auto [j, good] = solve(p.sets.begin()->second);
    out = std::move(j);
    ok = good;
  } else {
    out = json::object();
    for (const auto& [name, a] : p.sets) {
      auto [j, good] = solve(a);
      out[name] = std::move(j);
      ok = ok && good;
    }
  }
  emit(out);
  return ok ? kOk : kFailures;
}

// check-relation ------------------------------------------------------------------

int cmd_check_relation(const std::string& input, const std::string& overlap_name) {
  const Problem p = load_problem(input);
  Connective o = [&] {
    if (!overlap_name.empty()) return connective_from_json(json::parse("{\"name\":" + json(overlap_name).dump() + "}"),
                                                           ConnectiveKind::overlap);
    if (p.overlap) return *p.overlap;
    throw ValidationError("no overlap: pass --overlap or set connectives.overlap");
  }();
  const RelationReport rep = check_relation(p.relation, o);
  emit(relation_report_to_json(rep, p.universe, o.name()));
  return kOk;
}

// laws ------------------------------------------------------------------------------

struct LawsArgs {
  std::string laws = "all";
  int trials = 200;
  std::uint64_t seed = 42;
  std::size_t max_universe = 8;
  std::string config;
  double tolerance = 1e-9;
  bool list = false;
};

int cmd_laws(const LawsArgs& args) {
  if (args.list) {
    json out = json::array();
    for (const auto& info : law_catalogue())
      out.push_back({{"id", info.id}, {"statement", info.statement}, {"premises", info.premises}});
    emit(out);
    return kOk;
  }
  LawRunOptions opt;
  if (args.laws != "all") {
    std::stringstream ss(args.laws);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) opt.ids.push_back(id);
    for (const auto& id : opt.ids) find_law(id);
  }
  opt.trials = args.trials;
  opt.seed = effective_seed(args.seed);
  opt.max_universe = args.max_universe;
  opt.tolerance = args.tolerance;
  if (!args.config.empty()) opt.pool = law_pool_from_json(read_json_file(args.config));

  const auto reports = run_laws(opt);
  json out = json::array();
  int failed = 0, inconclusive = 0;
  for (const auto& r : reports) {
    out.push_back(r.to_json());
    if (r.status == LawStatus::fail) ++failed;
    if (r.status == LawStatus::inconclusive) ++inconclusive;
  }
  emit(out);
  std::cerr << reports.size() << " laws: " << (reports.size() - failed - inconclusive) << " pass, " << failed
            << " fail, " << inconclusive << " inconclusive\n";
  return failed > 0 ? kFailures : kOk;
}

// bench ------------------------------------------------------------------------------

struct BenchArgs {
  std::vector<long long> sizes{64, 256, 1024};
  double beta = 0.5;
  int reps = 3;
  std::uint64_t seed = 42;
  long long oracle_up_to = 0;
  std::string format = "json";
  std::string execution = "parallel";
};

int cmd_bench(const BenchArgs& args) {
  if (args.sizes.empty()) throw ValidationError("--sizes needs at least one size");
  for (long long n : args.sizes)
    if (n < 2) throw ValidationError("--sizes entries must be at least 2, got " + std::to_string(n));
  if (!(args.beta >= 0.0 && args.beta <= 1.0)) throw ValidationError("--beta must lie in [0,1]");
  if (args.reps < 1) throw ValidationError("--reps must be at least 1");
  if (args.oracle_up_to < 0) throw ValidationError("--include-oracle-up-to must be non-negative");
  if (args.oracle_up_to > static_cast<long long>(max_oracle_cap))
    throw RefusalError("brute-force enumeration refused: --include-oracle-up-to " + std::to_string(args.oracle_up_to) +
                       " exceeds the hard cap of " + std::to_string(max_oracle_cap));
  const Execution exec = args.execution == "serial" ? Execution::serial : Execution::parallel;
  const std::uint64_t seed = effective_seed(args.seed);
  const Model model{ResidualPair(product()), ResidualPair(probabilistic_sum()), standard_negation()};

  struct Record {
    std::size_t n;
    Method method;
    double seconds;
    double discrepancy;
  };
  std::vector<Record> records;
  bool ok = true;

  for (long long sz : args.sizes) {
    const auto n = static_cast<std::size_t>(sz);
    SampleRng rng(seed, stable_hash("bench"), n);
    std::vector<double> m(n * n), v(n);
    for (double& x : m) x = rng.uniform();
    for (double& x : v) x = rng.uniform();
    const FuzzyRelation r(n, std::move(m));
    const FuzzySet a(std::move(v));

    using clock = std::chrono::steady_clock;
    double best = 1e300;
    ApproximationResult sel;
    for (int i = 0; i < args.reps; ++i) {
      const auto t0 = clock::now();
      sel = approximate(r, model, a, args.beta, exec);
      best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count());
    }
    records.push_back({n, Method::selection, best, 0.0});

    if (sz <= args.oracle_up_to) {
      double bbest = 1e300;
      ApproximationResult ref;
      for (int i = 0; i < args.reps; ++i) {
        const auto t0 = clock::now();
        ref = bruteforce_approximate(r, model, a, args.beta, static_cast<std::size_t>(args.oracle_up_to));
        bbest = std::min(bbest, std::chrono::duration<double>(clock::now() - t0).count());
      }
      const double d = max_discrepancy(sel, ref, Side::both);
      records.push_back({n, Method::bruteforce, bbest, d});
      if (d > 1e-9) {
        std::cerr << "n = " << n << ": selection and brute force differ by " << d << '\n';
        ok = false;
      }
    }
  }

  if (args.format == "text") {
    std::cout << std::left << std::setw(8) << "n" << std::setw(12) << "method" << std::setw(8) << "beta"
              << std::setw(6) << "reps" << std::setw(14) << "seconds" << "discrepancy\n";
    for (const auto& rec : records) {
      std::cout << std::left << std::setw(8) << rec.n << std::setw(12) << to_string(rec.method) << std::setw(8)
                << args.beta << std::setw(6) << args.reps << std::setw(14) << std::setprecision(6) << rec.seconds;
      if (rec.method == Method::bruteforce) std::cout << rec.discrepancy;
      std::cout << '\n';
    }
  } else {
    json out = json::array();
    for (const auto& rec : records) {
      json j{{"n", rec.n},
             {"method", std::string(to_string(rec.method))},
             {"beta", args.beta},
             {"reps", args.reps},
             {"seconds", rec.seconds}};
      if (rec.method == Method::bruteforce) j["discrepancy"] = rec.discrepancy;
      out.push_back(std::move(j));
    }
    emit(out);
  }
  return ok ? kOk : kFailures;
}

// axioms -----------------------------------------------------------------------------

int cmd_axioms(const std::string& descriptor) {
  json j;
  try {
    j = json::parse(descriptor);
  } catch (const json::parse_error&) {
    j = json{{"name", descriptor}};
  }
  const Connective c = connective_from_json(j);
  if (c.kind() == ConnectiveKind::negation) {
    emit(json{{"connective", c.to_json()}, {"involutive", is_involutive(c)}});
    return kOk;
  }
  emit(check_axioms(c).to_json());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(O,G)-granular variable precision fuzzy rough sets"};
  app.require_subcommand(1);

  ApproximateArgs aa;
  auto* approx = app.add_subcommand("approximate", "Lower and upper approximations of a problem file");
  approx->add_option("input", aa.input, "Problem JSON")->required();
  approx->add_option("--side", aa.side, "lower, upper or both")->check(CLI::IsMember({"lower", "upper", "both"}));
  approx->add_flag("--oracle", aa.oracle, "Also run the brute-force enumeration and report the discrepancy");
  approx->add_option("--tolerance", aa.tolerance, "Oracle comparison tolerance (default: options.tolerance)");

  std::string rel_input, rel_overlap;
  auto* rel = app.add_subcommand("check-relation", "Seriality, reflexivity, symmetry and O-transitivity");
  rel->add_option("input", rel_input, "Problem JSON")->required();
  rel->add_option("--overlap", rel_overlap, "Overlap name (default: connectives.overlap)");

  LawsArgs la;
  auto* laws = app.add_subcommand("laws", "Run the randomized law suite");
  laws->add_option("--laws", la.laws, "Comma-separated law ids, or all");
  laws->add_option("--trials", la.trials, "Trials per law");
  laws->add_option("--seed", la.seed, "Seed (GVPFRS_SEED overrides)");
  laws->add_option("--max-universe", la.max_universe, "Largest universe size");
  laws->add_option("--config", la.config, "Connective pool JSON");
  laws->add_option("--tolerance", la.tolerance, "Violation tolerance");
  laws->add_flag("--list", la.list, "List the catalogue and exit");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time the selection method against brute force");
  bench->add_option("--sizes", ba.sizes, "Universe sizes")->delimiter(',');
  bench->add_option("--beta", ba.beta, "Precision");
  bench->add_option("--reps", ba.reps, "Repetitions (fastest is reported)");
  bench->add_option("--seed", ba.seed, "Seed (GVPFRS_SEED overrides)");
  bench->add_option("--include-oracle-up-to", ba.oracle_up_to, "Largest size timed with brute force (<= 20)");
  bench->add_option("--format", ba.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  bench->add_option("--execution", ba.execution, "parallel or serial")->check(CLI::IsMember({"parallel", "serial"}));

  std::string descriptor;
  auto* axioms = app.add_subcommand("axioms", "Sampled axiom report of a connective");
  axioms->add_option("connective", descriptor, "Name or JSON descriptor, e.g. '{\"name\":\"O_p\",\"p\":2}'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*approx) return cmd_approximate(aa);
    if (*rel) return cmd_check_relation(rel_input, rel_overlap);
    if (*laws) return cmd_laws(la);
    if (*bench) return cmd_bench(ba);
    if (*axioms) return cmd_axioms(descriptor);
  } catch (const PremiseError& e) {
    std::cerr << "premise error: " << e.what() << '\n';
    return kPremise;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kPremise;
  } catch (const RegistryError& e) {
    std::cerr << "registry error: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
