// One line per acceptance criterion: PASS/FAIL, the criterion, and what was
// measured. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gvpfrs/connectives.hpp"
#include "gvpfrs/engine.hpp"
#include "gvpfrs/errors.hpp"
#include "gvpfrs/fuzzy.hpp"
#include "gvpfrs/laws.hpp"
#include "gvpfrs/problem.hpp"
#include "gvpfrs/random.hpp"
#include "oracle.hpp"

using namespace gvpfrs;
using json = nlohmann::json;

namespace {

constexpr double kGoldenTol = 1e-12;
constexpr double kOracleTol = 1e-9;
constexpr double kResidualTol = 1e-9;

const std::string fixtures = GVPFRS_FIXTURES;

struct Verdict {
  bool pass;
  std::string detail;
};

using clock_type = std::chrono::steady_clock;
double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<double> golden(const json& g, const char* fixture, const char* key) {
  std::vector<double> v;
  for (const auto& s : g.at(fixture).at(key)) v.push_back(std::stod(s.get<std::string>()));
  return v;
}

double diff(const FuzzySet& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? d : 1.0;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Verdict similarity_golden(const json& g) {
  const auto t0 = clock_type::now();
  const Problem p = load_problem(fixtures + "/similarity_product.json");
  const auto res = approximate(p.relation, p.model(), p.sets.at("A"), *p.beta);
  const double t = seconds_since(t0);
  const double dl = diff(res.lower, golden(g, "similarity_product", "lower"));
  const double du = diff(res.upper, golden(g, "similarity_product", "upper"));
  std::string detail = "lower error " + fmt(dl) + ", upper error " + fmt(du) + ", " + fmt(t) + " s";
  if (du > kGoldenTol) {
    const Model m = p.model();
    const FuzzySet a = p.sets.at("A");
    const auto bf = bruteforce_approximate(p.relation, m, a, *p.beta);
    const FuzzySet dual = upper_via_duality(p.relation, m.overlap, m.grouping.base(), m.negation, a, *p.beta);
    const FuzzySet n_lower = complement(res.lower, m.negation);
    auto show = [](const FuzzySet& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
      return s + ")";
    };
    detail += "; computed upper " + show(res.upper) + ", brute force " + show(bf.upper) + ", N(lower(A^N)) " +
              show(dual) + "; the golden equals N(lower(A)) = " + show(n_lower);
  }
  return {dl <= kGoldenTol && du <= kGoldenTol && t < 1.0, detail};
}

Verdict nontransitive_golden(const json& g) {
  const Problem p = load_problem(fixtures + "/nontransitive_product_max.json");
  const auto res = approximate(p.relation, p.model(), p.sets.at("A"), *p.beta);
  const double d = std::max({diff(res.g, golden(g, "nontransitive_product_max", "g")),
                             diff(res.lower, golden(g, "nontransitive_product_max", "lower")),
                             diff(res.upper, golden(g, "nontransitive_product_max", "upper"))});
  return {d <= kGoldenTol, "max error " + fmt(d)};
}

Verdict non_associative_golden(const json& g) {
  const Problem p = load_problem(fixtures + "/db_non_associative.json");
  const Model m = p.model();
  const FuzzySet& a = p.sets.at("A");
  const double beta = *p.beta, alpha = 1.0;
  const FuzzySet lo = lower(p.relation, m.overlap, a, beta);
  const FuzzySet lo_o = lower(p.relation, m.overlap, pointwise(m.overlap.base(), alpha, a), beta);
  const FuzzySet o_lo = pointwise(m.overlap.base(), alpha, lo);
  const FuzzySet i_lo = pointwise(m.overlap, alpha, lo);
  const FuzzySet lo_i = lower(p.relation, m.overlap, pointwise(m.overlap, alpha, a), beta);
  const double d = std::max({diff(lo, golden(g, "db_non_associative", "lower")),
                             diff(lo_o, golden(g, "db_non_associative", "lower_of_overlap")),
                             diff(o_lo, golden(g, "db_non_associative", "overlap_of_lower")),
                             diff(i_lo, golden(g, "db_non_associative", "residual_of_lower")),
                             diff(lo_i, golden(g, "db_non_associative", "lower_of_residual"))});
  const bool strict1 = is_subset(lo_o, o_lo) && subset_violation(o_lo, lo_o) > kGoldenTol;
  const bool strict2 = is_subset(i_lo, lo_i) && subset_violation(lo_i, i_lo) > kGoldenTol;
  const auto rep = non_associative_counterexample();
  const bool same = max_abs_difference(rep.lower_of_overlap, lo_o) == 0.0 && rep.overlap_containment_strict &&
                    rep.residual_containment_strict;
  return {d <= kGoldenTol && strict1 && strict2 && same,
          "max error " + fmt(d) + ", strict containments " + (strict1 && strict2 ? "yes" : "no")};
}

Verdict crisp_similarity_golden(const json& g) {
  const Problem p = load_problem(fixtures + "/crisp_similarity_db.json");
  const Model m = p.model();
  const FuzzySet& a = p.sets.at("A");
  const double beta = *p.beta;
  double alpha = 1.0;
  for (std::size_t x = 0; x < p.relation.size(); ++x) alpha = std::min(alpha, p.relation(x, x));
  const FuzzySet gv = g_vector(p.relation, m.overlap, a, beta);
  const FuzzySet lo = lower(p.relation, m.overlap, a, beta);
  const double d = std::max({diff(gv, golden(g, "crisp_similarity_db", "g")),
                             diff(lo, golden(g, "crisp_similarity_db", "lower")),
                             diff(pointwise(m.overlap.base(), alpha, lo), golden(g, "crisp_similarity_db", "overlap_of_lower")),
                             diff(lower(p.relation, m.overlap, lo, beta), golden(g, "crisp_similarity_db", "lower_of_lower"))});
  return {d <= kGoldenTol, "max error " + fmt(d)};
}

Verdict oracle_equivalence() {
  const auto t0 = clock_type::now();
  const Connective n = standard_negation();
  const std::vector<Connective> overlaps{product(), overlap_power(2.0), overlap_db(), minimum()};
  const double betas[] = {0.3, 0.5, 0.8, 1.0};
  double worst = 0.0, worst_indep = 0.0;
  for (std::size_t i = 0; i < 500; ++i) {
    SampleRng rng(2024, 5, i);
    const Connective& o = overlaps[i % overlaps.size()];
    const std::size_t size = rng.between(2, 8);
    std::vector<double> m(size * size), v(size);
    for (double& x : m) x = rng.chance(0.1) ? 1.0 : rng.uniform();
    for (double& x : v) x = rng.uniform();
    const FuzzyRelation r(size, m);
    const FuzzySet a(v);
    const double beta = betas[rng.between(0, 3)];
    const Model model{ResidualPair(o), ResidualPair(dual_of(o, n)), n};
    const auto sel = approximate(r, model, a, beta);
    const auto bf = bruteforce_approximate(r, model, a, beta);
    worst = std::max({worst, max_abs_difference(sel.lower, bf.lower), max_abs_difference(sel.upper, bf.upper)});
    // Second, independent enumeration.
    const auto io = [&](double x, double y) { return model.overlap(x, y); };
    const auto ig = [&](double x, double y) { return model.grouping(x, y); };
    const auto ob = [&](double x, double y) { return o(x, y); };
    const auto gb = [&](double x, double y) { return model.grouping.base()(x, y); };
    const auto nf = [&](double x) { return n(x); };
    const auto rows = r.rows();
    const auto lo = oracle::lower_from(rows, ob, oracle::g_enumerate(rows, io, v, beta));
    const auto up = oracle::upper_from(rows, gb, nf, oracle::h_enumerate(rows, ig, nf, v, beta));
    worst_indep = std::max({worst_indep, oracle::max_diff({sel.lower.values().begin(), sel.lower.values().end()}, lo),
                            oracle::max_diff({sel.upper.values().begin(), sel.upper.values().end()}, up)});
  }
  const double t = seconds_since(t0);
  return {worst <= kOracleTol && worst_indep <= kOracleTol && t < 60.0,
          "500 instances, max difference " + fmt(std::max(worst, worst_indep)) + ", " + fmt(t) + " s"};
}

Verdict law_suite() {
  const auto t0 = clock_type::now();
  LawRunOptions opt;
  opt.trials = 200;
  opt.seed = 42;
  const auto reports = run_laws(opt);
  const double t = seconds_since(t0);
  int failing = 0, thin = 0, min_sat = 1 << 30;
  std::string names;
  for (const auto& r : reports) {
    min_sat = std::min(min_sat, r.premise_satisfied);
    if (r.failures > 0 || r.status != LawStatus::pass) {
      ++failing;
      names += " " + r.id;
    }
    if (r.premise_satisfied < 30) {
      ++thin;
      names += " " + r.id + "(thin)";
    }
  }
  return {failing == 0 && thin == 0 && t < 300.0,
          std::to_string(reports.size()) + " laws, " + std::to_string(failing) + " failing, min premise-satisfying " +
              std::to_string(min_sat) + ", " + fmt(t) + " s" + names};
}

Verdict residual_crosscheck() {
  const std::vector<Connective> cs{product(), overlap_power(2.0), overlap_db(), maximum(), probabilistic_sum()};
  double worst = 0.0;
  for (const auto& c : cs) {
    const ResidualPair closed(c, ResidualMode::closed_form), bis(c, ResidualMode::bisection);
    for (int i = 0; i <= 100; ++i)
      for (int j = 0; j <= 100; ++j) {
        const double x = i / 100.0, y = j / 100.0;
        worst = std::max(worst, std::abs(closed(x, y) - bis(x, y)));
      }
  }
  return {worst <= kResidualTol, "5 connectives on 101x101, max difference " + fmt(worst)};
}

Verdict relation_goldens(const json& g) {
  const Problem sim = load_problem(fixtures + "/similarity_product.json");
  const Problem nt = load_problem(fixtures + "/nontransitive_product_max.json");
  const Problem crisp = load_problem(fixtures + "/crisp_similarity_db.json");
  const bool a = check_relation(sim.relation, product()).similarity;
  const auto rep = check_relation(nt.relation, product());
  bool b = !rep.o_transitive && rep.transitive_witness.has_value();
  bool c = true;
  for (const auto& o : {minimum(), product(), overlap_power(2.0), overlap_db()})
    c = c && check_relation(crisp.relation, o).similarity;
  std::string w = "none";
  if (rep.transitive_witness) {
    const auto& t = *rep.transitive_witness;
    w = nt.universe.label(t[0]) + "," + nt.universe.label(t[1]) + "," + nt.universe.label(t[2]);
    const auto& want = g.at("nontransitive_product_max");
    b = b && want.at("transitive_witness") == json::array({nt.universe.label(t[0]), nt.universe.label(t[1]),
                                                           nt.universe.label(t[2])});
    b = b && std::abs(rep.transitive_violation - std::stod(want.at("transitive_violation").get<std::string>())) <=
                 kGoldenTol;
  }
  return {a && b && c, std::string("similarity ") + (a ? "yes" : "no") + ", non-transitive witness (" + w +
                           "), crisp similarity for all overlaps " + (c ? "yes" : "no")};
}

Verdict bench_sanity() {
  const std::size_t n = 1024;
  SampleRng rng(42, 9, 0);
  std::vector<double> m(n * n), v(n);
  for (double& x : m) x = rng.uniform();
  for (double& x : v) x = rng.uniform();
  const FuzzyRelation r(n, std::move(m));
  const FuzzySet a(std::move(v));
  const Model model{ResidualPair(product()), ResidualPair(probabilistic_sum()), standard_negation()};
  const auto t0 = clock_type::now();
  const auto res = approximate(r, model, a, 0.5);
  const double t = seconds_since(t0);

  bool refused = false;
  std::string msg;
  std::vector<double> m21(21 * 21, 0.5);
  try {
    bruteforce_lower(FuzzyRelation(21, m21), model.overlap, make_constant(21, 0.5), 0.5, max_oracle_cap);
  } catch (const RefusalError& e) {
    refused = true;
    msg = e.what();
  }
  bool cap_refused = false;
  try {
    bruteforce_lower(FuzzyRelation(3, std::vector<double>(9, 0.5)), model.overlap, make_constant(3, 0.5), 0.5,
                     max_oracle_cap + 1);
  } catch (const RefusalError&) {
    cap_refused = true;
  }
  return {res.lower.size() == n && t < 10.0 && refused && cap_refused,
          "|X|=1024 in " + fmt(t) + " s; |X|=21 refused: \"" + msg + "\""};
}

}  // namespace

int main() {
  const json g = read_json_file(fixtures + "/golden.json");
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"similarity golden (product / probabilistic sum)", [&] { return similarity_golden(g); }},
      {"non-transitive golden (product / max)", [&] { return nontransitive_golden(g); }},
      {"non-associative O_DB golden", [&] { return non_associative_golden(g); }},
      {"crisp similarity O_DB golden", [&] { return crisp_similarity_golden(g); }},
      {"oracle equivalence", oracle_equivalence},
      {"law suite (200 trials, seed 42)", law_suite},
      {"residual bisection vs closed forms", residual_crosscheck},
      {"relation checker goldens", [&] { return relation_goldens(g); }},
      {"bench sanity", bench_sanity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s [%zu] %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
