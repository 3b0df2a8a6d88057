#include <set>
#include <string>

#include "doctest.h"
#include "gvpfrs/errors.hpp"
#include "gvpfrs/laws.hpp"

using namespace gvpfrs;

namespace {

const Connective N = standard_negation();

void check_close(const FuzzySet& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_CASE("catalogue") {
  const auto& cat = law_catalogue();
  std::set<std::string> ids;
  for (const auto& l : cat) {
    CHECK(ids.insert(l.id).second);
    CHECK_FALSE(l.statement.empty());
    CHECK_FALSE(l.premises.empty());
  }
  for (const char* id :
       {"lemma2.1-residual-bounds", "lemma2.2-order", "lemma2.3-chain", "lemma3.1-crisp-duality", "prop3.1-witness",
        "prop3.3-duality", "prop3.4-crisp-formula", "prop3.5-preorder", "lemma4.1-subset-meets",
        "lemma4.2-implication-point", "lemma4.3-residual-shift", "lemma4.4-subrelation", "prop4.1-precision-union",
        "prop4.4-serial-equivalence", "prop4.5-reflexive-g-below-lower", "prop4.6-symmetric-inverse",
        "prop4.7-transitive-lower-below-g", "prop4.8-preorder-lower-equals-g", "prop4.9-precision-meet-join",
        "prop4.10-lower-composition", "prop4.11-transitive-admissible", "prop4.12-admissible-implies-equal",
        "prop4.13-biconditional", "prop4.14-crisp-count"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("unknown law ids suggest the nearest match") {
  CHECK_THROWS_AS(find_law("nosuchlaw"), RegistryError);
  try {
    find_law("prop4.8-preorder-lower-equal-g");
    FAIL("expected a registry error");
  } catch (const RegistryError& e) {
    CHECK(std::string(e.what()).find("prop4.8-preorder-lower-equals-g") != std::string::npos);
  }
  LawRunOptions opt;
  opt.ids = {"nosuchlaw"};
  CHECK_THROWS_AS(run_laws(opt), RegistryError);
}

TEST_CASE("traits of the default pool") {
  const auto pool = default_law_pool();
  REQUIRE(pool.size() == 5);
  const auto& prod = pool[0].traits;
  CHECK(prod.o_exchange);
  CHECK(prod.g_exchange);
  CHECK(prod.dual);
  CHECK(prod.o_identity);
  const auto& power = pool[2].traits;
  CHECK_FALSE(power.o_exchange);
  CHECK(power.dual);
  CHECK_FALSE(power.unit_dominates);
  const auto& db = pool[3].traits;
  CHECK_FALSE(db.o_exchange);
  CHECK(db.dual);
  CHECK(db.unit_dominates);
  const auto& mixed = pool[4].traits;
  CHECK(mixed.o_exchange);
  CHECK_FALSE(mixed.dual);
}

TEST_CASE("a subset of laws passes and is deterministic") {
  LawRunOptions opt;
  opt.ids = {"prop3.3-duality", "prop4.8-preorder-lower-equals-g", "prop4.13-biconditional", "prop3.1-oracle"};
  opt.trials = 40;
  const auto a = run_laws(opt);
  const auto b = run_laws(opt);
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(a[i].id);
    CHECK(a[i].status == LawStatus::pass);
    CHECK(a[i].premise_satisfied + a[i].premise_violated == 40);
    CHECK(a[i].to_json().dump() == b[i].to_json().dump());
  }
  opt.seed = 43;
  CHECK(run_laws(opt)[0].to_json().dump() != a[0].to_json().dump());
}

TEST_CASE("premise gating makes O_DB runs inconclusive where the exchange principle is needed") {
  LawRunOptions opt;
  opt.ids = {"prop4.7-transitive-lower-below-g", "prop4.5-reflexive-g-below-lower"};
  opt.trials = 20;
  opt.pool = {LawConfig::make("O_DB/dual", Model{ResidualPair(overlap_db()),
                                                   ResidualPair(dual_of(overlap_db(), N)), N})};
  const auto reps = run_laws(opt);
  CHECK(reps[0].status == LawStatus::inconclusive);
  CHECK(reps[0].premise_violated == 20);
  CHECK(reps[1].status == LawStatus::pass);
  CHECK(reps[1].premise_satisfied == 20);
}

TEST_CASE("a configuration with false traits is caught") {
  // Claim duality for product/maximum: the duality law must fail and say so.
  LawConfig cfg = LawConfig::make("product/maximum", Model{ResidualPair(product()), ResidualPair(maximum()), N});
  cfg.traits.dual = true;
  LawRunOptions opt;
  opt.ids = {"prop3.3-duality"};
  opt.trials = 30;
  opt.pool = {cfg};
  const auto rep = run_laws(opt).front();
  CHECK(rep.status == LawStatus::fail);
  CHECK(rep.failures > 0);
  CHECK(rep.max_violation > 1e-3);
  REQUIRE_FALSE(rep.counterexamples.empty());
  CHECK(rep.counterexamples.size() <= 3);
  CHECK(rep.counterexamples[0].contains("R"));
  CHECK(rep.counterexamples[0]["config"] == "product/maximum");
}

TEST_CASE("exchange-iff notices a mislabelled configuration") {
  LawConfig cfg = LawConfig::make("O_p", Model{ResidualPair(overlap_power(2.0)), ResidualPair(grouping_power(2.0)), N});
  cfg.traits.o_exchange = true;
  LawRunOptions opt;
  opt.ids = {"lemma2.1-exchange-iff"};
  opt.trials = 10;
  opt.pool = {cfg};
  CHECK(run_laws(opt).front().failures == 10);
}

TEST_CASE("pool from JSON") {
  const auto j = nlohmann::json::parse(R"({"configs": [
      {"label": "p", "overlap": {"name": "product"}, "grouping": {"name": "probabilistic_sum"}},
      {"overlap": {"name": "O_DB"}, "grouping": {"name": "dual_of_overlap", "base": {"name": "O_DB"}},
       "negation": {"name": "standard"}}]})");
  const auto pool = law_pool_from_json(j);
  REQUIRE(pool.size() == 2);
  CHECK(pool[0].label == "p");
  CHECK(pool[0].traits.dual);
  CHECK(pool[1].traits.dual);
  CHECK_FALSE(pool[1].traits.o_exchange);
  CHECK_THROWS_AS(law_pool_from_json(nlohmann::json::parse(R"({"configs": []})")), ValidationError);
  CHECK_THROWS_AS(law_pool_from_json(nlohmann::json::parse(R"({"configs": [{"overlap": {"name": "maximum"},
      "grouping": {"name": "maximum"}}]})")), ValidationError);
}

TEST_CASE("run option guards") {
  LawRunOptions opt;
  opt.trials = 0;
  CHECK_THROWS_AS(run_laws(opt), ValidationError);
  opt.trials = 1;
  opt.max_universe = 65;
  CHECK_THROWS_AS(run_laws(opt), ValidationError);
}

TEST_CASE("comparability cases") {
  const Model dual{ResidualPair(product()), ResidualPair(probabilistic_sum()), N};
  const FuzzyRelation sim({{1, 0.6, 1}, {0.6, 1, 0.6}, {1, 0.6, 1}});
  const auto c2 = check_comparability(sim, dual, FuzzySet({0.8, 0.1, 0.6}), 0.5);
  check_close(c2.lower, {0.6, 1, 0.6}, 1e-12);
  check_close(c2.upper, {0.6, 1.0 / 3, 0.6}, 1e-12);
  CHECK_FALSE(c2.comparable);
  CHECK(c2.order == Order::upper_below_lower);
  CHECK_FALSE(c2.lower_below_a);

  const Model mixed{ResidualPair(product()), ResidualPair(maximum()), N};
  const FuzzyRelation nt({{0, 0.2, 0.8}, {1, 0, 1}, {0, 0.1, 0}});
  const auto c3 = check_comparability(nt, mixed, FuzzySet({0.2, 0, 0.6}), 0.5);
  CHECK_FALSE(c3.comparable);
  CHECK(c3.order == Order::incomparable);

  const auto c1 = check_comparability(sim, dual, FuzzySet({0.8, 0.1, 0.6}), 1.0);
  CHECK(c1.lower_below_a);
  CHECK(c1.a_below_upper);
  CHECK(c1.comparable);
  CHECK(c1.to_json()["order"] == "lower_below_upper");
}

TEST_CASE("non-associative O_DB instance") {
  const auto rep = non_associative_counterexample();
  check_close(rep.lower_a, {1.0 / 3, 2.0 / 5, 2.0 / 5}, 1e-12);
  check_close(rep.lower_of_overlap, {1.0 / 3, 4.0 / 7, 4.0 / 7}, 1e-12);
  check_close(rep.overlap_of_lower, {1.0 / 2, 4.0 / 7, 4.0 / 7}, 1e-12);
  check_close(rep.residual_of_lower, {1.0 / 5, 1.0 / 4, 1.0 / 4}, 1e-12);
  check_close(rep.lower_of_residual, {1.0 / 4, 1.0 / 4, 1.0 / 4}, 1e-12);
  CHECK(rep.overlap_containment_strict);
  CHECK(rep.residual_containment_strict);
}

TEST_CASE("crisp similarity under O_DB shows the strict gap between g and lower") {
  const FuzzyRelation r({{1, 0, 1}, {0, 1, 0}, {1, 0, 1}});
  const ResidualPair o(overlap_db());
  const FuzzySet a({0.2, 0, 0.5});
  const FuzzySet g = g_vector(r, o, a, 0.5), lo = lower(r, o, a, 0.5);
  CHECK(is_subset(g, lo));
  CHECK(subset_violation(lo, g) > 0.1);
  // Neither side of the transitive-case inclusion survives without the exchange principle.
  CHECK_FALSE(is_subset(lo, g));
  CHECK(is_subset(lower(r, o, lo, 0.5), pointwise(o.base(), 1.0, lo)));
}
