#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gvpfrs/errors.hpp"
#include "gvpfrs/problem.hpp"
#include "gvpfrs/random.hpp"

using namespace gvpfrs;
using json = nlohmann::json;

namespace {

const std::string fixtures = GVPFRS_FIXTURES;

json base_problem() {
  return json::parse(R"({"universe": ["a", "b"], "relation": [[1, 0.5], [0.5, 1]], "set": [0.3, 0.9],
                         "beta": 0.5, "connectives": {"overlap": {"name": "product"}}})");
}

std::string message_of(const json& j) {
  try {
    parse_problem(j);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixtures parse") {
  for (const char* name : {"similarity_product", "nontransitive_product_max", "db_non_associative",
                           "crisp_similarity_db"}) {
    CAPTURE(name);
    const Problem p = load_problem(fixtures + "/" + name + ".json");
    CHECK(p.universe.size() == 3);
    CHECK_NOTHROW(p.require_approximation_inputs());
    CHECK(p.sets.count("A") == 1);
  }
  CHECK_THROWS_AS(load_problem(fixtures + "/invalid_beta.json"), ValidationError);
  CHECK(message_of(read_json_file(fixtures + "/invalid_beta.json")).find("beta") != std::string::npos);
}

TEST_CASE("defaults: grouping is the dual, negation standard") {
  const Problem p = parse_problem(base_problem());
  const Model m = p.model();
  CHECK(m.grouping.base().name() == "probabilistic_sum");
  CHECK(m.negation.name() == "standard");
  CHECK(p.options.oracle_cap == default_oracle_cap);
}

TEST_CASE("validation names the offending entry") {
  json j = base_problem();
  j["relation"][1][0] = 1.5;
  CHECK(message_of(j).find("relation[1][0]") != std::string::npos);

  j = base_problem();
  j["set"][1] = -0.2;
  CHECK(message_of(j).find("set[1]") != std::string::npos);

  j = base_problem();
  j["relation"] = json::parse("[[1, 0.5]]");
  CHECK(message_of(j).find("rows") != std::string::npos);

  j = base_problem();
  j["universe"] = json::parse(R"(["a", "a"])");
  CHECK_FALSE(message_of(j).empty());

  j = base_problem();
  j["extra"] = 1;
  CHECK(message_of(j).find("extra") != std::string::npos);

  j = base_problem();
  j["connectives"]["overlap"] = json::parse(R"({"name": "maximum"})");
  CHECK(message_of(j).find("connectives.overlap") != std::string::npos);

  j = base_problem();
  j["connectives"]["overlap"] = json::parse(R"({"name": "nosuch"})");
  CHECK_THROWS_AS(parse_problem(j), RegistryError);

  j = base_problem();
  j["options"] = json::parse(R"({"oracle_cap": 0})");
  CHECK(message_of(j).find("oracle_cap") != std::string::npos);

  j = base_problem();
  j.erase("set");
  j["sets"] = json::parse(R"({"A": [0.1, 0.2], "B": [0.3]})");
  CHECK(message_of(j).find("sets.B") != std::string::npos);

  j = base_problem();
  j.erase("beta");
  CHECK_THROWS_AS(parse_problem(j).require_approximation_inputs(), ValidationError);
}

TEST_CASE("malformed JSON reports line and column") {
  const auto path = std::filesystem::temp_directory_path() / "gvpfrs_malformed.json";
  {
    std::ofstream out(path);
    out << "{\n  \"universe\": [\"a\"],\n  \"relation\": [[1,]]\n}\n";
  }
  try {
    load_problem(path.string());
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_problem("/nonexistent/file.json"), ValidationError);
}

TEST_CASE("result JSON") {
  const Problem p = load_problem(fixtures + "/nontransitive_product_max.json");
  const auto res = approximate(p.relation, p.model(), p.sets.at("A"), *p.beta);
  const json both = result_to_json(res, p.universe, Side::both);
  for (const char* key : {"lower", "upper", "g", "h", "witnesses", "witnesses_upper", "method"})
    CHECK(both.contains(key));
  CHECK(both["method"] == "selection");
  CHECK(both["witnesses"]["x1"].size() == 2);
  const json lo = result_to_json(res, p.universe, Side::lower);
  CHECK_FALSE(lo.contains("upper"));
  CHECK(max_discrepancy(res, res, Side::both) == 0.0);
  CHECK(side_from_string("upper") == Side::upper);
  CHECK_THROWS_AS(side_from_string("left"), ValidationError);
}

TEST_CASE("emitted numbers round trip exactly") {
  SampleRng rng(41, 0, 0);
  std::vector<double> v(200);
  for (double& x : v) x = rng.uniform();
  v.push_back(1.0 / 7.0);
  v.push_back(4.0 / 7.0);
  const std::string text = json(v).dump();
  const auto back = json::parse(text).get<std::vector<double>>();
  CHECK(back == v);
  CHECK(json(1.0 / 7.0).dump() == "0.14285714285714285");
}

TEST_CASE("relation report JSON uses labels") {
  const Problem p = load_problem(fixtures + "/nontransitive_product_max.json");
  const json j = relation_report_to_json(check_relation(p.relation, product()), p.universe, "product");
  CHECK(j["O_transitive"] == false);
  CHECK(j["witnesses"]["O_transitive"] == json::parse(R"(["x1", "x2", "x1"])"));
}
