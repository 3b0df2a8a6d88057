#include "gvpfrs/problem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gvpfrs/errors.hpp"

namespace gvpfrs {

using json = nlohmann::json;

namespace {

double unit_entry(const json& v, const std::string& where) {
  if (!v.is_number()) throw ValidationError(where + " must be a number");
  const double x = v.get<double>();
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << where << " = " << x << " is outside [0,1]";
    throw ValidationError(os.str());
  }
  return x;
}

FuzzySet parse_set(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) throw ValidationError(where + " must be an array");
  if (v.size() != n)
    throw ValidationError(where + " has " + std::to_string(v.size()) + " entries, universe has " + std::to_string(n));
  std::vector<double> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = unit_entry(v[i], where + "[" + std::to_string(i) + "]");
  return FuzzySet(std::move(m));
}

Connective parse_connective(const json& j, ConnectiveKind kind, const std::string& where) {
  try {
    return connective_from_json(j, kind);
  } catch (const RegistryError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

json label_map(const Witnesses& w, const Universe& u) {
  json out = json::object();
  for (std::size_t x = 0; x < w.size(); ++x) {
    json labels = json::array();
    for (std::size_t y : w[x]) labels.push_back(u.label(y));
    out[u.label(x)] = std::move(labels);
  }
  return out;
}

json values(const FuzzySet& a) { return json(std::vector<double>(a.values().begin(), a.values().end())); }

}  // namespace

void Problem::require_approximation_inputs() const {
  if (sets.empty()) throw ValidationError("missing key \"set\" (or \"sets\")");
  if (!beta) throw ValidationError("missing key \"beta\"");
  if (!overlap) throw ValidationError("missing key \"connectives.overlap\"");
}

Model Problem::model() const {
  if (!overlap) throw ValidationError("missing key \"connectives.overlap\"");
  Connective g = grouping ? *grouping : dual_of(*overlap, negation);
  return Model{ResidualPair(*overlap), ResidualPair(std::move(g)), negation};
}

Problem parse_problem(const json& j) {
  if (!j.is_object()) throw ValidationError("problem must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    static const char* known[] = {"universe", "relation", "set", "sets", "beta", "connectives", "options"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw ValidationError("unknown key \"" + key + "\"");
  }

  if (!j.contains("universe")) throw ValidationError("missing key \"universe\"");
  const json& ju = j["universe"];
  if (!ju.is_array() || ju.empty()) throw ValidationError("\"universe\" must be a non-empty array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ju.size(); ++i) {
    if (!ju[i].is_string()) throw ValidationError("universe[" + std::to_string(i) + "] must be a string");
    labels.push_back(ju[i].get<std::string>());
  }
  const std::size_t n = labels.size();
  Universe universe = [&] {
    try {
      return Universe(labels);
    } catch (const DomainError& e) {
      throw ValidationError(std::string("universe: ") + e.what());
    }
  }();

  if (!j.contains("relation")) throw ValidationError("missing key \"relation\"");
  const json& jr = j["relation"];
  if (!jr.is_array() || jr.size() != n)
    throw ValidationError("\"relation\" must have " + std::to_string(n) + " rows to match the universe");
  std::vector<double> m(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::string row = "relation[" + std::to_string(x) + "]";
    if (!jr[x].is_array() || jr[x].size() != n)
      throw ValidationError(row + " must have " + std::to_string(n) + " entries");
    for (std::size_t y = 0; y < n; ++y) m[x * n + y] = unit_entry(jr[x][y], row + "[" + std::to_string(y) + "]");
  }

  Problem p{std::move(universe), FuzzyRelation(n, std::move(m)), {}, {}, {}, {}, standard_negation(), {}};

  if (j.contains("set") && j.contains("sets")) throw ValidationError("use either \"set\" or \"sets\", not both");
  if (j.contains("set")) p.sets.emplace("A", parse_set(j["set"], n, "set"));
  if (j.contains("sets")) {
    if (!j["sets"].is_object() || j["sets"].empty()) throw ValidationError("\"sets\" must be a non-empty object");
    for (const auto& [name, v] : j["sets"].items()) p.sets.emplace(name, parse_set(v, n, "sets." + name));
  }

  if (j.contains("beta")) p.beta = unit_entry(j["beta"], "beta");

  if (j.contains("connectives")) {
    const json& jc = j["connectives"];
    if (!jc.is_object()) throw ValidationError("\"connectives\" must be an object");
    for (const auto& [key, _] : jc.items())
      if (key != "overlap" && key != "grouping" && key != "negation")
        throw ValidationError("unknown key \"connectives." + key + "\"");
    if (jc.contains("negation"))
      p.negation = parse_connective(jc["negation"], ConnectiveKind::negation, "connectives.negation");
    if (jc.contains("overlap"))
      p.overlap = parse_connective(jc["overlap"], ConnectiveKind::overlap, "connectives.overlap");
    if (jc.contains("grouping"))
      p.grouping = parse_connective(jc["grouping"], ConnectiveKind::grouping, "connectives.grouping");
  }

  if (j.contains("options")) {
    const json& jo = j["options"];
    if (!jo.is_object()) throw ValidationError("\"options\" must be an object");
    for (const auto& [key, v] : jo.items()) {
      if (key == "tolerance") {
        if (!v.is_number() || !(v.get<double>() > 0.0)) throw ValidationError("options.tolerance must be positive");
        p.options.tolerance = v.get<double>();
      } else if (key == "oracle_cap") {
        if (!v.is_number_integer() || v.get<long long>() < 1)
          throw ValidationError("options.oracle_cap must be a positive integer");
        p.options.oracle_cap = v.get<std::size_t>();
      } else {
        throw ValidationError("unknown key \"options." + key + "\"");
      }
    }
  }
  return p;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
    const std::size_t nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const std::size_t col = nl == std::string::npos ? pos + 1 : pos - nl;
    throw ValidationError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                          e.what() + ")");
  }
}

Problem load_problem(const std::string& path) { return parse_problem(read_json_file(path)); }

Side side_from_string(const std::string& s) {
  if (s == "lower") return Side::lower;
  if (s == "upper") return Side::upper;
  if (s == "both") return Side::both;
  throw ValidationError("side must be lower, upper or both, not '" + s + "'");
}

json result_to_json(const ApproximationResult& res, const Universe& universe, Side side) {
  json out = json::object();
  if (side != Side::upper) {
    out["lower"] = values(res.lower);
    out["g"] = values(res.g);
    out["witnesses"] = label_map(res.witnesses_lower, universe);
  }
  if (side != Side::lower) {
    out["upper"] = values(res.upper);
    out["h"] = values(res.h);
    out["witnesses_upper"] = label_map(res.witnesses_upper, universe);
  }
  out["method"] = std::string(to_string(res.method));
  return out;
}

double max_discrepancy(const ApproximationResult& a, const ApproximationResult& b, Side side) {
  double d = 0.0;
  if (side != Side::upper) d = std::max({d, max_abs_difference(a.lower, b.lower), max_abs_difference(a.g, b.g)});
  if (side != Side::lower) d = std::max({d, max_abs_difference(a.upper, b.upper), max_abs_difference(a.h, b.h)});
  return d;
}

json relation_report_to_json(const RelationReport& rep, const Universe& u, const std::string& overlap_name) {
  json out{{"overlap", overlap_name},         {"serial", rep.serial},
           {"reflexive", rep.reflexive},      {"symmetric", rep.symmetric},
           {"O_transitive", rep.o_transitive}, {"preorder", rep.preorder},
           {"similarity", rep.similarity}};
  json w = json::object();
  if (rep.serial_witness) w["serial"] = u.label(*rep.serial_witness);
  if (rep.reflexive_witness) w["reflexive"] = u.label(*rep.reflexive_witness);
  if (rep.symmetric_witness)
    w["symmetric"] = json::array({u.label(rep.symmetric_witness->first), u.label(rep.symmetric_witness->second)});
  if (rep.transitive_witness) {
    const auto& t = *rep.transitive_witness;
    w["O_transitive"] = json::array({u.label(t[0]), u.label(t[1]), u.label(t[2])});
  }
  out["witnesses"] = std::move(w);
  out["transitive_violation"] = rep.transitive_violation;
  return out;
}

}  // namespace gvpfrs
