#include "gvpfrs/connectives.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "gvpfrs/errors.hpp"
#include "gvpfrs/random.hpp"

namespace gvpfrs {

using nlohmann::json;

std::string_view to_string(ConnectiveKind kind) {
  switch (kind) {
    case ConnectiveKind::overlap:
      return "overlap";
    case ConnectiveKind::grouping:
      return "grouping";
    case ConnectiveKind::negation:
      return "negation";
  }
  return "unknown";
}

namespace detail {

class ConnectiveImpl {
 public:
  ConnectiveImpl(ConnectiveKind kind, std::string name, Params params)
      : kind_(kind), name_(std::move(name)), params_(std::move(params)) {}
  virtual ~ConnectiveImpl() = default;

  ConnectiveKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Params& params() const { return params_; }

  virtual double binary(double, double) const {
    throw DomainError("negation '" + name_ + "' takes one argument");
  }
  virtual double unary(double) const {
    throw DomainError(std::string(to_string(kind_)) + " '" + name_ + "' takes two arguments");
  }
  virtual bool has_residual() const { return false; }
  virtual double residual(double, double) const { return 0.0; }

  virtual json describe() const {
    json j{{"name", name_}};
    for (const auto& [key, value] : params_) j[key] = value;
    return j;
  }

 private:
  ConnectiveKind kind_;
  std::string name_;
  Params params_;
};

namespace {

using BinaryFn = std::function<double(double, double)>;

class BinaryImpl final : public ConnectiveImpl {
 public:
  BinaryImpl(ConnectiveKind kind, std::string name, Params params, BinaryFn fn, BinaryFn residual = {})
      : ConnectiveImpl(kind, std::move(name), std::move(params)),
        fn_(std::move(fn)),
        residual_(std::move(residual)) {}

  double binary(double x, double y) const override { return fn_(x, y); }
  bool has_residual() const override { return static_cast<bool>(residual_); }
  double residual(double x, double y) const override { return residual_(x, y); }

 private:
  BinaryFn fn_;
  BinaryFn residual_;
};

class NegationImpl final : public ConnectiveImpl {
 public:
  NegationImpl(std::string name, Params params, std::function<double(double)> fn)
      : ConnectiveImpl(ConnectiveKind::negation, std::move(name), std::move(params)), fn_(std::move(fn)) {}

  double unary(double x) const override { return fn_(x); }

 private:
  std::function<double(double)> fn_;
};

// G(x,y) = N(O(N(x),N(y))) and, when the base has one, the residual by the
// duality identity I^G(x,y) = N(I_O(N(x),N(y))) (and symmetrically).
class DualImpl final : public ConnectiveImpl {
 public:
  DualImpl(ConnectiveKind kind, std::string name, Connective base, Connective negation)
      : ConnectiveImpl(kind, std::move(name), {}), base_(std::move(base)), negation_(std::move(negation)) {}

  double binary(double x, double y) const override { return negation_(base_(negation_(x), negation_(y))); }
  bool has_residual() const override { return base_.has_closed_residual(); }
  double residual(double x, double y) const override {
    return negation_(*base_.closed_residual(negation_(x), negation_(y)));
  }
  json describe() const override {
    return json{{"name", name()}, {"base", base_.to_json()}, {"negation", negation_.to_json()}};
  }

 private:
  Connective base_;
  Connective negation_;
};

class TabulatedImpl final : public ConnectiveImpl {
 public:
  TabulatedImpl(ConnectiveKind kind, std::vector<std::vector<double>> grid)
      : ConnectiveImpl(kind, "tabulated", {}), grid_(std::move(grid)) {}

  double binary(double x, double y) const override {
    const auto m = grid_.size();
    const double step = 1.0 / static_cast<double>(m - 1);
    auto cell = [&](double t) {
      auto i = static_cast<std::size_t>(t / step);
      return std::min(i, m - 2);
    };
    const std::size_t i = cell(x);
    const std::size_t j = cell(y);
    const double tx = std::clamp(x / step - static_cast<double>(i), 0.0, 1.0);
    const double ty = std::clamp(y / step - static_cast<double>(j), 0.0, 1.0);
    const double v00 = grid_[i][j], v10 = grid_[i + 1][j];
    const double v01 = grid_[i][j + 1], v11 = grid_[i + 1][j + 1];
    return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 + (1 - tx) * ty * v01 + tx * ty * v11;
  }
  json describe() const override {
    return json{{"name", "tabulated"}, {"kind", to_string(kind())}, {"grid", grid_}};
  }

 private:
  std::vector<std::vector<double>> grid_;
};

std::shared_ptr<const ConnectiveImpl> binary(ConnectiveKind kind, std::string name, Params params, BinaryFn fn,
                                             BinaryFn residual = {}) {
  return std::make_shared<BinaryImpl>(kind, std::move(name), std::move(params), std::move(fn),
                                      std::move(residual));
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// Connective handle

Connective::Connective(std::shared_ptr<const detail::ConnectiveImpl> impl) : impl_(std::move(impl)) {}

ConnectiveKind Connective::kind() const { return impl_->kind(); }
const std::string& Connective::name() const { return impl_->name(); }
const Params& Connective::params() const { return impl_->params(); }
bool Connective::has_closed_residual() const { return impl_->has_residual(); }
double Connective::operator()(double x, double y) const { return impl_->binary(x, y); }
double Connective::operator()(double x) const { return impl_->unary(x); }

std::optional<double> Connective::closed_residual(double x, double y) const {
  if (!impl_->has_residual()) return std::nullopt;
  return impl_->residual(x, y);
}

json Connective::to_json() const { return impl_->describe(); }

// ---------------------------------------------------------------------------
// Built-ins

Connective minimum() {
  return Connective(detail::binary(
      ConnectiveKind::overlap, "minimum", {}, [](double x, double y) { return std::min(x, y); },
      [](double x, double y) { return x <= y ? 1.0 : y; }));
}

Connective product() {
  return Connective(detail::binary(
      ConnectiveKind::overlap, "product", {}, [](double x, double y) { return x * y; },
      [](double x, double y) { return x <= y ? 1.0 : y / x; }));
}

Connective overlap_power(double p) {
  if (!(p > 0.0) || p == 1.0 || !std::isfinite(p)) {
    throw DomainError("O_p requires p > 0 and p != 1");
  }
  return Connective(detail::binary(
      ConnectiveKind::overlap, "O_p", {{"p", p}},
      [p](double x, double y) { return std::pow(x, p) * std::pow(y, p); },
      [p](double x, double y) {
        if (x == 0.0) return 1.0;
        return std::min(std::pow(y, 1.0 / p) / x, 1.0);
      }));
}

Connective overlap_db() {
  return Connective(detail::binary(
      ConnectiveKind::overlap, "O_DB", {},
      [](double x, double y) { return x + y == 0.0 ? 0.0 : 2.0 * x * y / (x + y); },
      [](double x, double y) {
        if (x == 0.0) return 1.0;
        if (y < 2.0 * x / (x + 1.0)) return std::min(x * y / (2.0 * x - y), 1.0);
        return 1.0;
      }));
}

Connective maximum() {
  return Connective(detail::binary(
      ConnectiveKind::grouping, "maximum", {}, [](double x, double y) { return std::max(x, y); },
      [](double x, double y) { return x < y ? y : 0.0; }));
}

Connective probabilistic_sum() {
  return Connective(detail::binary(
      ConnectiveKind::grouping, "probabilistic_sum", {}, [](double x, double y) { return 1.0 - (1.0 - x) * (1.0 - y); },
      [](double x, double y) { return x >= y ? 0.0 : (y - x) / (1.0 - x); }));
}

Connective grouping_power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("G_p requires p > 1");
  return Connective(detail::binary(
      ConnectiveKind::grouping, "G_p", {{"p", p}},
      [p](double x, double y) { return 1.0 - std::pow(1.0 - x, p) * std::pow(1.0 - y, p); },
      [p](double x, double y) {
        if (x >= 1.0) return 0.0;
        return std::max(1.0 - std::pow(1.0 - y, 1.0 / p) / (1.0 - x), 0.0);
      }));
}

Connective standard_negation() {
  return Connective(std::make_shared<detail::NegationImpl>("standard", Params{}, [](double x) { return 1.0 - x; }));
}

Connective sugeno_negation(double lambda) {
  if (!(lambda > -1.0) || !std::isfinite(lambda)) throw DomainError("sugeno negation requires lambda > -1");
  return Connective(std::make_shared<detail::NegationImpl>(
      "sugeno", Params{{"lambda", lambda}}, [lambda](double x) { return (1.0 - x) / (1.0 + lambda * x); }));
}

Connective power_negation(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("power negation requires p > 0");
  return Connective(std::make_shared<detail::NegationImpl>(
      "power", Params{{"p", p}}, [p](double x) { return 1.0 - std::pow(x, p); }));
}

Connective tabulated(ConnectiveKind kind, std::vector<std::vector<double>> grid) {
  if (kind == ConnectiveKind::negation) throw DomainError("tabulated connectives must be binary");
  if (grid.size() < 2) throw DomainError("tabulated grid needs at least 2x2 nodes");
  for (const auto& row : grid) {
    if (row.size() != grid.size()) throw DomainError("tabulated grid must be square");
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) throw DomainError("tabulated grid values must lie in [0,1]");
    }
  }
  return Connective(std::make_shared<detail::TabulatedImpl>(kind, std::move(grid)));
}

Connective custom(ConnectiveKind kind, std::string name, std::function<double(double, double)> fn) {
  if (kind == ConnectiveKind::negation) throw DomainError("use custom_negation for negations");
  return Connective(detail::binary(kind, std::move(name), {}, std::move(fn)));
}

Connective custom_negation(std::string name, std::function<double(double)> fn) {
  return Connective(std::make_shared<detail::NegationImpl>(std::move(name), Params{}, std::move(fn)));
}

Connective dual_of(const Connective& desc, const Connective& negation) {
  if (negation.kind() != ConnectiveKind::negation) throw DomainError("dual_of needs a negation");
  if (desc.kind() == ConnectiveKind::negation) throw DomainError("dual_of needs an overlap or a grouping");
  if (!is_involutive(negation)) {
    throw PremiseError("negation '" + negation.name() + "' is not involutive; duality is undefined");
  }
  if (negation.name() == "standard") {
    const auto& n = desc.name();
    if (n == "minimum") return maximum();
    if (n == "maximum") return minimum();
    if (n == "product") return probabilistic_sum();
    if (n == "probabilistic_sum") return product();
    if (n == "O_p" && desc.params().at("p") > 1.0) return grouping_power(desc.params().at("p"));
    if (n == "G_p") return overlap_power(desc.params().at("p"));
  }
  const bool from_overlap = desc.kind() == ConnectiveKind::overlap;
  return Connective(std::make_shared<detail::DualImpl>(
      from_overlap ? ConnectiveKind::grouping : ConnectiveKind::overlap,
      from_overlap ? "dual_of_overlap" : "dual_of_grouping", desc, negation));
}

// ---------------------------------------------------------------------------
// Registry

namespace {

double require_param(const Params& params, const std::string& key, std::string_view owner) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw DomainError(std::string(owner) + " requires parameter '" + key + "'");
  }
  return it->second;
}

}  // namespace

std::vector<std::string> registered_connective_names() {
  return {"minimum", "product",          "O_p",       "O_DB",     "maximum", "probabilistic_sum", "G_p",
          "dual_of_overlap", "dual_of_grouping", "standard", "sugeno", "power", "tabulated"};
}

Connective make_connective(std::string_view name, const Params& params) {
  if (name == "minimum") return minimum();
  if (name == "product") return product();
  if (name == "O_p") return overlap_power(require_param(params, "p", name));
  if (name == "O_DB") return overlap_db();
  if (name == "maximum") return maximum();
  if (name == "probabilistic_sum") return probabilistic_sum();
  if (name == "G_p") return grouping_power(require_param(params, "p", name));
  if (name == "standard") return standard_negation();
  if (name == "sugeno") return sugeno_negation(require_param(params, "lambda", name));
  if (name == "power") return power_negation(require_param(params, "p", name));
  if (name == "dual_of_overlap" || name == "dual_of_grouping" || name == "tabulated") {
    throw RegistryError("connective '" + std::string(name) + "' needs a JSON descriptor with a payload");
  }
  throw RegistryError("unknown connective '" + std::string(name) + "'");
}

Connective connective_from_json(const json& j, std::optional<ConnectiveKind> expected) {
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
    throw ValidationError("connective descriptor must be an object with a string \"name\"");
  }
  const auto name = j["name"].get<std::string>();

  auto check_kind = [&](const Connective& c) {
    if (expected && c.kind() != *expected) {
      throw ValidationError("connective '" + name + "' is a " + std::string(to_string(c.kind())) + ", expected a " +
                            std::string(to_string(*expected)));
    }
    return c;
  };

  if (name == "tabulated") {
    ConnectiveKind kind = expected.value_or(ConnectiveKind::overlap);
    if (j.contains("kind")) {
      const auto k = j["kind"].get<std::string>();
      if (k == "overlap") kind = ConnectiveKind::overlap;
      else if (k == "grouping") kind = ConnectiveKind::grouping;
      else throw ValidationError("tabulated kind must be overlap or grouping");
    }
    if (!j.contains("grid")) throw ValidationError("tabulated connective needs a \"grid\"");
    return check_kind(tabulated(kind, j["grid"].get<std::vector<std::vector<double>>>()));
  }
  if (name == "dual_of_overlap" || name == "dual_of_grouping") {
    if (!j.contains("base")) throw ValidationError(name + " needs a \"base\" descriptor");
    const auto base_kind = name == "dual_of_overlap" ? ConnectiveKind::overlap : ConnectiveKind::grouping;
    const Connective base = connective_from_json(j["base"], base_kind);
    const Connective negation = j.contains("negation")
                                    ? connective_from_json(j["negation"], ConnectiveKind::negation)
                                    : standard_negation();
    return check_kind(dual_of(base, negation));
  }

  Params params;
  for (const auto& [key, value] : j.items()) {
    if (key == "name") continue;
    if (!value.is_number()) throw ValidationError("parameter '" + key + "' of '" + name + "' must be a number");
    params[key] = value.get<double>();
  }
  return check_kind(make_connective(name, params));
}

// ---------------------------------------------------------------------------
// Evaluation and residuals

namespace {

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << what << " = " << v << " is outside [0,1]";
    throw DomainError(os.str());
  }
}

}  // namespace

double eval(const Connective& desc, double x, double y) {
  if (desc.kind() == ConnectiveKind::negation) throw DomainError("eval(x,y) on a negation");
  require_unit(x, "x");
  require_unit(y, "y");
  return desc(x, y);
}

double eval(const Connective& negation, double x) {
  if (negation.kind() != ConnectiveKind::negation) throw DomainError("eval(x) needs a negation");
  require_unit(x, "x");
  return negation(x);
}

ResidualPair::ResidualPair(Connective base, double tolerance)
    : ResidualPair(base, base.has_closed_residual() ? ResidualMode::closed_form : ResidualMode::bisection,
                   tolerance) {}

ResidualPair::ResidualPair(Connective base, ResidualMode mode, double tolerance, int max_iterations)
    : base_(std::move(base)), mode_(mode), tolerance_(tolerance), max_iterations_(max_iterations) {
  if (base_.kind() == ConnectiveKind::negation) throw DomainError("negations have no residual");
  if (mode_ == ResidualMode::closed_form && !base_.has_closed_residual()) {
    throw PremiseError("connective '" + base_.name() + "' has no closed-form residual");
  }
  if (!(tolerance_ > 0.0)) throw DomainError("bisection tolerance must be positive");
}

double ResidualPair::operator()(double x, double y) const {
  if (mode_ == ResidualMode::closed_form) return *base_.closed_residual(x, y);
  return base_.kind() == ConnectiveKind::overlap ? bisect_implication(x, y) : bisect_coimplication(x, y);
}

// Largest z with O(x,z) <= y. The returned point always satisfies the
// inequality, so O(x, I_O(x,y)) <= y holds exactly.
double ResidualPair::bisect_implication(double x, double y) const {
  if (base_(x, 1.0) <= y) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < max_iterations_ && hi - lo > tolerance_; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (base_(x, mid) <= y) lo = mid;
    else hi = mid;
  }
  return lo;
}

// Smallest z with y <= G(x,z); the returned point satisfies the inequality.
double ResidualPair::bisect_coimplication(double x, double y) const {
  if (base_(x, 0.0) >= y) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < max_iterations_ && hi - lo > tolerance_; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (base_(x, mid) >= y) hi = mid;
    else lo = mid;
  }
  return hi;
}

double residual_implication(const ResidualPair& pair, double x, double y) {
  if (pair.base().kind() != ConnectiveKind::overlap) throw DomainError("residual_implication needs an overlap");
  require_unit(x, "x");
  require_unit(y, "y");
  return pair(x, y);
}

double residual_coimplication(const ResidualPair& pair, double x, double y) {
  if (pair.base().kind() != ConnectiveKind::grouping) throw DomainError("residual_coimplication needs a grouping");
  require_unit(x, "x");
  require_unit(y, "y");
  return pair(x, y);
}

double gn_implication(const Connective& grouping, const Connective& negation, double a, double b) {
  if (grouping.kind() != ConnectiveKind::grouping) throw DomainError("gn_implication needs a grouping");
  return eval(grouping, eval(negation, a), b);
}

bool is_involutive(const Connective& negation, int samples, double tolerance) {
  for (int i = 0; i < samples; ++i) {
    const double x = static_cast<double>(i) / (samples - 1);
    if (std::abs(negation(negation(x)) - x) > tolerance) return false;
  }
  return true;
}

bool are_dual(const Connective& overlap, const Connective& grouping, const Connective& negation, int grid_density,
              double tolerance) {
  if (overlap.kind() != ConnectiveKind::overlap || grouping.kind() != ConnectiveKind::grouping) return false;
  for (int i = 0; i < grid_density; ++i) {
    const double x = static_cast<double>(i) / (grid_density - 1);
    for (int j = 0; j < grid_density; ++j) {
      const double y = static_cast<double>(j) / (grid_density - 1);
      if (std::abs(grouping(x, y) - negation(overlap(negation(x), negation(y)))) > tolerance) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Axiom certification

const AxiomCheck* AxiomReport::find(std::string_view axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

bool AxiomReport::passed(std::string_view axiom) const {
  const auto* c = find(axiom);
  return c != nullptr && c->passed;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

json AxiomReport::to_json() const {
  json j{{"subject", subject}, {"kind", to_string(kind)}};
  json axioms = json::object();
  for (const auto& c : checks) {
    json e{{"passed", c.passed}};
    if (!c.passed) {
      e["counterexample"] = c.counterexample;
      e["magnitude"] = c.magnitude;
    }
    axioms[c.axiom] = e;
  }
  j["axioms"] = axioms;
  if (kind == ConnectiveKind::negation) {
    j["involutive"] = involutive;
  } else {
    j["has_identity"] = has_identity;
    j["unit_dominates"] = unit_dominates;
  }
  return j;
}

namespace {

// Tracks the worst violation seen for one axiom.
struct Tracker {
  AxiomCheck check;

  explicit Tracker(std::string name) { check.axiom = std::move(name); }

  void fail(double magnitude, std::vector<double> point) {
    if (check.passed || magnitude > check.magnitude) {
      check.magnitude = magnitude;
      check.counterexample = std::move(point);
    }
    check.passed = false;
  }
};

std::vector<double> grid_points(int density) {
  std::vector<double> pts(static_cast<std::size_t>(density));
  for (int i = 0; i < density; ++i) pts[static_cast<std::size_t>(i)] = static_cast<double>(i) / (density - 1);
  pts.back() = 1.0;
  return pts;
}

// Zooms into [a,b] by repeatedly keeping the half with larger oscillation.
// For a continuous function the oscillation shrinks; at a jump it does not.
template <typename F>
double zoomed_oscillation(F f, double a, double b, int steps) {
  for (int s = 0; s < steps; ++s) {
    const double m = 0.5 * (a + b);
    if (std::abs(f(m) - f(a)) >= std::abs(f(b) - f(m))) b = m;
    else a = m;
  }
  return std::abs(f(b) - f(a));
}

struct Cell {
  double coarse;
  bool along_x;
  double a, b, fixed;
};

void check_binary(const Connective& c, const AxiomOptions& opt, AxiomReport& report) {
  const bool overlap = c.kind() == ConnectiveKind::overlap;
  const auto grid = grid_points(opt.grid_density);

  std::vector<std::pair<double, double>> pairs;
  for (double x : grid) {
    for (double y : grid) pairs.emplace_back(x, y);
  }
  for (int i = 0; i < opt.random_samples; ++i) {
    SampleRng rng(opt.seed, stable_hash("axioms.pairs"), static_cast<std::uint64_t>(i));
    pairs.emplace_back(rng.uniform(), rng.uniform());
  }

  Tracker range("range"), symmetry("symmetry"), zero("zero_boundary"), one("one_boundary");
  Tracker monotone("monotone"), continuity("continuity"), exchange("exchange");

  for (auto [x, y] : pairs) {
    const double v = c(x, y);
    if (!(v >= 0.0 && v <= 1.0)) range.fail(std::isfinite(v) ? std::max(-v, v - 1.0) : 1.0, {x, y});
    const double d = std::abs(v - c(y, x));
    if (d > opt.tolerance) symmetry.fail(d, {x, y});
    if (overlap) {
      if ((v == 0.0) != (x * y == 0.0)) zero.fail(v, {x, y});
      if ((v == 1.0) != (x == 1.0 && y == 1.0)) one.fail(std::abs(1.0 - v), {x, y});
    } else {
      if ((v == 0.0) != (x == 0.0 && y == 0.0)) zero.fail(v, {x, y});
      if ((v == 1.0) != (x == 1.0 || y == 1.0)) one.fail(std::abs(1.0 - v), {x, y});
    }
  }

  // Monotonicity: grid neighbours plus random ordered pairs.
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      const double fixed = grid[i];
      const double a = grid[j], b = grid[j + 1];
      const double along_x_lo = c(a, fixed), along_x_hi = c(b, fixed);
      const double along_y_lo = c(fixed, a), along_y_hi = c(fixed, b);
      if (along_x_lo > along_x_hi + opt.tolerance) monotone.fail(along_x_lo - along_x_hi, {a, fixed, b, fixed});
      if (along_y_lo > along_y_hi + opt.tolerance) monotone.fail(along_y_lo - along_y_hi, {fixed, a, fixed, b});
      cells.push_back({std::abs(along_x_hi - along_x_lo), true, a, b, fixed});
      cells.push_back({std::abs(along_y_hi - along_y_lo), false, a, b, fixed});
    }
  }
  for (int i = 0; i < opt.random_samples; ++i) {
    SampleRng rng(opt.seed, stable_hash("axioms.monotone"), static_cast<std::uint64_t>(i));
    double x1 = rng.uniform(), x2 = rng.uniform(), y1 = rng.uniform(), y2 = rng.uniform();
    if (x1 > x2) std::swap(x1, x2);
    if (y1 > y2) std::swap(y1, y2);
    const double lo = c(x1, y1), hi = c(x2, y2);
    if (lo > hi + opt.tolerance) monotone.fail(lo - hi, {x1, y1, x2, y2});
  }

  // Continuity proxy on the steepest cells.
  std::sort(cells.begin(), cells.end(), [](const Cell& l, const Cell& r) { return l.coarse > r.coarse; });
  const std::size_t zoom_count = std::min<std::size_t>(cells.size(), 16);
  for (std::size_t k = 0; k < zoom_count; ++k) {
    const Cell& cell = cells[k];
    if (cell.coarse <= opt.tolerance) break;
    auto f = [&](double t) { return cell.along_x ? c(t, cell.fixed) : c(cell.fixed, t); };
    const double fine = zoomed_oscillation(f, cell.a, cell.b, opt.zoom_steps);
    if (fine > std::max(opt.tolerance, opt.oscillation_shrink * cell.coarse)) {
      continuity.fail(fine, cell.along_x ? std::vector{cell.a, cell.fixed} : std::vector{cell.fixed, cell.a});
    }
  }

  // Exchange principle on a coarse sub-grid and random triples.
  const auto coarse = grid_points(std::min(opt.grid_density, 11));
  auto exchange_at = [&](double x, double y, double u) {
    const double d = std::abs(c(x, c(y, u)) - c(y, c(x, u)));
    if (d > opt.tolerance) exchange.fail(d, {x, y, u});
  };
  for (double x : coarse) {
    for (double y : coarse) {
      for (double u : coarse) exchange_at(x, y, u);
    }
  }
  for (int i = 0; i < opt.random_samples; ++i) {
    SampleRng rng(opt.seed, stable_hash("axioms.exchange"), static_cast<std::uint64_t>(i));
    exchange_at(rng.uniform(), rng.uniform(), rng.uniform());
  }

  // Identity and unit dominance, used as premises by the law suite.
  const double unit = overlap ? 1.0 : 0.0;
  report.has_identity = true;
  report.unit_dominates = true;
  for (auto [x, unused] : pairs) {
    (void)unused;
    const double v = c(unit, x);
    if (std::abs(v - x) > 1e-12) report.has_identity = false;
    if (overlap ? v < x - 1e-12 : v > x + 1e-12) report.unit_dominates = false;
  }

  report.checks = {range.check, symmetry.check, zero.check, one.check, monotone.check, continuity.check,
                   exchange.check};
}

void check_negation(const Connective& n, const AxiomOptions& opt, AxiomReport& report) {
  Tracker range("range"), boundary("boundary"), decreasing("strictly_decreasing"), continuity("continuity");

  if (n(0.0) != 1.0) boundary.fail(std::abs(1.0 - n(0.0)), {0.0});
  if (n(1.0) != 0.0) boundary.fail(std::abs(n(1.0)), {1.0});

  std::vector<double> pts = grid_points(std::max(opt.grid_density * 10, 2));
  for (int i = 0; i < opt.random_samples; ++i) {
    SampleRng rng(opt.seed, stable_hash("axioms.negation"), static_cast<std::uint64_t>(i));
    pts.push_back(rng.uniform());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  double worst_step = 0.0, worst_a = 0.0, worst_b = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double v = n(pts[i]);
    if (!(v >= 0.0 && v <= 1.0)) range.fail(std::isfinite(v) ? std::max(-v, v - 1.0) : 1.0, {pts[i]});
    if (i + 1 < pts.size()) {
      const double w = n(pts[i + 1]);
      if (!(v > w)) decreasing.fail(w - v, {pts[i], pts[i + 1]});
      if (v - w > worst_step) {
        worst_step = v - w;
        worst_a = pts[i];
        worst_b = pts[i + 1];
      }
    }
  }
  if (worst_step > opt.tolerance) {
    const double fine = zoomed_oscillation([&](double t) { return n(t); }, worst_a, worst_b, opt.zoom_steps);
    if (fine > std::max(opt.tolerance, opt.oscillation_shrink * worst_step)) continuity.fail(fine, {worst_a});
  }

  report.involutive = is_involutive(n);
  report.checks = {range.check, boundary.check, decreasing.check, continuity.check};
}

}  // namespace

AxiomReport check_axioms(const Connective& desc, const AxiomOptions& options) {
  if (options.grid_density < 2) throw DomainError("grid_density must be at least 2");
  if (options.random_samples < 0) throw DomainError("random_samples must be non-negative");
  AxiomReport report;
  report.subject = desc.name();
  report.kind = desc.kind();
  if (desc.kind() == ConnectiveKind::negation) check_negation(desc, options, report);
  else check_binary(desc, options, report);
  return report;
}

}  // namespace gvpfrs
