#include "gvpfrs/laws.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "gvpfrs/errors.hpp"
#include "gvpfrs/random.hpp"

namespace gvpfrs {

using json = nlohmann::json;

namespace {

constexpr Execution kSerial = Execution::serial;
constexpr double kAdmissibleSlack = 1e-12;

json set_json(const FuzzySet& a) { return json(std::vector<double>(a.values().begin(), a.values().end())); }

struct Outcome {
  bool met = true;
  double violation = 0.0;
  json instance;
};

// One randomized instance of one law: generators, connective shorthands and
// a running maximum of the observed violation.
class Trial {
 public:
  Trial(const LawConfig& cfg, SampleRng rng, std::size_t max_universe, double tolerance)
      : cfg(cfg), m(cfg.model), traits(cfg.traits), rng(rng), max_n_(max_universe), tol_(tolerance) {
    inst["config"] = cfg.label;
  }

  const LawConfig& cfg;
  const Model& m;
  const ConnectiveTraits& traits;
  SampleRng rng;
  json inst;

  // Connectives -----------------------------------------------------------------
  double O(double x, double y) const { return m.overlap.base()(x, y); }
  double G(double x, double y) const { return m.grouping.base()(x, y); }
  double N(double x) const { return m.negation(x); }
  double IO(double x, double y) const { return m.overlap(x, y); }
  double IG(double x, double y) const { return m.grouping(x, y); }

  FuzzySet lower(const FuzzyRelation& r, const FuzzySet& a, double beta) const {
    return gvpfrs::lower(r, m.overlap, a, beta, kSerial);
  }
  FuzzySet upper(const FuzzyRelation& r, const FuzzySet& a, double beta) const {
    return gvpfrs::upper(r, m.grouping, m.negation, a, beta, kSerial);
  }
  FuzzySet g(const FuzzyRelation& r, const FuzzySet& a, double beta) const {
    return g_vector(r, m.overlap, a, beta, nullptr, kSerial);
  }
  FuzzySet h(const FuzzyRelation& r, const FuzzySet& a, double beta) const {
    return h_vector(r, m.grouping, m.negation, a, beta, nullptr, kSerial);
  }
  FuzzySet neg(const FuzzySet& a) const { return complement(a, m.negation); }
  FuzzySet o_with(double alpha, const FuzzySet& a) const { return pointwise(m.overlap.base(), alpha, a); }
  FuzzySet g_with(double alpha, const FuzzySet& a) const { return pointwise(m.grouping.base(), alpha, a); }
  FuzzySet io_with(double alpha, const FuzzySet& a) const { return pointwise(m.overlap, alpha, a); }
  FuzzySet ig_with(double alpha, const FuzzySet& a) const { return pointwise(m.grouping, alpha, a); }

  // Generators ------------------------------------------------------------------
  double unit() {
    const double u = rng.uniform();
    if (u < 0.05) return 0.0;
    if (u < 0.10) return 1.0;
    return rng.uniform();
  }

  std::size_t size(std::size_t cap = std::numeric_limits<std::size_t>::max()) {
    const std::size_t hi = std::max<std::size_t>(2, std::min(max_n_, cap));
    const std::size_t n = rng.between(2, hi);
    inst["n"] = n;
    return n;
  }

  double beta() {
    static constexpr double picks[] = {0.3, 0.5, 0.8, 1.0};
    const double b = rng.chance(0.3) ? picks[rng.between(0, 3)] : rng.uniform();
    inst["beta"] = b;
    return b;
  }
  /// Uniform in (lo, hi].
  double beta_above(double lo, double hi = 1.0) {
    const double b = lo + (hi - lo) * (1.0 - rng.uniform());
    inst["beta"] = b;
    return b;
  }
  /// Uniform in [0, hi].
  double beta_upto(double hi) {
    const double b = rng.chance(0.1) ? hi : hi * rng.uniform();
    inst["beta"] = b;
    return b;
  }

  std::vector<double> alphas() {
    std::vector<double> a{0.0, 0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < 3; ++i) a.push_back(rng.uniform());
    return a;
  }

  FuzzySet set(std::size_t n, const char* key = "A") {
    std::vector<double> v(n);
    for (double& x : v) x = unit();
    FuzzySet a(std::move(v));
    inst[key] = set_json(a);
    return a;
  }

  FuzzySet crisp_set(std::size_t n, const char* key = "A") {
    std::vector<double> v(n);
    for (double& x : v) x = rng.chance(0.5) ? 1.0 : 0.0;
    FuzzySet a(std::move(v));
    inst[key] = set_json(a);
    return a;
  }

  /// B = A + u(1 - A), so A is contained in B.
  FuzzySet superset(const FuzzySet& a, const char* key = "B") {
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = rng.chance(0.3) ? a[i] : a[i] + rng.uniform() * (1.0 - a[i]);
    FuzzySet b(std::move(v));
    inst[key] = set_json(b);
    return b;
  }

  FuzzyRelation raw(std::size_t n, double sparsity) {
    std::vector<double> m(n * n);
    for (double& v : m) v = rng.chance(sparsity) ? 0.0 : unit();
    return FuzzyRelation(n, std::move(m));
  }

  FuzzyRelation crisp(std::size_t n, double density = 0.4) {
    std::vector<double> m(n * n);
    for (double& v : m) v = rng.chance(density) ? 1.0 : 0.0;
    return FuzzyRelation(n, std::move(m));
  }

  static FuzzyRelation reflexive(FuzzyRelation r) {
    for (std::size_t x = 0; x < r.size(); ++x) r.set(x, x, 1.0);
    return r;
  }

  static FuzzyRelation symmetric(FuzzyRelation r) {
    for (std::size_t x = 0; x < r.size(); ++x)
      for (std::size_t y = x + 1; y < r.size(); ++y) {
        const double v = std::max(r(x, y), r(y, x));
        r.set(x, y, v);
        r.set(y, x, v);
      }
    return r;
  }

  FuzzyRelation transitive(const FuzzyRelation& r) const {
    return o_transitive_closure(r, m.overlap.base(), {}, kSerial);
  }
  FuzzyRelation preorder(const FuzzyRelation& r) const { return transitive(reflexive(r)); }

  /// Dense, sparse, reflexive, symmetric or crisp.
  FuzzyRelation any_relation(std::size_t n) {
    switch (rng.between(0, 4)) {
      case 0: return raw(n, 0.0);
      case 1: return raw(n, 0.6);
      case 2: return reflexive(raw(n, 0.3));
      case 3: return symmetric(raw(n, 0.3));
      default: return crisp(n);
    }
  }

  FuzzyRelation base_relation(std::size_t n) { return raw(n, rng.chance(0.5) ? 0.0 : 0.6); }

  /// S within R; R an O-preorder and, unless `close_s` is false, S as well.
  std::pair<FuzzyRelation, FuzzyRelation> nested(std::size_t n, bool preorders) {
    FuzzyRelation r = preorders ? preorder(base_relation(n)) : transitive(base_relation(n));
    FuzzyRelation s = r;
    if (!rng.chance(0.25)) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (x == y && preorders) continue;
          if (rng.chance(0.5)) continue;
          s.set(x, y, rng.chance(0.2) ? 0.0 : r(x, y) * rng.uniform());
        }
      if (preorders) s = preorder(s);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) s.set(x, y, std::min(s(x, y), r(x, y)));
    }
    keep("S", s);
    keep("R", r);
    return {s, r};
  }

  const FuzzyRelation& keep(const char* key, const FuzzyRelation& r) {
    inst[key] = r.rows();
    return r;
  }

  // Checks ----------------------------------------------------------------------
  void bump(double v, const char* what) {
    if (v > tol_ && !inst.contains("violated")) inst["violated"] = what;
    worst = std::max(worst, v);
  }
  void subset(const FuzzySet& a, const FuzzySet& b, const char* what) { bump(subset_violation(a, b), what); }
  void equal(const FuzzySet& a, const FuzzySet& b, const char* what) { bump(max_abs_difference(a, b), what); }
  void leq(double a, double b, const char* what) { bump(std::max(0.0, a - b), what); }
  void same(double a, double b, const char* what) { bump(std::abs(a - b), what); }
  void truth(bool ok, const char* what) { bump(ok ? 0.0 : 1.0, what); }

  bool is_equal(const FuzzySet& a, const FuzzySet& b) const { return max_abs_difference(a, b) <= tol_; }
  bool within(const FuzzySet& a, const FuzzySet& b) const { return subset_violation(a, b) <= tol_; }
  double tol() const { return tol_; }

  Outcome done() { return {true, worst, std::move(inst)}; }
  static Outcome unmet() { return {false, 0.0, {}}; }

 private:
  std::size_t max_n_;
  double tol_;
  double worst = 0.0;
};

std::size_t lower_admissible(const FuzzyRelation& r, const Connective& o, const FuzzySet& a, std::size_t x,
                             double level) {
  std::size_t c = 0;
  for (std::size_t y = 0; y < r.size(); ++y)
    if (o(r(x, y), level) <= a[y] + kAdmissibleSlack) ++c;
  return c;
}

std::size_t upper_admissible(const FuzzyRelation& r, const Connective& g, const Connective& n, const FuzzySet& a,
                             std::size_t x, double level) {
  std::size_t c = 0;
  for (std::size_t y = 0; y < r.size(); ++y)
    if (a[y] <= g(n(r(x, y)), level) + kAdmissibleSlack) ++c;
  return c;
}

double column_max(const FuzzyRelation& r, std::size_t z) {
  double v = 0.0;
  for (std::size_t x = 0; x < r.size(); ++x) v = std::max(v, r(x, z));
  return v;
}

double diagonal_min(const FuzzyRelation& r) {
  double v = 1.0;
  for (std::size_t x = 0; x < r.size(); ++x) v = std::min(v, r(x, x));
  return v;
}

FuzzySet full(std::size_t n) { return make_constant(n, 1.0); }
FuzzySet empty(std::size_t n) { return make_constant(n, 0.0); }

/// A = I_O(y_1, alpha_X): I_O(1, alpha) at y, 1 elsewhere.
FuzzySet implication_point(const Trial& t, std::size_t n, std::size_t y, double alpha) {
  std::vector<double> v(n);
  for (std::size_t z = 0; z < n; ++z) v[z] = t.IO(z == y ? 1.0 : 0.0, alpha);
  return FuzzySet(std::move(v));
}

std::vector<std::size_t> random_subset(SampleRng& rng, std::size_t n, std::size_t min_size) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[rng.between(0, i - 1)]);
  idx.resize(rng.between(min_size, n));
  std::sort(idx.begin(), idx.end());
  return idx;
}

bool high_precision(double beta, std::size_t n) {
  return beta > static_cast<double>(n - 1) / static_cast<double>(n) + 1e-12;
}

// Catalogue -----------------------------------------------------------------------

struct LawEntry {
  LawInfo info;
  std::function<Outcome(Trial&)> run;
};

std::vector<LawEntry> build_catalogue() {
  std::vector<LawEntry> laws;
  auto add = [&](std::string id, std::string statement, std::string premises, std::function<Outcome(Trial&)> fn,
                 bool oracle = false) {
    laws.push_back({{std::move(id), std::move(statement), std::move(premises), oracle}, std::move(fn)});
  };

  // Residual connectives ----------------------------------------------------------

  add("lemma2.1-residual-bounds", "O(x, I_O(x,y)) <= y and y <= G(I^G(x,y), x)", "none", [](Trial& t) {
    for (int i = 0; i < 64; ++i) {
      const double x = t.unit(), y = t.unit();
      t.leq(t.O(x, t.IO(x, y)), y, "O(x,I_O(x,y)) <= y");
      t.leq(y, t.G(t.IG(x, y), x), "y <= G(I^G(x,y),x)");
    }
    return t.done();
  });

  auto family = [](Trial& t) {
    std::vector<double> xs(t.rng.between(1, 6));
    for (double& v : xs) v = t.unit();
    return xs;
  };

  add("lemma2.1-meet-distribution", "I_O(y, min x_i) = min I_O(y, x_i) and I^G(y, max x_i) = max I^G(y, x_i)",
      "none", [family](Trial& t) {
        for (int i = 0; i < 16; ++i) {
          const double y = t.unit();
          const auto xs = family(t);
          double lo = 1.0, hi = 0.0, io = 1.0, ig = 0.0;
          for (double x : xs) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
            io = std::min(io, t.IO(y, x));
            ig = std::max(ig, t.IG(y, x));
          }
          t.same(t.IO(y, lo), io, "I_O over meets");
          t.same(t.IG(y, hi), ig, "I^G over joins");
        }
        return t.done();
      });

  add("lemma2.1-join-distribution", "I_O(y, max x_i) = max I_O(y, x_i) and I^G(y, min x_i) = min I^G(y, x_i)",
      "none", [family](Trial& t) {
        for (int i = 0; i < 16; ++i) {
          const double y = t.unit();
          const auto xs = family(t);
          double lo = 1.0, hi = 0.0, io = 0.0, ig = 1.0;
          for (double x : xs) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
            io = std::max(io, t.IO(y, x));
            ig = std::min(ig, t.IG(y, x));
          }
          t.same(t.IO(y, hi), io, "I_O over joins");
          t.same(t.IG(y, lo), ig, "I^G over meets");
        }
        return t.done();
      });

  add("lemma2.1-antitone-distribution", "I_O(max x_i, y) = min I_O(x_i, y) and I^G(min x_i, y) = max I^G(x_i, y)",
      "none", [family](Trial& t) {
        for (int i = 0; i < 16; ++i) {
          const double y = t.unit();
          const auto xs = family(t);
          double lo = 1.0, hi = 0.0, io = 1.0, ig = 0.0;
          for (double x : xs) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
            io = std::min(io, t.IO(x, y));
            ig = std::max(ig, t.IG(x, y));
          }
          t.same(t.IO(hi, y), io, "I_O antitone in the first argument");
          t.same(t.IG(lo, y), ig, "I^G antitone in the first argument");
        }
        return t.done();
      });

  add("lemma2.1-exchange-iff",
      "I_O(x, I_O(y,z)) = I_O(O(x,y), z) on all samples iff O satisfies the exchange principle (dually for G)",
      "none", [](Trial& t) {
        bool o_holds = true, g_holds = true;
        for (int i = 0; i < 128; ++i) {
          const double x = t.unit(), y = t.unit(), z = t.unit();
          if (std::abs(t.IO(x, t.IO(y, z)) - t.IO(t.O(x, y), z)) > t.tol()) o_holds = false;
          if (std::abs(t.IG(x, t.IG(y, z)) - t.IG(t.G(x, y), z)) > t.tol()) g_holds = false;
        }
        t.inst["o_identity_on_samples"] = o_holds;
        t.inst["g_identity_on_samples"] = g_holds;
        t.truth(o_holds == t.traits.o_exchange, "I_O identity vs exchange principle of O");
        t.truth(g_holds == t.traits.g_exchange, "I^G identity vs exchange principle of G");
        return t.done();
      });

  add("lemma2.2-unit", "I_O(1,x) = x and I^G(0,x) = x", "O has identity 1, G has identity 0", [](Trial& t) {
    if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
    for (int i = 0; i < 32; ++i) {
      const double x = t.unit();
      t.same(t.IO(1.0, x), x, "I_O(1,x) = x");
      t.same(t.IG(0.0, x), x, "I^G(0,x) = x");
    }
    return t.done();
  });

  add("lemma2.2-order", "x <= y iff I_O(x,y) = 1 iff I^G(y,x) = 0", "O has identity 1, G has identity 0",
      [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
        for (int i = 0; i < 32; ++i) {
          const double x = t.unit();
          const double y = t.rng.chance(0.2) ? x : t.unit();
          const bool le = x <= y;
          t.truth(le == (t.IO(x, y) == 1.0), "x <= y iff I_O(x,y) = 1");
          t.truth(le == (t.IG(y, x) == 0.0), "x <= y iff I^G(y,x) = 0");
        }
        return t.done();
      });

  add("lemma2.2-bounds", "x <= I_O(y,x) and I^G(y,x) <= x", "O has identity 1, G has identity 0", [](Trial& t) {
    if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
    for (int i = 0; i < 32; ++i) {
      const double x = t.unit(), y = t.unit();
      t.leq(x, t.IO(y, x), "x <= I_O(y,x)");
      t.leq(t.IG(y, x), x, "I^G(y,x) <= x");
    }
    return t.done();
  });

  add("lemma2.3-shift", "O(x, I_O(y,z)) <= I_O(y, O(x,z)) and I^G(y, G(x,z)) <= G(x, I^G(y,z))",
      "O and G satisfy the exchange principle", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        for (int i = 0; i < 32; ++i) {
          const double x = t.unit(), y = t.unit(), z = t.unit();
          t.leq(t.O(x, t.IO(y, z)), t.IO(y, t.O(x, z)), "O(x,I_O(y,z)) <= I_O(y,O(x,z))");
          t.leq(t.IG(y, t.G(x, z)), t.G(x, t.IG(y, z)), "I^G(y,G(x,z)) <= G(x,I^G(y,z))");
        }
        return t.done();
      });

  add("lemma2.3-chain", "I_O(y,z) <= I_O(I_O(x,y), I_O(x,z)) and I^G(I^G(x,y), I^G(x,z)) <= I^G(y,z)",
      "O and G satisfy the exchange principle", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        for (int i = 0; i < 32; ++i) {
          const double x = t.unit(), y = t.unit(), z = t.unit();
          t.leq(t.IO(y, z), t.IO(t.IO(x, y), t.IO(x, z)), "I_O chain");
          t.leq(t.IG(t.IG(x, y), t.IG(x, z)), t.IG(y, z), "I^G chain");
        }
        return t.done();
      });

  // Representation of the operators ------------------------------------------------

  add("prop3.1-witness",
      "{y : O(R(x,y), g_A(x)) <= A(y)} has at least ceil(beta|X|) elements for every x, and the recorded witness "
      "set satisfies it",
      "none", [](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const auto res = lower_approx(r, t.m.overlap, a, beta, kSerial);
        t.truth(witnesses_valid(r, t.m.overlap.base(), a, res.g, res.witnesses_lower, beta), "witness sets");
        const auto k = precision_threshold(beta, n);
        for (std::size_t x = 0; x < n; ++x)
          t.truth(lower_admissible(r, t.m.overlap.base(), a, x, res.g[x]) >= k, "admissible level");
        t.equal(res.lower, granule_union(r, t.m.overlap.base(), res.g, kSerial), "union of granules");
        return t.done();
      });

  add("prop3.1-oracle", "selection-based g_A and lower(A) equal the subset enumeration of the definition",
      "none", [](Trial& t) {
        const std::size_t n = t.size(10);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        t.equal(t.g(r, a, beta), bruteforce_g(r, t.m.overlap, a, beta, 10), "g_A");
        t.equal(t.lower(r, a, beta), bruteforce_lower(r, t.m.overlap, a, beta, 10), "lower(A)");
        return t.done();
      }, true);

  add("prop3.2-witness",
      "{y : A(y) <= G(N(R(x,y)), h_A(x))} has at least ceil(beta|X|) elements for every x, and the recorded "
      "witness set satisfies it",
      "N involutive", [](Trial& t) {
        if (!t.traits.involutive) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const auto res = upper_approx(r, t.m.grouping, t.m.negation, a, beta, kSerial);
        const auto k = precision_threshold(beta, n);
        for (std::size_t x = 0; x < n; ++x) {
          t.truth(res.witnesses_upper[x].size() >= k, "witness size");
          for (std::size_t y : res.witnesses_upper[x])
            t.leq(a[y], t.G(t.N(r(x, y)), res.h[x]) + kAdmissibleSlack, "witness containment");
          t.truth(upper_admissible(r, t.m.grouping.base(), t.m.negation, a, x, res.h[x]) >= k, "admissible level");
        }
        t.equal(res.upper, granule_intersection(r, t.m.grouping.base(), t.m.negation, res.h, kSerial),
                "intersection of granules");
        return t.done();
      });

  add("prop3.2-oracle", "selection-based h_A and upper(A) equal the subset enumeration of the definition",
      "N involutive", [](Trial& t) {
        if (!t.traits.involutive) return Trial::unmet();
        const std::size_t n = t.size(10);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        t.equal(t.h(r, a, beta), bruteforce_h(r, t.m.grouping, t.m.negation, a, beta, 10), "h_A");
        t.equal(t.upper(r, a, beta), bruteforce_upper(r, t.m.grouping, t.m.negation, a, beta, 10), "upper(A)");
        return t.done();
      }, true);

  add("prop3.3-duality",
      "(g_A)^N = h_{A^N}, (h_A)^N = g_{A^N}, lower(A)^N = upper(A^N), upper(A)^N = lower(A^N), and "
      "I_O(x,y) = N(I^G(N(x),N(y)))",
      "O and G dual w.r.t. involutive N", [](Trial& t) {
        if (!(t.traits.dual && t.traits.involutive)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet an = t.neg(a);
        t.equal(t.neg(t.g(r, a, beta)), t.h(r, an, beta), "(g_A)^N = h_{A^N}");
        t.equal(t.neg(t.h(r, a, beta)), t.g(r, an, beta), "(h_A)^N = g_{A^N}");
        t.equal(t.neg(t.lower(r, a, beta)), t.upper(r, an, beta), "lower(A)^N = upper(A^N)");
        t.equal(t.neg(t.upper(r, a, beta)), t.lower(r, an, beta), "upper(A)^N = lower(A^N)");
        t.equal(upper_via_duality(r, t.m.overlap, t.m.grouping.base(), t.m.negation, a, beta, kSerial),
                t.upper(r, a, beta), "upper via duality");
        for (int i = 0; i < 16; ++i) {
          const double x = t.unit(), y = t.unit();
          t.same(t.IO(x, y), t.N(t.IG(t.N(x), t.N(y))), "I_O = N(I^G(N,N))");
          t.same(t.IG(x, y), t.N(t.IO(t.N(x), t.N(y))), "I^G = N(I_O(N,N))");
        }
        return t.done();
      });

  // Crisp degenerations --------------------------------------------------------------

  add("lemma3.1-crisp-duality", "crisp R: lower(A)^N = upper(A^N) and upper(A)^N = lower(A^N)",
      "R crisp; N involutive; O,G dual, or O has identity 1 and G identity 0", [](Trial& t) {
        if (!t.traits.involutive || !(t.traits.dual || (t.traits.o_identity && t.traits.g_identity)))
          return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.crisp(n, t.rng.uniform(0.1, 0.9)));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        t.equal(t.neg(t.lower(r, a, beta)), t.upper(r, t.neg(a), beta), "lower(A)^N = upper(A^N)");
        t.equal(t.neg(t.upper(r, a, beta)), t.lower(r, t.neg(a), beta), "upper(A)^N = lower(A^N)");
        return t.done();
      });

  add("prop3.4-crisp-formula",
      "crisp R, A: lower(A) = U{[x]_R : |[x]_R n A^c| <= (1-beta)|X|}, upper(A) = n{[x]_R^c : |[x]_R n A| <= "
      "(1-beta)|X|}",
      "R and A crisp", [](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.crisp(n, t.rng.uniform(0.1, 0.9)));
        const FuzzySet a = t.crisp_set(n);
        const double beta = t.beta();
        t.equal(t.lower(r, a, beta), crisp_lower(r, a, beta), "lower");
        t.equal(t.upper(r, a, beta), crisp_upper(r, a, beta), "upper");
        return t.done();
      });

  auto crisp_sets = [](Trial& t, const FuzzyRelation& r, const FuzzySet& a, double beta) {
    const std::size_t n = r.size();
    const FuzzySet lo_set = indicator(n, crisp_lower_anchors(r, a, beta));
    const FuzzySet up_set = complement(indicator(n, crisp_upper_anchors(r, a, beta)), standard_negation());
    return std::make_tuple(lo_set, up_set, t.lower(r, a, beta), t.upper(r, a, beta));
  };

  add("prop3.5-reflexive",
      "reflexive crisp R: {x : |[x]_R n A^c| <= (1-beta)|X|} within lower(A), upper(A) within {x : |[x]_R n A| > "
      "(1-beta)|X|}",
      "R crisp and reflexive, A crisp", [crisp_sets](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", Trial::reflexive(t.crisp(n, t.rng.uniform(0.1, 0.7))));
        const FuzzySet a = t.crisp_set(n);
        const double beta = t.beta();
        const auto [lo_set, up_set, lo, up] = crisp_sets(t, r, a, beta);
        t.subset(lo_set, lo, "count set within lower");
        t.subset(up, up_set, "upper within count set");
        return t.done();
      });

  add("prop3.5-transitive",
      "transitive crisp R: lower(A) within {x : |[x]_R n A^c| <= (1-beta)|X|}, {x : |[x]_R n A| > (1-beta)|X|} "
      "within upper(A)",
      "R crisp and transitive, A crisp", [crisp_sets](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r =
            t.keep("R", o_transitive_closure(t.crisp(n, t.rng.uniform(0.05, 0.4)), minimum(), {}, kSerial));
        const FuzzySet a = t.crisp_set(n);
        const double beta = t.beta();
        const auto [lo_set, up_set, lo, up] = crisp_sets(t, r, a, beta);
        t.subset(lo, lo_set, "lower within count set");
        t.subset(up_set, up, "count set within upper");
        return t.done();
      });

  add("prop3.5-preorder",
      "crisp preorder R: lower(A) = {x : |[x]_R n A^c| <= (1-beta)|X|}, upper(A) = {x : |[x]_R n A| > "
      "(1-beta)|X|}",
      "R crisp preorder, A crisp", [crisp_sets](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep(
            "R", o_transitive_closure(Trial::reflexive(t.crisp(n, t.rng.uniform(0.05, 0.4))), minimum(), {}, kSerial));
        const FuzzySet a = t.crisp_set(n);
        const double beta = t.beta();
        const auto [lo_set, up_set, lo, up] = crisp_sets(t, r, a, beta);
        t.equal(lo, lo_set, "lower equals count set");
        t.equal(up, up_set, "upper equals count set");
        return t.done();
      });

  add("remark3.3-full-precision", "beta > (|X|-1)/|X|: lower(A) within A within upper(A)", "none", [](Trial& t) {
    const std::size_t n = t.size(64);
    const FuzzyRelation r = t.keep("R", t.any_relation(n));
    const FuzzySet a = t.set(n);
    const double beta = t.rng.chance(0.3) ? 1.0 : t.beta_above(static_cast<double>(n - 1) / static_cast<double>(n));
    t.inst["beta"] = beta;
    t.subset(t.lower(r, a, beta), a, "lower(A) within A");
    t.subset(a, t.upper(r, a, beta), "A within upper(A)");
    return t.done();
  });

  // g_A and h_A ----------------------------------------------------------------------

  add("lemma4.1-subset-meets",
      "for a fixed admissible subset X_i: g^(i) of an intersection is the intersection of the g^(i), h^(i) of a "
      "union is the union of the h^(i)",
      "none", [](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const double beta = t.beta();
        const auto subset = random_subset(t.rng, n, precision_threshold(beta, n));
        t.inst["subset"] = subset;
        std::vector<FuzzySet> family;
        for (std::size_t i = 0, m = t.rng.between(2, 4); i < m; ++i) family.push_back(t.set(n, "A_k"));
        FuzzySet meet = family[0], join = family[0];
        for (const auto& a : family) {
          meet = intersection(meet, a);
          join = set_union(join, a);
        }
        FuzzySet g_meet = full(n), h_join = empty(n);
        for (const auto& a : family) {
          g_meet = intersection(g_meet, g_on_subset(r, t.m.overlap, a, subset));
          h_join = set_union(h_join, h_on_subset(r, t.m.grouping, t.m.negation, a, subset));
        }
        t.equal(g_on_subset(r, t.m.overlap, meet, subset), g_meet, "g over intersections");
        t.equal(h_on_subset(r, t.m.grouping, t.m.negation, join, subset), h_join, "h over unions");
        return t.done();
      });

  add("lemma4.1-monotone", "A within B implies g_A within g_B and h_A within h_B", "none", [](Trial& t) {
    const std::size_t n = t.size(64);
    const FuzzyRelation r = t.keep("R", t.any_relation(n));
    const FuzzySet a = t.set(n);
    const FuzzySet b = t.superset(a);
    const double beta = t.beta();
    t.subset(t.g(r, a, beta), t.g(r, b, beta), "g monotone");
    t.subset(t.h(r, a, beta), t.h(r, b, beta), "h monotone");
    return t.done();
  });

  add("lemma4.2-extremes", "g_X = X and h_{empty} = empty", "O has identity 1, G has identity 0", [](Trial& t) {
    if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
    const std::size_t n = t.size(64);
    const FuzzyRelation r = t.keep("R", t.any_relation(n));
    const double beta = t.beta();
    t.equal(t.g(r, full(n), beta), full(n), "g_X = X");
    t.equal(t.h(r, empty(n), beta), empty(n), "h_empty = empty");
    return t.done();
  });

  add("lemma4.2-constants", "alpha_X within g_{alpha_X} and h_{alpha_X} within alpha_X",
      "O has identity 1, G has identity 0", [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const double beta = t.beta();
        for (double alpha : t.alphas()) {
          const FuzzySet c = make_constant(n, alpha);
          t.subset(c, t.g(r, c, beta), "alpha within g");
          t.subset(t.h(r, c, beta), c, "h within alpha");
        }
        return t.done();
      });

  add("lemma4.2-implication-point",
      "A = I_O(y_1, alpha_X): g_A = 1 if beta <= (|X|-1)/|X|, else g_A(x) = I_O(R(x,y), alpha)",
      "O has identity 1, G has identity 0", [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const double edge = static_cast<double>(n - 1) / static_cast<double>(n);
        const double beta = t.rng.chance(0.5) ? t.beta_upto(edge) : t.beta_above(edge);
        for (double alpha : t.alphas()) {
          const std::size_t y = t.rng.between(0, n - 1);
          const FuzzySet a = implication_point(t, n, y, alpha);
          const FuzzySet g = t.g(r, a, beta);
          for (std::size_t x = 0; x < n; ++x) {
            const double expect = high_precision(beta, n) ? t.IO(r(x, y), alpha) : 1.0;
            t.same(g[x], expect, "g_A case formula");
          }
        }
        return t.done();
      });

  add("lemma4.2-fuzzy-point", "A = y_alpha: h_A = 0 if beta <= (|X|-1)/|X|, else h_A(x) = I^G(R^N(x,y), alpha)",
      "O has identity 1, G has identity 0", [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const double edge = static_cast<double>(n - 1) / static_cast<double>(n);
        const double beta = t.rng.chance(0.5) ? t.beta_upto(edge) : t.beta_above(edge);
        for (double alpha : t.alphas()) {
          const std::size_t y = t.rng.between(0, n - 1);
          const FuzzySet h = t.h(r, make_point(n, y, alpha), beta);
          for (std::size_t x = 0; x < n; ++x) {
            const double expect = high_precision(beta, n) ? t.IG(t.N(r(x, y)), alpha) : 0.0;
            t.same(h[x], expect, "h_A case formula");
          }
        }
        return t.done();
      });

  add("lemma4.3-residual-shift", "g_{I_O(alpha_X, A)} = I_O(alpha_X, g_A) and h_{I^G(alpha_X, A)} = I^G(alpha_X, h_A)",
      "O and G satisfy the exchange principle", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet g = t.g(r, a, beta), h = t.h(r, a, beta);
        for (double alpha : t.alphas()) {
          t.equal(t.g(r, t.io_with(alpha, a), beta), t.io_with(alpha, g), "g of I_O(alpha,A)");
          t.equal(t.h(r, t.ig_with(alpha, a), beta), t.ig_with(alpha, h), "h of I^G(alpha,A)");
        }
        return t.done();
      });

  add("lemma4.3-overlap-shift", "O(alpha_X, g_A) within g_{O(alpha_X, A)} and h_{G(alpha_X, A)} within G(alpha_X, h_A)",
      "O and G satisfy the exchange principle", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet g = t.g(r, a, beta), h = t.h(r, a, beta);
        for (double alpha : t.alphas()) {
          t.subset(t.o_with(alpha, g), t.g(r, t.o_with(alpha, a), beta), "O(alpha,g_A) within g");
          t.subset(t.h(r, t.g_with(alpha, a), beta), t.g_with(alpha, h), "h within G(alpha,h_A)");
        }
        return t.done();
      });

  // General relations ------------------------------------------------------------------

  add("prop4.1-monotone", "A within B implies lower(A) within lower(B) and upper(A) within upper(B)", "none",
      [](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const FuzzySet b = t.superset(a);
        const double beta = t.beta();
        t.subset(t.lower(r, a, beta), t.lower(r, b, beta), "lower monotone");
        t.subset(t.upper(r, a, beta), t.upper(r, b, beta), "upper monotone");
        return t.done();
      });

  add("prop4.1-precision-union",
      "beta > 0.5: lower(A) u lower(B) within lower^{2beta-1}(A u B), upper^{2beta-1}(A n B) within upper(A) n "
      "upper(B)",
      "beta > 0.5", [](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n), b = t.set(n, "B");
        const double beta = t.beta_above(0.5);
        const double b2 = 2.0 * beta - 1.0;
        t.subset(set_union(t.lower(r, a, beta), t.lower(r, b, beta)), t.lower(r, set_union(a, b), b2), "lower union");
        t.subset(t.upper(r, intersection(a, b), b2), intersection(t.upper(r, a, beta), t.upper(r, b, beta)),
                 "upper intersection");
        return t.done();
      });

  add("prop4.2-constant-bounds",
      "O(alpha, max_x R(x,z)) <= lower(alpha_X)(z) and upper(alpha_X)(z) <= G(alpha, min_x R^N(x,z))",
      "O has identity 1, G has identity 0", [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const double beta = t.beta();
        for (double alpha : t.alphas()) {
          const FuzzySet c = make_constant(n, alpha);
          const FuzzySet lo = t.lower(r, c, beta), up = t.upper(r, c, beta);
          for (std::size_t z = 0; z < n; ++z) {
            double rn = 1.0;
            for (std::size_t x = 0; x < n; ++x) rn = std::min(rn, t.N(r(x, z)));
            t.leq(t.O(alpha, column_max(r, z)), lo[z], "lower bound");
            t.leq(up[z], t.G(alpha, rn), "upper bound");
          }
        }
        return t.done();
      });

  add("prop4.2-crisp-support",
      "crisp nonempty Y, beta = |Y|/|X|: lower(Y)(z) >= max_x R(x,z) and upper(Y^c)(z) <= min_x R^N(x,z)",
      "O has identity 1, G has identity 0; Y nonempty", [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const auto members = random_subset(t.rng, n, 1);
        const FuzzySet y = indicator(n, members);
        t.inst["Y"] = members;
        const double beta = static_cast<double>(members.size()) / static_cast<double>(n);
        const FuzzySet lo = t.lower(r, y, beta);
        const FuzzySet up = t.upper(r, complement(y, standard_negation()), beta);
        for (std::size_t z = 0; z < n; ++z) {
          double rn = 1.0;
          for (std::size_t x = 0; x < n; ++x) rn = std::min(rn, t.N(r(x, z)));
          t.leq(column_max(r, z), lo[z], "lower(Y) support");
          t.leq(up[z], rn, "upper(Y^c) support");
        }
        return t.done();
      });

  add("prop4.2-implication-point",
      "A = I_O(y_1, alpha_X): lower(A)(z) = max_x R(x,z) if beta <= (|X|-1)/|X|, else max_x O(R(x,z), "
      "I_O(R(x,y), alpha))",
      "O has identity 1, G has identity 0", [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const double edge = static_cast<double>(n - 1) / static_cast<double>(n);
        const double beta = t.rng.chance(0.5) ? t.beta_upto(edge) : t.beta_above(edge);
        for (double alpha : t.alphas()) {
          const std::size_t y = t.rng.between(0, n - 1);
          const FuzzySet lo = t.lower(r, implication_point(t, n, y, alpha), beta);
          for (std::size_t z = 0; z < n; ++z) {
            double expect = 0.0;
            for (std::size_t x = 0; x < n; ++x)
              expect = std::max(expect, high_precision(beta, n) ? t.O(r(x, z), t.IO(r(x, y), alpha)) : r(x, z));
            t.same(lo[z], expect, "lower case formula");
          }
        }
        return t.done();
      });

  add("prop4.2-fuzzy-point",
      "A = y_alpha: upper(A)(z) = min_x R^N(x,z) if beta <= (|X|-1)/|X|, else min_x G(R^N(x,z), I^G(R^N(x,y), "
      "alpha))",
      "O has identity 1, G has identity 0", [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const double edge = static_cast<double>(n - 1) / static_cast<double>(n);
        const double beta = t.rng.chance(0.5) ? t.beta_upto(edge) : t.beta_above(edge);
        for (double alpha : t.alphas()) {
          const std::size_t y = t.rng.between(0, n - 1);
          const FuzzySet up = t.upper(r, make_point(n, y, alpha), beta);
          for (std::size_t z = 0; z < n; ++z) {
            double expect = 1.0;
            for (std::size_t x = 0; x < n; ++x) {
              const double rn = t.N(r(x, z));
              expect = std::min(expect, high_precision(beta, n) ? t.G(rn, t.IG(t.N(r(x, y)), alpha)) : rn);
            }
            t.same(up[z], expect, "upper case formula");
          }
        }
        return t.done();
      });

  add("prop4.3-residual-containment",
      "lower(I_O(alpha_X, A)) within I_O(alpha_X, lower(A)) and I^G(alpha_X, upper(A)) within upper(I^G(alpha_X, "
      "A)); if the first holds with equality at A = empty for all alpha then lower(empty) = empty, dually for "
      "upper(X)",
      "O and G satisfy the exchange principle", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet lo = t.lower(r, a, beta), up = t.upper(r, a, beta);
        bool fix_empty = true, fix_full = true;
        for (double alpha : t.alphas()) {
          t.subset(t.lower(r, t.io_with(alpha, a), beta), t.io_with(alpha, lo), "lower residual containment");
          t.subset(t.ig_with(alpha, up), t.upper(r, t.ig_with(alpha, a), beta), "upper residual containment");
          const FuzzySet ie = t.io_with(alpha, empty(n));
          const FuzzySet gf = t.ig_with(alpha, full(n));
          fix_empty = fix_empty && t.is_equal(t.lower(r, ie, beta), ie);
          fix_full = fix_full && t.is_equal(t.upper(r, gf, beta), gf);
        }
        if (fix_empty) t.truth(t.is_equal(t.lower(r, empty(n), beta), empty(n)), "lower(empty) = empty");
        if (fix_full) t.truth(t.is_equal(t.upper(r, full(n), beta), full(n)), "upper(X) = X");
        return t.done();
      });

  add("prop4.3-overlap-containment",
      "O(alpha_X, lower(A)) within lower(O(alpha_X, A)) and upper(G(alpha_X, A)) within G(alpha_X, upper(A))",
      "O and G satisfy the exchange principle", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.any_relation(n));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet lo = t.lower(r, a, beta), up = t.upper(r, a, beta);
        for (double alpha : t.alphas()) {
          t.subset(t.o_with(alpha, lo), t.lower(r, t.o_with(alpha, a), beta), "lower overlap containment");
          t.subset(t.upper(r, t.g_with(alpha, a), beta), t.g_with(alpha, up), "upper overlap containment");
        }
        return t.done();
      });

  // Special relations ---------------------------------------------------------------------

  add("prop4.4-serial-equivalence",
      "for beta <= (|X|-1)/|X| the nine statements agree: R^-1 serial; lower(X) = X; upper(empty) = empty; alpha_X "
      "within lower(alpha_X); upper(alpha_X) within alpha_X; lower^{|Y|/|X|}(Y) = X; upper^{|Y|/|X|}(Y^c) = "
      "empty; lower(I_O(y_1, alpha_X)) = X; upper(y_alpha) = empty",
      "O has identity 1, G has identity 0, N involutive", [](Trial& t) {
        if (!(t.traits.o_identity && t.traits.g_identity && t.traits.involutive)) return Trial::unmet();
        const std::size_t n = t.size(64);
        FuzzyRelation r = t.base_relation(n);
        const bool make_serial = t.rng.chance(0.5);
        for (std::size_t z = 0; z < n; ++z) {
          if (make_serial) {
            r.set(t.rng.between(0, n - 1), z, 1.0);
          } else if (z == 0 || t.rng.chance(0.3)) {
            for (std::size_t x = 0; x < n; ++x) r.set(x, z, 0.9 * r(x, z));
          }
        }
        t.keep("R", r);
        const double beta = t.beta_upto(static_cast<double>(n - 1) / static_cast<double>(n));
        const FuzzySet X = full(n), E = empty(n);

        bool s[9];
        s[0] = true;
        for (std::size_t z = 0; z < n; ++z) s[0] = s[0] && column_max(r, z) == 1.0;
        s[1] = t.is_equal(t.lower(r, X, beta), X);
        s[2] = t.is_equal(t.upper(r, E, beta), E);
        s[3] = s[4] = s[7] = s[8] = true;
        for (double alpha : t.alphas()) {
          const FuzzySet c = make_constant(n, alpha);
          s[3] = s[3] && t.within(c, t.lower(r, c, beta));
          s[4] = s[4] && t.within(t.upper(r, c, beta), c);
          for (std::size_t y = 0; y < n; ++y) {
            s[7] = s[7] && t.is_equal(t.lower(r, implication_point(t, n, y, alpha), beta), X);
            s[8] = s[8] && t.is_equal(t.upper(r, make_point(n, y, alpha), beta), E);
          }
        }
        s[5] = s[6] = true;
        for (int i = 0; i < 4; ++i) {
          const auto members = i == 0 ? random_subset(t.rng, n, n) : random_subset(t.rng, n, 1);
          const FuzzySet y = indicator(n, members);
          const double by = static_cast<double>(members.size()) / static_cast<double>(n);
          s[5] = s[5] && t.is_equal(t.lower(r, y, by), X);
          s[6] = s[6] && t.is_equal(t.upper(r, complement(y, standard_negation()), by), E);
        }
        t.inst["statements"] = std::vector<bool>(s, s + 9);
        for (int i = 1; i < 9; ++i) t.truth(s[i] == s[0], "statements disagree");
        return t.done();
      });

  add("prop4.5-reflexive-g-below-lower", "reflexive R: g_A within lower(A) and upper(A) within h_A",
      "R reflexive; O(1,x) >= x and G(0,x) <= x", [](Trial& t) {
        if (!t.traits.unit_dominates) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", Trial::reflexive(t.base_relation(n)));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        t.subset(t.g(r, a, beta), t.lower(r, a, beta), "g_A within lower(A)");
        t.subset(t.upper(r, a, beta), t.h(r, a, beta), "upper(A) within h_A");
        return t.done();
      });

  add("prop4.5-reflexive-fixpoints",
      "reflexive R: lower(X) = X, upper(empty) = empty, alpha_X within lower(alpha_X), upper(alpha_X) within "
      "alpha_X, lower^{|Y|/|X|}(Y) = X, upper^{|Y|/|X|}(Y^c) = empty, and for beta <= (|X|-1)/|X| "
      "lower(I_O(y_1, alpha_X)) = X, upper(y_alpha) = empty",
      "R reflexive", [](Trial& t) {
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", Trial::reflexive(t.base_relation(n)));
        const double beta = t.beta_upto(static_cast<double>(n - 1) / static_cast<double>(n));
        const FuzzySet X = full(n), E = empty(n);
        t.equal(t.lower(r, X, beta), X, "lower(X) = X");
        t.equal(t.upper(r, E, beta), E, "upper(empty) = empty");
        for (double alpha : t.alphas()) {
          const FuzzySet c = make_constant(n, alpha);
          t.subset(c, t.lower(r, c, beta), "alpha within lower(alpha)");
          t.subset(t.upper(r, c, beta), c, "upper(alpha) within alpha");
          const std::size_t y = t.rng.between(0, n - 1);
          t.equal(t.lower(r, implication_point(t, n, y, alpha), beta), X, "lower(I_O(y_1,alpha)) = X");
          t.equal(t.upper(r, make_point(n, y, alpha), beta), E, "upper(y_alpha) = empty");
        }
        const auto members = random_subset(t.rng, n, 1);
        const FuzzySet y = indicator(n, members);
        const double by = static_cast<double>(members.size()) / static_cast<double>(n);
        t.equal(t.lower(r, y, by), X, "lower(Y) = X");
        t.equal(t.upper(r, complement(y, standard_negation()), by), E, "upper(Y^c) = empty");
        return t.done();
      });

  add("prop4.6-symmetric-inverse", "symmetric R: lower and upper agree for R and R^-1", "R symmetric", [](Trial& t) {
    const std::size_t n = t.size(64);
    const FuzzyRelation r = t.keep("R", Trial::symmetric(t.base_relation(n)));
    const FuzzyRelation ri = inverse(r);
    const FuzzySet a = t.set(n);
    const double beta = t.beta();
    t.equal(t.lower(r, a, beta), t.lower(ri, a, beta), "lower");
    t.equal(t.upper(r, a, beta), t.upper(ri, a, beta), "upper");
    return t.done();
  });

  add("prop4.7-transitive-lower-below-g",
      "O-transitive R, alpha = min_x R(x,x): lower(A) within g_A and O(alpha_X, lower(A)) within lower(lower(A))",
      "R O-transitive; O and G satisfy the exchange principle", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.transitive(t.base_relation(n)));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const double alpha = diagonal_min(r);
        const FuzzySet lo = t.lower(r, a, beta);
        t.subset(lo, t.g(r, a, beta), "lower(A) within g_A");
        t.subset(t.o_with(alpha, lo), t.lower(r, lo, beta), "O(alpha,lower(A)) within lower(lower(A))");
        return t.done();
      });

  add("prop4.7-transitive-upper-above-h",
      "O-transitive R, alpha = min_x R(x,x): h_A within upper(A) and upper(upper(A)) within G(N(alpha)_X, "
      "upper(A))",
      "R O-transitive; O and G satisfy the exchange principle and are dual w.r.t. N", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange && t.traits.dual)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.transitive(t.base_relation(n)));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const double alpha = diagonal_min(r);
        const FuzzySet up = t.upper(r, a, beta);
        t.subset(t.h(r, a, beta), up, "h_A within upper(A)");
        t.subset(t.upper(r, up, beta), t.g_with(t.N(alpha), up), "upper(upper(A)) within G(N(alpha),upper(A))");
        return t.done();
      });

  add("prop4.8-preorder-lower-equals-g", "O-preorder R: lower(A) = g_A and lower(A) within lower(lower(A))",
      "R O-preorder; O and G satisfy the exchange principle", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.preorder(t.base_relation(n)));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet lo = t.lower(r, a, beta);
        t.equal(lo, t.g(r, a, beta), "lower(A) = g_A");
        t.subset(lo, t.lower(r, lo, beta), "lower(A) within lower(lower(A))");
        return t.done();
      });

  add("prop4.8-preorder-upper-equals-h", "O-preorder R: upper(A) = h_A and upper(upper(A)) within upper(A)",
      "R O-preorder; O and G satisfy the exchange principle and are dual w.r.t. N", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange && t.traits.dual)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.preorder(t.base_relation(n)));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet up = t.upper(r, a, beta);
        t.equal(up, t.h(r, a, beta), "upper(A) = h_A");
        t.subset(t.upper(r, up, beta), up, "upper(upper(A)) within upper(A)");
        return t.done();
      });

  auto preorder_dual = [](const Trial& t) {
    return t.traits.o_exchange && t.traits.g_exchange && t.traits.dual && t.traits.involutive;
  };

  add("prop4.9-preorder-residual-commute",
      "O-preorder R: lower(I_O(alpha_X, A)) = I_O(alpha_X, lower(A)) and upper(I^G(alpha_X, A)) = I^G(alpha_X, "
      "upper(A))",
      "R O-preorder; O and G satisfy the exchange principle and are dual w.r.t. N", [preorder_dual](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.preorder(t.base_relation(n)));
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet lo = t.lower(r, a, beta), up = t.upper(r, a, beta);
        for (double alpha : t.alphas()) {
          t.equal(t.lower(r, t.io_with(alpha, a), beta), t.io_with(alpha, lo), "lower commutes with I_O");
          t.equal(t.upper(r, t.ig_with(alpha, a), beta), t.ig_with(alpha, up), "upper commutes with I^G");
        }
        return t.done();
      });

  add("prop4.9-empty-iff",
      "O-preorder R: lower(empty) = empty iff lower(I_O(alpha_X, empty)) = I_O(alpha_X, empty) for all alpha",
      "R O-preorder; O and G satisfy the exchange principle and are dual w.r.t. N", [preorder_dual](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.preorder(t.raw(n, t.rng.uniform(0.3, 0.9))));
        const double beta = t.beta();
        const FuzzySet E = empty(n);
        bool rhs = true;
        for (double alpha : t.alphas()) {
          const FuzzySet ie = t.io_with(alpha, E);
          rhs = rhs && t.is_equal(t.lower(r, ie, beta), ie);
        }
        const bool lhs = t.is_equal(t.lower(r, E, beta), E);
        t.inst["lhs"] = lhs;
        t.truth(lhs == rhs, "biconditional");
        return t.done();
      });

  add("prop4.9-full-iff", "O-preorder R: upper(X) = X iff upper(I^G(alpha_X, X)) = I^G(alpha_X, X) for all alpha",
      "R O-preorder; O and G satisfy the exchange principle and are dual w.r.t. N", [preorder_dual](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.preorder(t.raw(n, t.rng.uniform(0.3, 0.9))));
        const double beta = t.beta();
        const FuzzySet X = full(n);
        bool rhs = true;
        for (double alpha : t.alphas()) {
          const FuzzySet gx = t.ig_with(alpha, X);
          rhs = rhs && t.is_equal(t.upper(r, gx, beta), gx);
        }
        const bool lhs = t.is_equal(t.upper(r, X, beta), X);
        t.inst["lhs"] = lhs;
        t.truth(lhs == rhs, "biconditional");
        return t.done();
      });

  add("prop4.9-precision-meet-join",
      "O-preorder R, beta > 0.5: lower(A) n lower(B) within lower^{2beta-1}(A n B), upper^{2beta-1}(A n B) within "
      "upper(A) n upper(B), lower(A) u lower(B) within lower^{2beta-1}(A u B), upper^{2beta-1}(A u B) within "
      "upper(A) u upper(B)",
      "R O-preorder; O and G satisfy the exchange principle and are dual w.r.t. N; beta > 0.5",
      [preorder_dual](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzyRelation r = t.keep("R", t.preorder(t.base_relation(n)));
        const FuzzySet a = t.set(n), b = t.set(n, "B");
        const double beta = t.beta_above(0.5);
        const double b2 = 2.0 * beta - 1.0;
        const FuzzySet la = t.lower(r, a, beta), lb = t.lower(r, b, beta);
        const FuzzySet ua = t.upper(r, a, beta), ub = t.upper(r, b, beta);
        t.subset(intersection(la, lb), t.lower(r, intersection(a, b), b2), "lower meet");
        t.subset(t.upper(r, intersection(a, b), b2), intersection(ua, ub), "upper meet");
        t.subset(set_union(la, lb), t.lower(r, set_union(a, b), b2), "lower join");
        t.subset(t.upper(r, set_union(a, b), b2), set_union(ua, ub), "upper join");
        return t.done();
      });

  add("prop4.10-lower-composition",
      "R(x,y) <= I_O(A(x),A(y)), alpha = min_x R(x,x): lower(O(alpha_X, A)) within lower(lower(A))",
      "O and G satisfy the exchange principle; R bounded by I_O(A(x),A(y))", [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzySet a = t.set(n);
        std::vector<double> m(n * n);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            m[x * n + y] = (t.rng.chance(0.3) ? 1.0 : t.rng.uniform()) * t.IO(a[x], a[y]);
        const FuzzyRelation r = t.keep("R", FuzzyRelation(n, std::move(m)));
        const double beta = t.beta();
        const double alpha = diagonal_min(r);
        t.subset(t.lower(r, t.o_with(alpha, a), beta), t.lower(r, t.lower(r, a, beta), beta), "composition");
        return t.done();
      });

  add("prop4.10-upper-composition",
      "R^N(x,y) >= I^G(A(x),A(y)), alpha = min_x R(x,x): upper(upper(A)) within upper(G(N(alpha)_X, A))",
      "O and G satisfy the exchange principle and are dual w.r.t. N; R^N bounded below by I^G(A(x),A(y))",
      [](Trial& t) {
        if (!(t.traits.o_exchange && t.traits.g_exchange && t.traits.dual)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const FuzzySet a = t.set(n);
        std::vector<double> m(n * n);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            m[x * n + y] = (t.rng.chance(0.3) ? 1.0 : t.rng.uniform()) * t.N(t.IG(a[x], a[y]));
        const FuzzyRelation r = t.keep("R", FuzzyRelation(n, std::move(m)));
        const double beta = t.beta();
        const double alpha = diagonal_min(r);
        t.subset(t.upper(r, t.upper(r, a, beta), beta), t.upper(r, t.g_with(t.N(alpha), a), beta), "composition");
        return t.done();
      });

  add("lemma4.4-subrelation", "O-preorders S within R: lower_R(A) within lower_S(A) and upper_S(A) within upper_R(A)",
      "S, R O-preorders, S within R; O and G satisfy the exchange principle and are dual w.r.t. N",
      [preorder_dual](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const auto [s, r] = t.nested(n, true);
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        t.subset(t.lower(r, a, beta), t.lower(s, a, beta), "lower_R within lower_S");
        t.subset(t.upper(s, a, beta), t.upper(r, a, beta), "upper_S within upper_R");
        return t.done();
      });

  add("prop4.11-transitive-admissible",
      "O-transitive R: where lower_S(A)(x) = lower_R(A)(x), {y : O(R(x,y), lower_S(A)(x)) <= A(y)} is admissible; "
      "dually for upper",
      "R O-transitive; O and G satisfy the exchange principle and are dual w.r.t. N; some x with agreement",
      [preorder_dual](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const auto [s, r] = t.nested(n, false);
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const auto k = precision_threshold(beta, n);
        const FuzzySet ls = t.lower(s, a, beta), lr = t.lower(r, a, beta);
        const FuzzySet us = t.upper(s, a, beta), ur = t.upper(r, a, beta);
        std::size_t agreeing = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (std::abs(ls[x] - lr[x]) <= 1e-12) {
            ++agreeing;
            t.truth(lower_admissible(r, t.m.overlap.base(), a, x, ls[x]) >= k, "lower admissible");
          }
          if (std::abs(us[x] - ur[x]) <= 1e-12) {
            ++agreeing;
            t.truth(upper_admissible(r, t.m.grouping.base(), t.m.negation, a, x, us[x]) >= k, "upper admissible");
          }
        }
        if (agreeing == 0) return Trial::unmet();
        return t.done();
      });

  auto all_admissible = [](const Trial& t, const FuzzyRelation& r, const FuzzySet& a, double beta,
                           const FuzzySet& ls, const FuzzySet& us) {
    const auto k = precision_threshold(beta, r.size());
    bool lo = true, up = true;
    for (std::size_t x = 0; x < r.size(); ++x) {
      lo = lo && lower_admissible(r, t.m.overlap.base(), a, x, ls[x]) >= k;
      up = up && upper_admissible(r, t.m.grouping.base(), t.m.negation, a, x, us[x]) >= k;
    }
    return std::make_pair(lo, up);
  };

  add("prop4.12-admissible-implies-equal",
      "O-preorders S within R: if {y : O(R(x,y), lower_S(A)(x)) <= A(y)} is admissible for all x then lower_S(A) = "
      "lower_R(A); dually for upper",
      "S, R O-preorders, S within R; O and G satisfy the exchange principle and are dual w.r.t. N",
      [preorder_dual, all_admissible](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const auto [s, r] = t.nested(n, true);
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet ls = t.lower(s, a, beta), us = t.upper(s, a, beta);
        const auto [lo_adm, up_adm] = all_admissible(t, r, a, beta, ls, us);
        if (lo_adm) t.equal(ls, t.lower(r, a, beta), "lower_S = lower_R");
        if (up_adm) t.equal(us, t.upper(r, a, beta), "upper_S = upper_R");
        return t.done();
      });

  add("prop4.13-biconditional",
      "O-preorders S within R: lower_S(A) = lower_R(A) iff {y : O(R(x,y), lower_S(A)(x)) <= A(y)} is admissible "
      "for all x; dually for upper",
      "S, R O-preorders, S within R; O and G satisfy the exchange principle and are dual w.r.t. N",
      [preorder_dual, all_admissible](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const auto [s, r] = t.nested(n, true);
        const FuzzySet a = t.set(n);
        const double beta = t.beta();
        const FuzzySet ls = t.lower(s, a, beta), us = t.upper(s, a, beta);
        const auto [lo_adm, up_adm] = all_admissible(t, r, a, beta, ls, us);
        const bool lo_eq = t.is_equal(ls, t.lower(r, a, beta));
        const bool up_eq = t.is_equal(us, t.upper(r, a, beta));
        t.inst["lower_equal"] = lo_eq;
        t.inst["upper_equal"] = up_eq;
        t.truth(lo_eq == lo_adm, "lower biconditional");
        t.truth(up_eq == up_adm, "upper biconditional");
        return t.done();
      });

  add("prop4.14-crisp-count",
      "crisp A, O-preorders S within R: lower_S(A) = lower_R(A) iff |{y not in A : O(R(x,y), lower_S(A)(x)) = "
      "0}| >= beta|X| - |A| for all x; upper_S(A) = upper_R(A) iff |{y in A : G(R^N(x,y), upper_S(A)(x)) = 1}| >= "
      "|A| + (beta-1)|X| for all x",
      "S, R O-preorders, S within R; O and G satisfy the exchange principle and are dual w.r.t. N; A crisp",
      [preorder_dual](Trial& t) {
        if (!preorder_dual(t)) return Trial::unmet();
        const std::size_t n = t.size(64);
        const auto [s, r] = t.nested(n, true);
        const FuzzySet a = t.crisp_set(n);
        const double beta = t.beta();
        const auto k = precision_threshold(beta, n);
        std::size_t card = 0;
        for (std::size_t y = 0; y < n; ++y) card += a[y] == 1.0 ? 1 : 0;
        const FuzzySet ls = t.lower(s, a, beta), us = t.upper(s, a, beta);
        bool lo_count = true, up_count = true;
        for (std::size_t x = 0; x < n; ++x) {
          std::size_t outside = 0, inside = 0;
          for (std::size_t y = 0; y < n; ++y) {
            if (a[y] == 0.0 && t.O(r(x, y), ls[x]) == 0.0) ++outside;
            if (a[y] == 1.0 && t.G(t.N(r(x, y)), us[x]) == 1.0) ++inside;
          }
          // Integer forms of the two cardinality bounds.
          lo_count = lo_count && outside + card >= k;
          up_count = up_count && inside + (n - card) >= k;
        }
        const bool lo_eq = t.is_equal(ls, t.lower(r, a, beta));
        const bool up_eq = t.is_equal(us, t.upper(r, a, beta));
        t.inst["lower_equal"] = lo_eq;
        t.inst["upper_equal"] = up_eq;
        t.truth(lo_eq == lo_count, "lower count criterion");
        t.truth(up_eq == up_count, "upper count criterion");
        return t.done();
      });

  return laws;
}

const std::vector<LawEntry>& catalogue() {
  static const std::vector<LawEntry> laws = build_catalogue();
  return laws;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

// Traits and pools -------------------------------------------------------------------

json ConnectiveTraits::to_json() const {
  return json{{"o_exchange", o_exchange}, {"g_exchange", g_exchange}, {"o_identity", o_identity},
              {"g_identity", g_identity}, {"unit_dominates", unit_dominates}, {"dual", dual},
              {"involutive", involutive}};
}

LawConfig LawConfig::make(std::string label, Model model) {
  const AxiomReport o = check_axioms(model.overlap.base());
  const AxiomReport g = check_axioms(model.grouping.base());
  ConnectiveTraits t;
  t.o_exchange = o.passed("exchange");
  t.g_exchange = g.passed("exchange");
  t.o_identity = o.has_identity;
  t.g_identity = g.has_identity;
  t.unit_dominates = o.unit_dominates && g.unit_dominates;
  t.involutive = is_involutive(model.negation);
  t.dual = t.involutive && are_dual(model.overlap.base(), model.grouping.base(), model.negation);
  return LawConfig{std::move(label), std::move(model), t};
}

std::vector<LawConfig> default_law_pool() {
  const Connective n = standard_negation();
  auto cfg = [&](std::string label, Connective o, Connective g) {
    return LawConfig::make(std::move(label), Model{ResidualPair(std::move(o)), ResidualPair(std::move(g)), n});
  };
  std::vector<LawConfig> pool;
  pool.push_back(cfg("product/probabilistic_sum", product(), probabilistic_sum()));
  pool.push_back(cfg("minimum/maximum", minimum(), maximum()));
  pool.push_back(cfg("O_p(2)/G_p(2)", overlap_power(2.0), grouping_power(2.0)));
  pool.push_back(cfg("O_DB/dual", overlap_db(), dual_of(overlap_db(), n)));
  pool.push_back(cfg("product/maximum", product(), maximum()));
  return pool;
}

std::vector<LawConfig> law_pool_from_json(const json& j) {
  if (!j.is_object() || !j.contains("configs") || !j["configs"].is_array() || j["configs"].empty())
    throw ValidationError("law config needs a non-empty \"configs\" array");
  std::vector<LawConfig> pool;
  for (std::size_t i = 0; i < j["configs"].size(); ++i) {
    const json& c = j["configs"][i];
    const std::string where = "configs[" + std::to_string(i) + "]";
    if (!c.is_object() || !c.contains("overlap") || !c.contains("grouping"))
      throw ValidationError(where + " needs \"overlap\" and \"grouping\"");
    Connective o = connective_from_json(c["overlap"], ConnectiveKind::overlap);
    Connective g = connective_from_json(c["grouping"], ConnectiveKind::grouping);
    Connective n = c.contains("negation") ? connective_from_json(c["negation"], ConnectiveKind::negation)
                                          : standard_negation();
    std::string label = c.value("label", o.name() + "/" + g.name());
    pool.push_back(LawConfig::make(std::move(label), Model{ResidualPair(o), ResidualPair(g), n}));
  }
  return pool;
}

// Catalogue access ----------------------------------------------------------------------

const std::vector<LawInfo>& law_catalogue() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> v;
    for (const auto& e : catalogue()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const LawInfo& find_law(const std::string& id) {
  const auto& all = law_catalogue();
  for (const auto& info : all)
    if (info.id == id) return info;
  const LawInfo* best = &all.front();
  std::size_t best_d = std::numeric_limits<std::size_t>::max();
  for (const auto& info : all) {
    const std::size_t d = edit_distance(id, info.id);
    if (d < best_d) {
      best_d = d;
      best = &info;
    }
  }
  throw RegistryError("unknown law '" + id + "'; did you mean '" + best->id + "'?");
}

std::string_view to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    default: return "inconclusive";
  }
}

json LawReport::to_json() const {
  return json{{"id", id},
              {"statement", statement},
              {"status", to_string(status)},
              {"trials", trials},
              {"premise_satisfied", premise_satisfied},
              {"premise_violated", premise_violated},
              {"passes", passes},
              {"failures", failures},
              {"max_violation", max_violation},
              {"counterexamples", counterexamples}};
}

// Runner ------------------------------------------------------------------------------

std::vector<LawReport> run_laws(const LawRunOptions& options) {
  if (options.trials < 1) throw ValidationError("trials must be at least 1");
  if (options.max_universe < 2) throw ValidationError("max universe must be at least 2");
  if (options.max_universe > 64) throw ValidationError("max universe must be at most 64");

  const std::vector<LawConfig> pool = options.pool.empty() ? default_law_pool() : options.pool;
  std::vector<const LawEntry*> selected;
  if (options.ids.empty()) {
    for (const auto& e : catalogue()) selected.push_back(&e);
  } else {
    for (const auto& id : options.ids) {
      const LawInfo& info = find_law(id);
      for (const auto& e : catalogue())
        if (e.info.id == info.id) selected.push_back(&e);
    }
  }

  const std::size_t trials = static_cast<std::size_t>(options.trials);
  const std::size_t total = selected.size() * trials;
  std::vector<Outcome> outcomes(total);
  std::vector<std::string> errors(total);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i) {
    const std::size_t li = static_cast<std::size_t>(i) / trials;
    const std::size_t ti = static_cast<std::size_t>(i) % trials;
    const LawEntry& law = *selected[li];
    SampleRng rng(options.seed, stable_hash(law.info.id), ti);
    const LawConfig& cfg = pool[rng.between(0, pool.size() - 1)];
    std::size_t max_n = options.max_universe;
    if (law.info.uses_oracle) max_n = std::min<std::size_t>(max_n, 10);
    Trial trial(cfg, rng, max_n, options.tolerance);
    try {
      outcomes[static_cast<std::size_t>(i)] = law.run(trial);
    } catch (const std::exception& e) {
      json inst = trial.inst;
      inst["error"] = e.what();
      outcomes[static_cast<std::size_t>(i)] = Outcome{true, 1.0, std::move(inst)};
    }
  }

  std::vector<LawReport> reports;
  for (std::size_t li = 0; li < selected.size(); ++li) {
    LawReport rep;
    rep.id = selected[li]->info.id;
    rep.statement = selected[li]->info.statement;
    rep.trials = options.trials;
    for (std::size_t ti = 0; ti < trials; ++ti) {
      Outcome& o = outcomes[li * trials + ti];
      if (!o.met) {
        ++rep.premise_violated;
        continue;
      }
      ++rep.premise_satisfied;
      rep.max_violation = std::max(rep.max_violation, o.violation);
      if (o.violation <= options.tolerance) {
        ++rep.passes;
      } else {
        ++rep.failures;
        if (rep.counterexamples.size() < 3) {
          o.instance["trial"] = ti;
          o.instance["violation"] = o.violation;
          rep.counterexamples.push_back(std::move(o.instance));
        }
      }
    }
    rep.status = rep.failures > 0 ? LawStatus::fail
                 : rep.premise_satisfied == 0 ? LawStatus::inconclusive
                                              : LawStatus::pass;
    reports.push_back(std::move(rep));
  }
  return reports;
}

// Fixed instances ------------------------------------------------------------------------

std::string_view to_string(Order o) {
  switch (o) {
    case Order::lower_below_upper: return "lower_below_upper";
    case Order::upper_below_lower: return "upper_below_lower";
    case Order::equal: return "equal";
    default: return "incomparable";
  }
}

json ComparabilityReport::to_json() const {
  return json{{"lower", set_json(lower)},     {"upper", set_json(upper)},         {"lower_below_A", lower_below_a},
              {"A_below_upper", a_below_upper}, {"comparable", comparable}, {"order", to_string(order)}};
}

ComparabilityReport check_comparability(const FuzzyRelation& r, const Model& model, const FuzzySet& a, double beta,
                                        double slack) {
  ComparabilityReport rep;
  const auto res = approximate(r, model, a, beta);
  rep.lower = res.lower;
  rep.upper = res.upper;
  rep.lower_below_a = is_subset(rep.lower, a, slack);
  rep.a_below_upper = is_subset(a, rep.upper, slack);
  const bool lu = is_subset(rep.lower, rep.upper, slack);
  const bool ul = is_subset(rep.upper, rep.lower, slack);
  rep.comparable = lu;
  rep.order = lu && ul ? Order::equal : lu ? Order::lower_below_upper : ul ? Order::upper_below_lower
                                                                          : Order::incomparable;
  return rep;
}

json NonAssociativeReport::to_json() const {
  return json{{"lower_A", set_json(lower_a)},
              {"lower_of_overlap", set_json(lower_of_overlap)},
              {"overlap_of_lower", set_json(overlap_of_lower)},
              {"residual_of_lower", set_json(residual_of_lower)},
              {"lower_of_residual", set_json(lower_of_residual)},
              {"overlap_containment_strict", overlap_containment_strict},
              {"residual_containment_strict", residual_containment_strict}};
}

NonAssociativeReport non_associative_counterexample() {
  const FuzzyRelation r({{0.0, 0.4, 0.4}, {0.2, 0.0, 0.2}, {0.2, 0.2, 0.0}});
  const FuzzySet a({0.2, 0.4, 0.0});
  const ResidualPair o(overlap_db());
  const double alpha = 1.0, beta = 0.5;
  NonAssociativeReport rep;
  rep.lower_a = lower(r, o, a, beta);
  rep.lower_of_overlap = lower(r, o, pointwise(o.base(), alpha, a), beta);
  rep.overlap_of_lower = pointwise(o.base(), alpha, rep.lower_a);
  rep.residual_of_lower = pointwise(o, alpha, rep.lower_a);
  rep.lower_of_residual = lower(r, o, pointwise(o, alpha, a), beta);
  auto strict = [](const FuzzySet& small, const FuzzySet& big) {
    return is_subset(small, big) && subset_violation(big, small) > 1e-12;
  };
  rep.overlap_containment_strict = strict(rep.lower_of_overlap, rep.overlap_of_lower);
  rep.residual_containment_strict = strict(rep.residual_of_lower, rep.lower_of_residual);
  return rep;
}

}  // namespace gvpfrs
