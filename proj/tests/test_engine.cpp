#include <string>
#include <vector>

#include "doctest.h"
#include "gvpfrs/engine.hpp"
#include "gvpfrs/errors.hpp"
#include "gvpfrs/random.hpp"
#include "oracle.hpp"

using namespace gvpfrs;

namespace {

oracle::Vec vec(const FuzzySet& a) { return {a.values().begin(), a.values().end()}; }

void check_close(const FuzzySet& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

oracle::Matrix rows(const FuzzyRelation& r) { return r.rows(); }

FuzzyRelation random_relation(std::size_t n, SampleRng& rng) {
  std::vector<double> m(n * n);
  for (double& v : m) {
    const double u = rng.uniform();
    v = u < 0.1 ? 0.0 : u < 0.2 ? 1.0 : rng.uniform();
  }
  return FuzzyRelation(n, std::move(m));
}

FuzzySet random_set(std::size_t n, SampleRng& rng) {
  std::vector<double> v(n);
  for (double& x : v) {
    const double u = rng.uniform();
    x = u < 0.1 ? 0.0 : u < 0.2 ? 1.0 : rng.uniform();
  }
  return FuzzySet(std::move(v));
}

const Connective N = standard_negation();

}  // namespace

TEST_CASE("precision threshold") {
  CHECK(precision_threshold(0.5, 3) == 2);
  CHECK(precision_threshold(1.0, 7) == 7);
  CHECK(precision_threshold(0.0, 5) == 1);
  CHECK(precision_threshold(2.0 / 3.0, 3) == 2);
  CHECK(precision_threshold(0.3, 10) == 3);
  CHECK(precision_threshold(0.7, 10) == 7);
  CHECK_THROWS_AS(precision_threshold(1.5, 3), DomainError);
  CHECK_THROWS_AS(PrecisionFamily::make(0.5, 0), DomainError);
  const auto f = PrecisionFamily::make(0.5, 4);
  CHECK(f.contains(2));
  CHECK_FALSE(f.contains(1));
  for (std::size_t n = 1; n <= 40; ++n)
    for (int b = 0; b <= 100; ++b) CHECK(precision_threshold(b / 100.0, n) == oracle::threshold(b / 100.0, n));
}

TEST_CASE("similarity instance under product and probabilistic sum") {
  const FuzzyRelation r({{1, 0.6, 1}, {0.6, 1, 0.6}, {1, 0.6, 1}});
  const Model m{ResidualPair(product()), ResidualPair(probabilistic_sum()), N};
  const auto res = approximate(r, m, FuzzySet({0.8, 0.1, 0.6}), 0.5);
  check_close(res.g, {0.6, 1, 0.6}, 1e-12);
  check_close(res.lower, {0.6, 1, 0.6}, 1e-12);
  // h by hand: second smallest of I^G(N(R(x,y)), A(y)) per row.
  check_close(res.h, {0.6, 1.0 / 3, 0.6}, 1e-12);
  check_close(res.upper, {0.6, 1.0 / 3, 0.6}, 1e-12);
  check_close(upper_via_duality(r, m.overlap, m.grouping.base(), N, FuzzySet({0.8, 0.1, 0.6}), 0.5),
              {0.6, 1.0 / 3, 0.6}, 1e-12);
  const auto bf = bruteforce_approximate(r, m, FuzzySet({0.8, 0.1, 0.6}), 0.5);
  check_close(bf.upper, {0.6, 1.0 / 3, 0.6}, 1e-12);
  // (0.4, 0, 0.4) is the complement of lower(A), not upper(A).
  check_close(complement(res.lower, N), {0.4, 0, 0.4}, 1e-12);
  CHECK(res.method == Method::selection);
}

TEST_CASE("non-transitive instance under product and maximum") {
  const FuzzyRelation r({{0, 0.2, 0.8}, {1, 0, 1}, {0, 0.1, 0}});
  const Model m{ResidualPair(product()), ResidualPair(maximum()), N};
  const auto res = approximate(r, m, FuzzySet({0.2, 0, 0.6}), 0.5);
  check_close(res.g, {0.75, 0.6, 1}, 1e-12);
  check_close(res.lower, {0.6, 0.15, 0.6}, 1e-12);
  check_close(res.upper, {0.2, 0.8, 0.2}, 1e-12);
  CHECK_THROWS_AS(upper_via_duality(r, m.overlap, maximum(), N, FuzzySet({0.2, 0, 0.6}), 0.5), PremiseError);
}

TEST_CASE("crisp similarity under O_DB") {
  const FuzzyRelation r({{1, 0, 1}, {0, 1, 0}, {1, 0, 1}});
  const ResidualPair o(overlap_db());
  const FuzzySet a({0.2, 0, 0.5});
  check_close(g_vector(r, o, a, 0.5), {1.0 / 3, 1, 1.0 / 3}, 1e-12);
  const FuzzySet lo = lower(r, o, a, 0.5);
  check_close(lo, {0.5, 1, 0.5}, 1e-12);
  check_close(pointwise(o.base(), 1.0, lo), {2.0 / 3, 1, 2.0 / 3}, 1e-12);
  check_close(lower(r, o, lo, 0.5), {0.5, 1, 0.5}, 1e-12);
}

TEST_CASE("level vectors at full precision reduce to the plain meet and join") {
  SampleRng rng(21, 0, 0);
  const ResidualPair o(product()), g(probabilistic_sum());
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng.between(0, 9);
    const FuzzyRelation r = random_relation(n, rng);
    const FuzzySet a = random_set(n, rng);
    const FuzzySet gv = g_vector(r, o, a, 1.0), hv = h_vector(r, g, N, a, 1.0);
    for (std::size_t x = 0; x < n; ++x) {
      double lo = 1.0, hi = 0.0;
      for (std::size_t y = 0; y < n; ++y) {
        lo = std::min(lo, oracle::io_product(r(x, y), a[y]));
        hi = std::max(hi, oracle::ig_psum(1.0 - r(x, y), a[y]));
      }
      CHECK(gv[x] == doctest::Approx(lo).epsilon(1e-12));
      CHECK(hv[x] == doctest::Approx(hi).epsilon(1e-12));
    }
  }
}

TEST_CASE("h of the empty set vanishes for groupings with identity 0") {
  SampleRng rng(22, 0, 0);
  for (const auto& gr : {maximum(), probabilistic_sum()}) {
    const FuzzyRelation r = random_relation(6, rng);
    const FuzzySet h = h_vector(r, ResidualPair(gr), N, make_constant(6, 0.0), 0.5);
    for (std::size_t x = 0; x < 6; ++x) CHECK(h[x] == 0.0);
  }
}

TEST_CASE("selection equals the independent oracles") {
  struct Pair {
    Connective o;
    oracle::Binary io;
  };
  const std::vector<Pair> pairs{{product(), oracle::io_product},
                                {minimum(), oracle::io_minimum},
                                {overlap_power(2.0), [](double x, double y) { return oracle::io_power(2.0, x, y); }},
                                {overlap_db(), oracle::io_db}};
  SampleRng rng(23, 0, 0);
  const double betas[] = {0.0, 0.3, 0.5, 0.8, 1.0};
  for (int i = 0; i < 200; ++i) {
    const auto& p = pairs[i % pairs.size()];
    const std::size_t n = 2 + rng.between(0, 6);
    const FuzzyRelation r = random_relation(n, rng);
    const FuzzySet a = random_set(n, rng);
    const double beta = betas[rng.between(0, 4)];
    const ResidualPair io(p.o), ig(dual_of(p.o, N));
    CAPTURE(p.o.name());
    CAPTURE(n);
    CAPTURE(beta);
    const auto ob = [&](double x, double y) { return p.o(x, y); };
    const auto gb = [&](double x, double y) { return ig.base()(x, y); };
    const auto igf = [&](double x, double y) { return ig(x, y); };
    const auto nf = [&](double x) { return N(x); };

    const oracle::Vec g_enum = oracle::g_enumerate(rows(r), p.io, vec(a), beta);
    const oracle::Vec g_scan = oracle::g_scan(rows(r), ob, p.io, vec(a), beta);
    const oracle::Vec h_enum = oracle::h_enumerate(rows(r), igf, nf, vec(a), beta);
    const auto res = approximate(r, Model{io, ig, N}, a, beta);
    CHECK(oracle::max_diff(vec(res.g), g_enum) <= 1e-9);
    CHECK(oracle::max_diff(vec(res.g), g_scan) <= 1e-9);
    CHECK(oracle::max_diff(vec(res.h), h_enum) <= 1e-9);
    CHECK(oracle::max_diff(vec(res.lower), oracle::lower_from(rows(r), ob, g_enum)) <= 1e-9);
    CHECK(oracle::max_diff(vec(res.upper), oracle::upper_from(rows(r), gb, nf, h_enum)) <= 1e-9);

    const auto bf = bruteforce_approximate(r, Model{io, ig, N}, a, beta);
    CHECK(bf.method == Method::bruteforce);
    CHECK(max_abs_difference(bf.lower, res.lower) <= 1e-9);
    CHECK(max_abs_difference(bf.upper, res.upper) <= 1e-9);
    CHECK(max_abs_difference(bf.g, res.g) <= 1e-9);
    CHECK(max_abs_difference(bf.h, res.h) <= 1e-9);
  }
}

TEST_CASE("witness sets") {
  SampleRng rng(24, 0, 0);
  const ResidualPair o(overlap_db());
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng.between(0, 10);
    const FuzzyRelation r = random_relation(n, rng);
    const FuzzySet a = random_set(n, rng);
    const double beta = rng.uniform();
    const auto res = lower_approx(r, o, a, beta);
    CHECK(witnesses_valid(r, o.base(), a, res.g, res.witnesses_lower, beta));
    const std::size_t k = precision_threshold(beta, n);
    for (const auto& w : res.witnesses_lower) {
      CHECK(w.size() == k);
      CHECK(std::is_sorted(w.begin(), w.end()));
    }
  }
  // Ties resolve to the smallest indices.
  const FuzzyRelation flat(4, std::vector<double>(16, 0.5));
  const auto res = lower_approx(flat, ResidualPair(product()), make_constant(4, 0.25), 0.5);
  for (const auto& w : res.witnesses_lower) CHECK(w == std::vector<std::size_t>{0, 1});
  // A broken witness list is rejected.
  Witnesses bad = res.witnesses_lower;
  bad[0] = {0};
  CHECK_FALSE(witnesses_valid(flat, product(), make_constant(4, 0.25), res.g, bad, 0.5));
}

TEST_CASE("full precision keeps lower below A below upper") {
  SampleRng rng(25, 0, 0);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng.between(0, 6);
    FuzzyRelation r = random_relation(n, rng);
    for (std::size_t x = 0; x < n; ++x) r.set(x, x, 1.0);
    const FuzzySet a = random_set(n, rng);
    const ResidualPair o(product());
    CHECK(is_subset(bruteforce_lower(r, o, a, 1.0), a));
    CHECK(is_subset(a, upper(r, ResidualPair(probabilistic_sum()), N, a, 1.0)));
  }
}

TEST_CASE("oracle refuses large universes") {
  SampleRng rng(26, 0, 0);
  const FuzzyRelation r = random_relation(20, rng);
  const FuzzySet a = random_set(20, rng);
  const ResidualPair o(product());
  CHECK_THROWS_AS(bruteforce_lower(r, o, a, 0.5), RefusalError);
  CHECK_THROWS_AS(bruteforce_lower(r, o, a, 0.5, 21), RefusalError);
  try {
    bruteforce_lower(r, o, a, 0.5, 16);
  } catch (const RefusalError& e) {
    CHECK(std::string(e.what()).find("16") != std::string::npos);
  }
  CHECK(bruteforce_lower(random_relation(12, rng), o, random_set(12, rng), 0.5).size() == 12);
}

TEST_CASE("input guards") {
  const FuzzyRelation r = FuzzyRelation::identity(3);
  const ResidualPair o(product());
  CHECK_THROWS_AS(lower(r, o, FuzzySet({0.1, 0.2}), 0.5), DomainError);
  CHECK_THROWS_AS(lower(r, o, FuzzySet({0.1, 0.2, 0.3}), -0.1), DomainError);
  CHECK_THROWS_AS(lower(r, ResidualPair(maximum()), FuzzySet({0.1, 0.2, 0.3}), 0.5), PremiseError);
  CHECK_THROWS_AS(upper(r, ResidualPair(maximum()), power_negation(2.0), FuzzySet({0.1, 0.2, 0.3}), 0.5),
                  PremiseError);
}

TEST_CASE("crisp formulas") {
  const FuzzyRelation id = FuzzyRelation::identity(3);
  const FuzzySet a({1, 1, 0});
  check_close(crisp_lower(id, a, 2.0 / 3.0), {1, 1, 1}, 0.0);
  check_close(bruteforce_lower(id, ResidualPair(overlap_db()), a, 2.0 / 3.0), {1, 1, 1}, 1e-12);
  CHECK_THROWS_AS(crisp_lower(FuzzyRelation(1, std::vector<double>{0.5}), FuzzySet({1}), 0.5), DomainError);
  CHECK_THROWS_AS(crisp_upper(id, FuzzySet({0.5, 1, 0}), 0.5), DomainError);

  SampleRng rng(27, 0, 0);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.between(0, 9);
    std::vector<double> m(n * n), v(n);
    for (double& x : m) x = rng.chance(0.4) ? 1.0 : 0.0;
    for (double& x : v) x = rng.chance(0.5) ? 1.0 : 0.0;
    const FuzzyRelation r(n, std::move(m));
    const FuzzySet s(std::move(v));
    const double beta = rng.uniform();
    for (const auto& o : {product(), overlap_db(), overlap_power(2.0), minimum()}) {
      const ResidualPair ro(o), rg(dual_of(o, N));
      CHECK(max_abs_difference(lower(r, ro, s, beta), crisp_lower(r, s, beta)) == 0.0);
      CHECK(max_abs_difference(upper(r, rg, N, s, beta), crisp_upper(r, s, beta)) == 0.0);
    }
  }
}

TEST_CASE("parallel and serial execution agree bit for bit") {
  SampleRng rng(28, 0, 0);
  const Model m{ResidualPair(overlap_db()), ResidualPair(dual_of(overlap_db(), N)), N};
  for (std::size_t n : {1, 2, 17, 64, 129}) {
    const FuzzyRelation r = random_relation(n, rng);
    const FuzzySet a = random_set(n, rng);
    const auto p = approximate(r, m, a, 0.6, Execution::parallel);
    const auto s = approximate(r, m, a, 0.6, Execution::serial);
    CHECK(std::equal(p.lower.values().begin(), p.lower.values().end(), s.lower.values().begin()));
    CHECK(std::equal(p.upper.values().begin(), p.upper.values().end(), s.upper.values().begin()));
    CHECK(p.witnesses_lower == s.witnesses_lower);
    CHECK(p.witnesses_upper == s.witnesses_upper);
  }
}
