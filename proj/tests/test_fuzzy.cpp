#include <algorithm>
#include <vector>

#include "doctest.h"
#include "gvpfrs/errors.hpp"
#include "gvpfrs/fuzzy.hpp"
#include "gvpfrs/random.hpp"

using namespace gvpfrs;

namespace {

FuzzyRelation random_relation(std::size_t n, SampleRng& rng, double sparsity = 0.0) {
  std::vector<double> m(n * n);
  for (double& v : m) v = rng.chance(sparsity) ? 0.0 : rng.uniform();
  return FuzzyRelation(n, std::move(m));
}

// Direct triple scan, independent of check_relation.
bool transitive(const FuzzyRelation& r, const Connective& o, double eps) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      for (std::size_t z = 0; z < r.size(); ++z)
        if (o(r(x, y), r(y, z)) > r(x, z) + eps) return false;
  return true;
}

const FuzzyRelation similarity({{1, 0.6, 1}, {0.6, 1, 0.6}, {1, 0.6, 1}});
const FuzzyRelation nontransitive({{0, 0.2, 0.8}, {1, 0, 1}, {0, 0.1, 0}});

}  // namespace

TEST_CASE("universe and sets validate their input") {
  CHECK_THROWS_AS(Universe({"a", "a"}), DomainError);
  CHECK_THROWS_AS(FuzzySet({0.2, 1.1}), DomainError);
  CHECK_THROWS_AS(FuzzyRelation(2, {0.1, 0.2, 0.3}), DomainError);
  CHECK_THROWS_AS(FuzzyRelation({{0.1, 0.2}, {0.3}}), DomainError);
  const Universe u({"x1", "x2", "x3"});
  CHECK(u.index_of("x3") == 2);
  CHECK_THROWS_AS(u.index_of("x9"), LookupError);
  CHECK(Universe::indexed(2).label(1) == "x2");
}

TEST_CASE("constants, points, complements, inverse") {
  const Universe u({"x1", "x2", "x3"});
  const FuzzySet p = make_point(u, "x2", 0.7);
  CHECK(p[0] == 0.0);
  CHECK(p[1] == 0.7);
  CHECK(p[2] == 0.0);
  CHECK_THROWS_AS(make_point(u, "x4", 0.7), LookupError);
  CHECK(make_constant(u, 0.3)[2] == 0.3);

  const FuzzySet c = complement(FuzzySet({0.8, 0.1, 0.6}), standard_negation());
  CHECK(c[0] == doctest::Approx(0.2));
  CHECK(c[1] == doctest::Approx(0.9));
  CHECK(c[2] == doctest::Approx(0.4));

  const FuzzyRelation inv = inverse(similarity);
  CHECK(std::equal(inv.values().begin(), inv.values().end(), similarity.values().begin()));
  CHECK(inverse(nontransitive)(0, 1) == 1.0);
}

TEST_CASE("set operations and containment") {
  const FuzzySet a({0.2, 0.5, 0.9}), b({0.3, 0.4, 1.0});
  CHECK(intersection(a, b)[1] == 0.4);
  CHECK(set_union(a, b)[1] == 0.5);
  CHECK_FALSE(is_subset(a, b));
  CHECK(subset_violation(a, b) == doctest::Approx(0.1));
  CHECK(is_subset(intersection(a, b), a));
  CHECK(is_subset(FuzzySet({0.5}), FuzzySet({0.5 - 1e-13})));
  CHECK(pointwise(product(), 0.5, a)[2] == doctest::Approx(0.45));
  CHECK(pointwise(ResidualPair(product()), 0.5, a)[0] == doctest::Approx(0.4));
  CHECK_THROWS_AS(intersection(a, FuzzySet({0.1})), DomainError);
}

TEST_CASE("relation properties") {
  const auto rep = check_relation(similarity, product());
  CHECK(rep.serial);
  CHECK(rep.reflexive);
  CHECK(rep.symmetric);
  CHECK(rep.o_transitive);
  CHECK(rep.preorder);
  CHECK(rep.similarity);

  const auto bad = check_relation(nontransitive, product());
  CHECK_FALSE(bad.o_transitive);
  REQUIRE(bad.transitive_witness.has_value());
  CHECK(*bad.transitive_witness == std::array<std::size_t, 3>{0, 1, 0});
  CHECK(bad.transitive_violation == doctest::Approx(0.2));
  CHECK_FALSE(bad.reflexive);
  CHECK(bad.reflexive_witness == std::optional<std::size_t>(0));
  CHECK_FALSE(bad.serial);
  CHECK(bad.serial_witness == std::optional<std::size_t>(0));

  const auto id = check_relation(FuzzyRelation::identity(4), overlap_db());
  CHECK(id.serial);
  CHECK(id.reflexive);
  CHECK(id.symmetric);
  CHECK(id.o_transitive);
}

TEST_CASE("crisp similarity is an O-similarity for every built-in overlap") {
  const FuzzyRelation r({{1, 0, 1}, {0, 1, 0}, {1, 0, 1}});
  for (const auto& o : {minimum(), product(), overlap_power(2.0), overlap_db()}) {
    CAPTURE(o.name());
    CHECK(check_relation(r, o, {0.0, true}).similarity);
  }
  CHECK(is_crisp_transitive(r));
  CHECK(r.is_crisp());
}

TEST_CASE("symmetry verdict agrees on R and its inverse") {
  SampleRng rng(11, 0, 0);
  for (int i = 0; i < 50; ++i) {
    FuzzyRelation r = random_relation(1 + rng.between(0, 6), rng);
    if (i % 2 == 0)
      for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < x; ++y) r.set(x, y, r(y, x));
    CHECK(check_relation(r, product()).symmetric == check_relation(inverse(r), product()).symmetric);
  }
}

TEST_CASE("granules") {
  const Granule g = o_granule(similarity, product(), 0, 0.6);
  CHECK(g.values[0] == doctest::Approx(0.6));
  CHECK(g.values[1] == doctest::Approx(0.36));
  CHECK(g.values[2] == doctest::Approx(0.6));
  const Granule z = o_granule(similarity, overlap_db(), 1, 0.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(z.values[i] == 0.0);

  // max(1 - R(x1,y), 0.2) by hand.
  const Granule h = g_granule(nontransitive, maximum(), standard_negation(), 0, 0.2);
  CHECK(h.values[0] == doctest::Approx(1.0));
  CHECK(h.values[1] == doctest::Approx(0.8));
  CHECK(h.values[2] == doctest::Approx(0.2));
  CHECK_THROWS_AS(g_granule(nontransitive, maximum(), power_negation(2.0), 0, 0.2), PremiseError);
}

TEST_CASE("granule properties") {
  SampleRng rng(12, 0, 0);
  const Connective n = standard_negation();
  for (int i = 0; i < 40; ++i) {
    const std::size_t size = 2 + rng.between(0, 5);
    const FuzzyRelation r = random_relation(size, rng);
    const std::size_t x = rng.between(0, size - 1);
    double l1 = rng.uniform(), l2 = rng.uniform();
    if (l1 > l2) std::swap(l1, l2);
    for (const auto& o : {product(), overlap_db(), overlap_power(2.0)})
      CHECK(is_subset(o_granule(r, o, x, l1).values, o_granule(r, o, x, l2).values, 0.0));
    const Connective g = probabilistic_sum();
    const Granule gg = g_granule(r, g, n, x, l1);
    for (std::size_t y = 0; y < size; ++y) CHECK(gg.values[y] == gn_implication(g, n, r(x, y), l1));
  }
}

TEST_CASE("O-transitive closure") {
  FuzzyRelation r(3, std::vector<double>(9, 0.0));
  r.set(0, 1, 0.5);
  r.set(1, 2, 0.4);
  const FuzzyRelation c = o_transitive_closure(r, product());
  CHECK(c(0, 2) == doctest::Approx(0.2));
  CHECK(c(0, 1) == 0.5);
  CHECK(c(2, 0) == 0.0);

  const FuzzyRelation s = o_transitive_closure(similarity, product());
  CHECK(max_abs_difference(FuzzySet(std::vector<double>(s.values().begin(), s.values().end())),
                           FuzzySet(std::vector<double>(similarity.values().begin(), similarity.values().end()))) ==
        0.0);
}

TEST_CASE("closure contains R, is O-transitive and idempotent") {
  SampleRng rng(13, 0, 0);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + rng.between(0, 6);
    const FuzzyRelation r = random_relation(n, rng, 0.5);
    for (const auto& o : {product(), minimum(), overlap_power(2.0)}) {
      CAPTURE(o.name());
      const FuzzyRelation c = o_transitive_closure(r, o, {}, Execution::serial);
      for (std::size_t k = 0; k < n * n; ++k) CHECK(c.values()[k] >= r.values()[k]);
      CHECK(transitive(c, o, 1e-9));
      CHECK(check_relation(c, o).o_transitive);
      const FuzzyRelation cc = o_transitive_closure(c, o, {}, Execution::serial);
      double d = 0.0;
      for (std::size_t k = 0; k < n * n; ++k) d = std::max(d, std::abs(cc.values()[k] - c.values()[k]));
      CHECK(d <= 1e-12);
      const FuzzyRelation p = o_transitive_closure(r, o, {}, Execution::parallel);
      CHECK(std::equal(p.values().begin(), p.values().end(), c.values().begin()));
    }
  }
}

TEST_CASE("closure under a non-t-norm overlap stops at the round cap") {
  // O_DB(1, r) > r, so repeated composition keeps raising entries.
  SampleRng rng(14, 0, 0);
  const FuzzyRelation r = random_relation(5, rng);
  const FuzzyRelation c = o_transitive_closure(r, overlap_db(), {1e-15, 64});
  for (std::size_t k = 0; k < 25; ++k) CHECK(c.values()[k] >= r.values()[k]);
}
