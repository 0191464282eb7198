#include <cmath>
#include <set>

#include "catsieve/catalog.hpp"
#include "catsieve/finset.hpp"
#include "doctest.h"

using namespace catsieve;

namespace {

long long surjection_count(int m, int n) {
  // Σ (-1)^k C(n,k) (n-k)^m
  long long total = 0;
  long long binom = 1;
  for (int k = 0; k <= n; ++k) {
    long long term = binom;
    for (int i = 0; i < m; ++i) term *= (n - k);
    total += (k % 2 ? -term : term);
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

// Number of maps Z -> Y constant on the classes of the equivalence "same
// image under f", found by brute force.
std::size_t count_factoring(const SetFunction& q, const FinSet& y) {
  std::size_t n = 0;
  for_each_function(q.dom(), y, [&](const SetFunction& h) {
    bool ok = true;
    for (std::size_t a = 0; a < q.dom().size() && ok; ++a)
      for (std::size_t b = 0; b < q.dom().size() && ok; ++b)
        if (q(a) == q(b) && h(a) != h(b)) ok = false;
    n += ok;
    return true;
  });
  return n;
}

}  // namespace

TEST_CASE("function enumeration has n^m elements in order") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto fs = all_functions(FinSet::range(m), FinSet::range(n));
      CHECK(fs.size() == static_cast<std::size_t>(std::pow(n, m)));
      for (std::size_t i = 1; i < fs.size(); ++i) CHECK(fs[i - 1].map() < fs[i].map());
    }
}

TEST_CASE("surjections counted against inclusion-exclusion") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      long long epis = 0;
      for_each_function(FinSet::range(m), FinSet::range(n), [&](const SetFunction& f) {
        epis += is_epi(f);
        return true;
      });
      CHECK(epis == surjection_count(m, n));
    }
}

TEST_CASE("composition and identities") {
  auto a = FinSet::range(3), b = FinSet::range(2);
  SetFunction f(a, b, {0, 1, 1});
  SetFunction g(b, a, {2, 0});
  CHECK(compose(g, f).map() == std::vector<int>{2, 0, 0});
  CHECK(compose(identity(b), f) == f);
  CHECK_THROWS_AS(compose(f, f), Error);
}

TEST_CASE("coproduct, pullback and quotient") {
  auto cp = coproduct({FinSet::range(2), FinSet::range(3)});
  CHECK(cp.object.size() == 5);
  CHECK(cp.object.label(cp.inclusions[1](0)) == "1:0");

  auto x = FinSet::range(2);
  SetFunction f(FinSet::range(3), x, {0, 0, 1});
  SetFunction g(FinSet::range(2), x, {0, 1});
  auto pb = pullback(f, g);
  CHECK(pb.object.size() == 3);
  CHECK(compose(f, pb.first) == compose(g, pb.second));

  auto q = quotient(FinSet::range(4), {{0, 2}, {2, 3}});
  CHECK(q.object.size() == 2);
  CHECK(q.map(0) == q.map(3));
  CHECK(q.object.label(q.map(3)) == "0");
}

TEST_CASE("coequalizer satisfies its universal property") {
  auto a = FinSet::range(2), b = FinSet::range(4);
  SetFunction f(a, b, {0, 1});
  SetFunction g(a, b, {1, 2});
  auto c = coequalizer(f, g);
  CHECK(c.object.size() == 2);
  // Maps out of the coequalizer correspond to maps out of b that coequalize.
  for (std::size_t n = 0; n <= 3; ++n) {
    auto y = FinSet::range(n);
    std::size_t coequalizing = 0;
    for_each_function(b, y, [&](const SetFunction& h) {
      coequalizing += compose(h, f) == compose(h, g);
      return true;
    });
    CHECK(coequalizing == all_functions(c.object, y).size());
    CHECK(coequalizing == count_factoring(c.map, y));
  }
  CHECK_THROWS_AS(coequalizer(f, SetFunction(b, b, {0, 1, 2, 3})), Error);
}

TEST_CASE("factor through a quotient") {
  auto q = quotient(FinSet::range(3), {{0, 1}});
  SetFunction good(FinSet::range(3), FinSet::range(2), {1, 1, 0});
  SetFunction bad(FinSet::range(3), FinSet::range(2), {1, 0, 0});
  auto h = factor_through(q.map, good);
  REQUIRE(h.has_value());
  CHECK(compose(*h, q.map) == good);
  CHECK_FALSE(factor_through(q.map, bad).has_value());
}

TEST_CASE("colimit of a parallel-pair diagram is the coequalizer") {
  auto shape = parallel_pair();
  auto a = FinSet::range(2), b = FinSet::range(3);
  SetFunction f(a, b, {0, 1});
  SetFunction g(a, b, {1, 1});
  FinSetDiagram d{shape, {}, {}};
  d.objects = {a, b};
  d.morphisms.resize(shape->morphism_count(), identity(a));
  d.morphisms[shape->morphism("f")] = f;
  d.morphisms[shape->morphism("g")] = g;
  d.morphisms[shape->morphism("id_0")] = identity(a);
  d.morphisms[shape->morphism("id_1")] = identity(b);
  CHECK_NOTHROW(d.validate());
  auto c = colim_finite_diagram(d);
  CHECK(c.nadir.size() == coequalizer(f, g).object.size());
  CHECK(is_colimit_cocone(d, c));
  SetCocone wrong{b, {f, identity(b)}};
  CHECK_FALSE(is_set_cocone(d, wrong));
}

TEST_CASE("epimorphism kinds coincide with surjectivity") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for_each_function(FinSet::range(m), FinSet::range(n), [&](const SetFunction& f) {
        bool surj = is_epi(f);
        CHECK(is_effective_epi(f) == surj);
        CHECK(is_strict_epi(f, 4) == surj);
        CHECK(is_universal_effective_epi(f, 3) == surj);
        return true;
      });
  CHECK_THROWS_AS(is_strict_epi(SetFunction(FinSet::range(3), FinSet::range(1), {0, 0, 0}), 2), Error);
}

TEST_CASE("coproduct comparisons are bijections") {
  SetFunction f(FinSet::range(2), FinSet::range(1), {0, 0});
  SetFunction g(FinSet::range(3), FinSet::range(2), {0, 1, 1});
  CHECK(is_bijection(kernel_pair_comparison({f, g})));
  SetFunction d(FinSet::range(2), FinSet::range(3), {0, 2});
  SetFunction b0(FinSet::range(2), FinSet::range(3), {0, 1});
  SetFunction b1(FinSet::range(1), FinSet::range(3), {2});
  CHECK(is_bijection(coproduct_pullback_comparison({b0, b1}, d)));
  auto sum = coproduct_of_effective_epis({f, g}, 3);
  CHECK(is_epi(sum));
}
