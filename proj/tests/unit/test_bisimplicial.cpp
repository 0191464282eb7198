#include "catsieve/bisimplicial.hpp"
#include "catsieve/catalog.hpp"
#include "catsieve/homology.hpp"
#include "diagrams.hpp"
#include "doctest.h"

using namespace catsieve;
using testkit::share;

namespace {

constexpr std::size_t N = 3;

SSetPtr sphere0() { return share(coproduct({share(point_sset(N)), share(point_sset(N))})); }

}  // namespace

TEST_CASE("replacement of a discrete diagram is the disjoint union") {
  auto shape = poset({"a", "b"}, {});
  auto circle = share(two_cell_circle(N));
  auto pt = share(point_sset(N));
  auto d = testkit::diagram(shape, {{"a", circle}, {"b", pt}});
  auto rep = srep(d);
  rep.object->validate();
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m) CHECK(rep.object->size(n, m) == circle->size(m) + 1);
  CHECK(homology(*hocolim(d).space).summary() == "Z^2,Z,0");
}

TEST_CASE("chain counts and the last face over the walking arrow") {
  auto shape = walking_arrow();
  auto circle = share(two_cell_circle(N));
  auto pt = share(point_sset(N));
  auto d = testkit::diagram(shape, {{"0", circle}, {"1", pt}});
  auto rep = srep(d);
  rep.object->validate();
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m) {
      std::size_t expected = 0;
      for (int c = 0; c < static_cast<int>(rep.chains.size(n)); ++c)
        expected += d.values[rep.chains.last(n, c)]->size(m);
      CHECK(rep.object->size(n, m) == expected);
    }
  // Over the chain 1 <- 0 the last face moves the value into D(1).
  const int f = rep.chains.find(1, {shape->morphism("f")});
  REQUIRE(f >= 0);
  const auto& cell = rep.object->cells[1][0];
  for (int x = 0; x < static_cast<int>(circle->size(0)); ++x) {
    const int k = rep.index(1, 0, f, x);
    auto [chain, value] = rep.locate(0, 0, cell.hfaces[1][k]);
    CHECK(rep.chains.chains[0][chain][0] == shape->object("1"));
    CHECK(value == 0);
    auto [chain0, value0] = rep.locate(0, 0, cell.hfaces[0][k]);
    CHECK(rep.chains.chains[0][chain0][0] == shape->object("0"));
    CHECK(value0 == x);
  }
}

TEST_CASE("terminal object determines the homotopy colimit") {
  auto shape = walking_arrow();
  auto d = testkit::diagram(shape, {{"0", share(two_cell_circle(N))}, {"1", share(point_sset(N))}});
  CHECK(homology(*hocolim(d).space).summary() == "Z,0,0");
  auto e = testkit::diagram(shape, {{"0", share(point_sset(N))}, {"1", share(boundary_simplex(2, N))}},
                            {{"f", testkit::constant_map(share(point_sset(N)), share(boundary_simplex(2, N)), 0)}});
  CHECK(homology(*hocolim(e).space).summary() == "Z,Z,0");
  auto sq = commutative_square();
  auto circle = share(two_cell_circle(N));
  auto g = testkit::diagram(sq, {{"a", circle}, {"b", circle}, {"c", circle}, {"d", circle}});
  CHECK(homology_equal(*hocolim(g).space, *circle).equal);
}

TEST_CASE("span of two points gives a circle") {
  auto shape = poset({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
  auto pt = share(point_sset(N));
  auto d = testkit::diagram(shape, {{"a", pt}, {"b", pt}, {"c", sphere0()}});
  auto h = hocolim(d);
  h.space->validate();
  CHECK(homology(*h.space).summary() == "Z,Z,0");
}

TEST_CASE("diagonal of a horizontally constant object") {
  auto x = two_cell_circle(N);
  auto k = horizontally_constant(x);
  k.validate();
  auto d = diag(k);
  for (std::size_t n = 0; n <= N; ++n) {
    CHECK(d.levels[n].faces == x.levels[n].faces);
    CHECK(d.levels[n].degeneracies == x.levels[n].degeneracies);
  }
  auto cyl = product_with_interval(k);
  cyl.validate();
  auto y = odot(point_sset(N), standard_simplex(1, N));
  y.validate();
}

TEST_CASE("relabelling along functors") {
  auto shape = walking_arrow();
  auto d = testkit::diagram(shape, {{"0", share(two_cell_circle(N))}, {"1", share(point_sset(N))}});
  auto rep = srep(d);
  auto id = alpha_sharp(identity_functor(shape), rep, rep);
  id.validate();
  CHECK(id == identity_map(rep.object));

  auto pt = point_category();
  FinFunctor pick(pt, shape, {shape->object("0")}, {shape->identity(shape->object("0"))});
  auto sub = srep(precompose(d, pick));
  auto inc = alpha_sharp(pick, sub, rep);
  inc.validate();
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m) {
      auto v = inc.levels[n][m];
      std::sort(v.begin(), v.end());
      CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    }
}

TEST_CASE("induced maps between homotopy colimits are functorial") {
  auto shape = walking_arrow();
  auto d = testkit::diagram(shape, {{"0", share(two_cell_circle(N))}, {"1", share(point_sset(N))}});
  auto h = hocolim(d);
  std::vector<SimplicialMap> ids;
  for (const auto& v : d.values) ids.push_back(identity_map(v));
  SSetDiagramMorphism m{identity_functor(shape), ids};
  validate(m, d, d);
  CHECK(induced_hocolim_map(m, h, h) == identity_map(h.space));

  std::vector<SimplicialMap> collapsing = ids;
  collapsing[0] = testkit::constant_map(d.values[0], d.values[0], 0);
  CHECK_NOTHROW(validate(SSetDiagramMorphism{identity_functor(shape), collapsing}, d, d));

  auto pt = share(point_sset(N));
  auto circle = share(two_cell_circle(N));
  auto e = testkit::diagram(shape, {{"0", pt}, {"1", circle}}, {{"f", testkit::constant_map(pt, circle, 0)}});
  SSetDiagramMorphism shifted{identity_functor(shape), {identity_map(pt), testkit::constant_map(circle, circle, 1)}};
  try {
    validate(shifted, e, e);
    FAIL("expected a failure");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotNatural);
  }
}

TEST_CASE("diagrams over categories with loops are rejected") {
  auto shape = idempotent_monoid();
  auto pt = share(point_sset(N));
  SSetDiagram d{shape, {pt}, {}};
  for (MorId f = 0; f < static_cast<MorId>(shape->morphism_count()); ++f) d.maps.push_back(identity_map(pt));
  try {
    srep(d);
    FAIL("expected a failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundedChains);
  }
}
