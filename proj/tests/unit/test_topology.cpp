#include "catsieve/catalog.hpp"
#include "catsieve/topology.hpp"
#include "doctest.h"

using namespace catsieve;

TEST_CASE("sieve enumeration counts") {
  CHECK(enumerate_sieves(point_category(), 0).size() == 2);
  auto arrow = walking_arrow();
  CHECK(enumerate_sieves(arrow, arrow->object("1")).size() == 3);
  // Downsets of {a<d, b<d, c<d, id_d} ordered by factorization: {}, {a},
  // {a,b}, {a,c}, {a,b,c}, maximal.
  auto sq = commutative_square();
  CHECK(enumerate_sieves(sq, sq->object("d")).size() == 6);
  Guards tight;
  tight.arrows_into_object = 1;
  CHECK_THROWS_AS(enumerate_sieves(sq, sq->object("d"), tight), Error);
}

TEST_CASE("canonical topology satisfies the axioms") {
  for (const auto& [name, c] : standard_catalog()) {
    INFO(name);
    auto j = canonical_topology(c);
    auto rep = verify_topology_axioms(j);
    CHECK(rep.holds());
    CHECK(rep.witnesses.empty());
  }
}

TEST_CASE("maximal topology satisfies the axioms") {
  for (const auto& [name, c] : standard_catalog()) CHECK(verify_topology_axioms(maximal_topology(c)).holds());
}

TEST_CASE("discrete category has only maximal covers") {
  auto c = discrete_category(2);
  auto j = canonical_topology(c);
  for (ObjId x = 0; x < 2; ++x) {
    REQUIRE(j.covers[x].size() == 1);
    CHECK(j.covers[x][0] == maximal_sieve(c, x));
  }
}

TEST_CASE("missing pullback is a stability failure") {
  auto c = commutative_square();
  auto j = maximal_topology(c);
  ObjId d = c->object("d");
  j.covers[d].push_back(generate_sieve(c, d, {c->morphism("b<d")}));
  auto rep = verify_topology_axioms(j);
  CHECK(rep.maximality);
  CHECK_FALSE(rep.stability);
  bool found = false;
  for (const auto& w : rep.witnesses)
    if (w.axiom == "stability" && w.arrow == "c<d") found = true;
  CHECK(found);
}

TEST_CASE("missing cover is a transitivity failure") {
  auto c = cospan();
  auto j = maximal_topology(c);
  ObjId top = c->object("c");
  auto both = generate_sieve(c, top, {c->morphism("a<c"), c->morphism("b<c")});
  // Adding the two-leg cover keeps transitivity intact.
  j.covers[top].push_back(both);
  auto rep = verify_topology_axioms(j);
  CHECK(rep.maximality);
  CHECK(rep.transitivity);
  j.covers[top].pop_back();
  j.covers[top].push_back(generate_sieve(c, top, {}));
  // The empty sieve covers c, and every sieve is locally covered by it.
  CHECK_FALSE(verify_topology_axioms(j).transitivity);
}

TEST_CASE("representable presheaves") {
  auto arrow = walking_arrow();
  auto r0 = representable_presheaf(arrow, arrow->object("0"));
  CHECK(r0.sets[arrow->object("1")].empty());
  CHECK(r0.sets[arrow->object("0")].size() == 1);
  CHECK_NOTHROW(r0.validate());
  auto idem = idempotent_monoid();
  auto r = representable_presheaf(idem, 0);
  CHECK(r.sets[0].size() == 2);
  CHECK_NOTHROW(r.validate());
  CHECK_THROWS_AS(representable_presheaf(arrow, 7), Error);
}

TEST_CASE("sheaf equalizer basics") {
  auto c = coequalizer_category();
  auto p = representable_presheaf(c, c->object("B"));
  ObjId q = c->object("Q");
  auto max = sheaf_equalizer(p, maximal_sieve(c, q));
  CHECK(is_bijection(max.comparison));
  auto none = sheaf_equalizer(p, empty_sieve(c, q));
  CHECK(none.equalizer.size() == 1);
}

TEST_CASE("constant presheaf is not a sheaf for a disconnecting cover") {
  auto c = cospan();
  auto j = maximal_topology(c);
  ObjId top = c->object("c");
  j.covers[top].push_back(generate_sieve(c, top, {c->morphism("a<c"), c->morphism("b<c")}));
  auto two = constant_presheaf(c, FinSet::range(2));
  CHECK_NOTHROW(two.validate());
  CHECK_FALSE(is_sheaf(two, j).holds);
  CHECK(is_sheaf(two, maximal_topology(c)).holds);
}

TEST_CASE("colim via representables agrees with the direct decision") {
  for (const auto& [name, c] : standard_catalog())
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
      for (const auto& s : enumerate_sieves(c, x)) {
        INFO(name);
        CHECK(colim_sieve_via_representables(s).holds == is_colim_sieve(s, Guards{}).holds);
      }
}

TEST_CASE("canonical topology is the largest with representable sheaves") {
  for (const auto& [name, c] : standard_catalog()) {
    INFO(name);
    auto rep = check_largest_subcanonical(canonical_topology(c));
    CHECK(rep.holds());
  }
}
