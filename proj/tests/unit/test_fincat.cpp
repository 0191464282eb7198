#include <set>

#include "catsieve/catalog.hpp"
#include "catsieve/fincat.hpp"
#include "doctest.h"

using namespace catsieve;

namespace {

// Brute-force associativity and unit scan, kept apart from check_laws.
bool laws_hold(const FinCategory& c) {
  auto m = static_cast<MorId>(c.morphism_count());
  for (MorId f = 0; f < m; ++f) {
    if (c.compose(c.identity(c.dst(f)), f) != f || c.compose(f, c.identity(c.src(f))) != f) return false;
    for (MorId g = 0; g < m; ++g) {
      if (c.src(g) != c.dst(f)) continue;
      for (MorId h = 0; h < m; ++h)
        if (c.src(h) == c.dst(g) && c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("walking arrow has three morphisms") {
  auto c = walking_arrow();
  CHECK(c->object_count() == 2);
  CHECK(c->morphism_count() == 3);
  CHECK(laws_hold(*c));
  MorId f = c->morphism("f");
  CHECK(c->src(f) == c->object("0"));
  CHECK(c->dst(f) == c->object("1"));
}

TEST_CASE("catalog categories satisfy the category laws") {
  for (const auto& [name, c] : standard_catalog()) {
    INFO(name);
    CHECK(laws_hold(*c));
    CHECK_NOTHROW(c->check_laws());
  }
}

TEST_CASE("missing composite is rejected") {
  RawCategory raw;
  raw.objects = {"0", "1", "2"};
  raw.morphisms = {{"id_0", "0", "0"}, {"id_1", "1", "1"}, {"id_2", "2", "2"}, {"f", "0", "1"}, {"g", "1", "2"}};
  raw.identities = {{"0", "id_0"}, {"1", "id_1"}, {"2", "id_2"}};
  try {
    FinCategory::validate(raw);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingComposite);
  }
}

TEST_CASE("non-associative table is rejected") {
  // Monoid {1, a, b} with a∘a = b, a∘b = a, b∘a = b, b∘b = b fails
  // associativity at (a, a, a): a∘(a∘a) = a∘b = a but (a∘a)∘a = b∘a = b.
  RawCategory raw;
  raw.objects = {"*"};
  raw.morphisms = {{"id", "*", "*"}, {"a", "*", "*"}, {"b", "*", "*"}};
  raw.identities = {{"*", "id"}};
  raw.compose = {{{"a", "a"}, "b"}, {{"a", "b"}, "a"}, {{"b", "a"}, "b"}, {{"b", "b"}, "b"}};
  try {
    FinCategory::validate(raw);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAssociative);
  }
}

TEST_CASE("unknown names are reported") {
  auto c = walking_arrow();
  CHECK_THROWS_AS(c->object("2"), Error);
  CHECK_THROWS_AS(c->morphism("zz"), Error);
  CHECK_THROWS_AS(c->compose(c->morphism("f"), c->morphism("f")), Error);
}

TEST_CASE("hom sets of the commutative square") {
  auto c = commutative_square();
  CHECK(hom_set(*c, "a", "d").size() == 1);
  CHECK(hom_set(*c, "b", "c").empty());
  CHECK(hom_set(*c, "a", "a").size() == 1);
}

TEST_CASE("functor validation") {
  auto arrow = walking_arrow();
  auto pair = parallel_pair();
  FinFunctor to_f(arrow, pair, {pair->object("0"), pair->object("1")},
                  {pair->morphism("f"), pair->morphism("id_0"), pair->morphism("id_1")});
  CHECK(to_f(arrow->object("1")) == pair->object("1"));
  CHECK_THROWS_AS(FinFunctor(arrow, pair, {pair->object("0"), pair->object("1")},
                             {pair->morphism("f"), pair->morphism("id_1"), pair->morphism("id_1")}),
                  Error);
  CHECK(compose(identity_functor(pair), to_f) == to_f);
}

TEST_CASE("natural transformation between the two arrows of a parallel pair") {
  auto arrow = walking_arrow();
  auto pair = parallel_pair();
  MorId id0 = pair->morphism("id_0"), id1 = pair->morphism("id_1");
  FinFunctor pick_f(arrow, pair, {0, 1}, {pair->morphism("f"), id0, id1});
  FinFunctor pick_g(arrow, pair, {0, 1}, {pair->morphism("g"), id0, id1});
  CHECK_THROWS_AS(NatTrans(pick_f, pick_g, {id0, id1}), Error);
  CHECK_NOTHROW(NatTrans(pick_f, pick_f, {id0, id1}));
}

TEST_CASE("overcategory of the walking arrow at its codomain") {
  auto c = walking_arrow();
  auto s = overcategory(c, c->object("1"));
  CHECK(s.category->object_count() == 2);
  CHECK(s.category->morphism_count() == 3);
  auto t = terminal_object(*s.category);
  REQUIRE(t.has_value());
  CHECK(s.object_arrow[*t] == c->morphism("id_1"));
}

TEST_CASE("product and opposite sizes") {
  auto a = walking_arrow();
  auto p = product(a, a);
  CHECK(p.category->object_count() == 4);
  CHECK(p.category->morphism_count() == 9);
  CHECK(laws_hold(*p.category));
  auto op = opposite(*commutative_square());
  CHECK(op->src(op->morphism("a<d")) == op->object("d"));
  CHECK(laws_hold(*op));
}

TEST_CASE("terminal, initial, monic and iso") {
  auto sq = commutative_square();
  CHECK(terminal_object(*sq) == sq->object("d"));
  CHECK(initial_object(*sq) == sq->object("a"));
  CHECK_FALSE(terminal_object(*parallel_pair()).has_value());
  auto split = split_idempotent();
  CHECK(is_monic(*split, split->morphism("s")));
  CHECK_FALSE(is_monic(*split, split->morphism("p")));
  CHECK_FALSE(is_isomorphism(*split, split->morphism("s")));
  CHECK(is_isomorphism(*split, split->morphism("id_A")));
}

TEST_CASE("final functor from the point to a category with a terminal object") {
  auto sq = commutative_square();
  auto pick_d = constant_functor(point_category(), sq, sq->object("d"));
  CHECK(is_final_functor(pick_d));
  auto pick_b = constant_functor(point_category(), sq, sq->object("b"));
  CHECK_FALSE(is_final_functor(pick_b));
}

TEST_CASE("connectedness") {
  CHECK(is_connected(*commutative_square()));
  CHECK_FALSE(is_connected(*discrete_category(2)));
}

TEST_CASE("round trip through raw tables") {
  auto c = coequalizer_category();
  auto again = FinCategory::validate(c->to_raw());
  CHECK(again.morphism_count() == c->morphism_count());
  for (MorId f = 0; f < static_cast<MorId>(c->morphism_count()); ++f)
    CHECK(again.morphism_name(f) == c->morphism_name(f));
}
