#include <functional>

#include "catsieve/catalog.hpp"
#include "catsieve/sieves.hpp"
#include "doctest.h"

using namespace catsieve;

namespace {

// Counts families (x_f : dom f -> Y) over the members of s with
// x_f∘g = x_(f∘g), by brute force over all assignments.
std::size_t matching_families(const ExplicitSieve& s, ObjId y) {
  const FinCategory& c = *s.ambient;
  const auto& members = s.members;
  std::vector<MorId> pick(members.size());
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == members.size()) {
      for (std::size_t a = 0; a < members.size(); ++a)
        for (MorId g : c.arrows_into(c.src(members[a]))) {
          MorId fg = c.compose(members[a], g);
          auto b = std::find(members.begin(), members.end(), fg) - members.begin();
          if (pick[b] != c.compose(pick[a], g)) return;
        }
      ++count;
      return;
    }
    for (MorId h : c.hom(c.src(members[i]), y)) {
      pick[i] = h;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

// Restriction hom(X,Y) -> matching families is a bijection for every Y:
// equal counts plus injectivity.
bool colim_by_families(const ExplicitSieve& s) {
  const FinCategory& c = *s.ambient;
  for (ObjId y = 0; y < static_cast<ObjId>(c.object_count()); ++y) {
    auto maps = c.hom(s.apex, y);
    if (matching_families(s, y) != maps.size()) return false;
    // Distinct maps must restrict to distinct families.
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j) {
        bool same = true;
        for (MorId f : s.members) same = same && c.compose(maps[i], f) == c.compose(maps[j], f);
        if (same) return false;
      }
  }
  return true;
}

std::vector<ExplicitSieve> all_sieves(const CategoryPtr& c, ObjId x) {
  auto into = c->arrows_into(x);
  std::vector<MorId> arrows(into.begin(), into.end());
  std::vector<ExplicitSieve> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << arrows.size()); ++mask) {
    std::vector<MorId> seeds;
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (mask >> i & 1) seeds.push_back(arrows[i]);
    auto s = generate_sieve(c, x, seeds);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

bool jointly_surjective(const GeneratedSieve& s) {
  std::vector<bool> hit(s.apex.size(), false);
  for (const auto& g : s.generators)
    for (int v : g.map()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

TEST_CASE("generated sieves on the walking arrow") {
  auto c = walking_arrow();
  ObjId one = c->object("1");
  auto s = generate_sieve(c, one, {c->morphism("f")});
  CHECK(s.members == std::vector<MorId>{c->morphism("f")});
  CHECK(maximal_sieve(c, one).members.size() == 2);
  CHECK(empty_sieve(c, one).members.empty());
  CHECK(all_sieves(c, one).size() == 3);
}

TEST_CASE("pullback sieves") {
  auto c = commutative_square();
  ObjId d = c->object("d");
  auto s = generate_sieve(c, d, {c->morphism("b<d")});
  auto along_c = pullback_sieve(s, c->morphism("c<d"));
  CHECK(along_c.apex == c->object("c"));
  CHECK(along_c.members == std::vector<MorId>{c->morphism("a<c")});
  auto along_b = pullback_sieve(s, c->morphism("b<d"));
  CHECK(along_b == maximal_sieve(c, c->object("b")));
  CHECK_THROWS_AS(pullback_sieve(s, c->morphism("a<b")), Error);
}

TEST_CASE("colim sieve decision agrees with matching families") {
  for (const auto& [name, c] : standard_catalog()) {
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
      for (const auto& s : all_sieves(c, x)) {
        INFO(name, " apex ", c->object_name(x), " size ", s.members.size());
        CHECK(is_colim_sieve(s, Guards{}).holds == colim_by_families(s));
      }
  }
}

TEST_CASE("universal colim sieves are stable under pullback") {
  for (const auto& [name, c] : standard_catalog())
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
      for (const auto& s : all_sieves(c, x)) {
        bool universal = true;
        for (ObjId y = 0; y < static_cast<ObjId>(c->object_count()); ++y)
          for (MorId f : c->hom(y, x)) universal = universal && colim_by_families(pullback_sieve(s, f));
        INFO(name);
        CHECK(is_universal_colim_sieve(s, Guards{}).holds == universal);
      }
}

TEST_CASE("sieve category of a maximal sieve has a terminal object") {
  auto c = coequalizer_category();
  auto s = sieve_category(maximal_sieve(c, c->object("Q")));
  CHECK(terminal_object(*s.category).has_value());
  CHECK(s.category->object_count() == c->arrows_into(c->object("Q")).size());
}

TEST_CASE("generated sieves on finite sets") {
  auto x = FinSet::range(3);
  GeneratedSieve s{x, {SetFunction(FinSet::range(2), x, {0, 1}), SetFunction(FinSet::range(1), x, {2})}};
  CHECK(s.contains(SetFunction(FinSet::range(2), x, {1, 1})));
  CHECK_FALSE(s.contains(SetFunction(FinSet::range(2), x, {1, 2})));
  CHECK(is_colim_sieve(s).holds);
  auto u = is_universal_colim_sieve(s, 3);
  CHECK(u.holds);
  REQUIRE(u.cross_check.has_value());
  CHECK(*u.cross_check);

  GeneratedSieve partial{x, {SetFunction(FinSet::range(2), x, {0, 0})}};
  CHECK_FALSE(is_colim_sieve(partial).holds);
  CHECK_FALSE(is_universal_colim_sieve(partial, 3).holds);
}

TEST_CASE("colim decision on generated sieves matches joint surjectivity") {
  auto x = FinSet::range(3);
  for (std::size_t a = 0; a <= 2; ++a)
    for_each_function(FinSet::range(a), x, [&](const SetFunction& f) {
      for_each_function(FinSet::range(2), x, [&](const SetFunction& g) {
        GeneratedSieve s{x, {f, g}};
        CHECK(is_colim_sieve(s).holds == jointly_surjective(s));
        CHECK(coequalizer_matches_diagram_colimit(s));
        auto mono = reduce_to_monogenic(s);
        CHECK(mono.generators.size() == 1);
        CHECK(is_colim_sieve(mono).holds == is_colim_sieve(s).holds);
        return true;
      });
      return true;
    });
}

TEST_CASE("comparison maps land in the apex") {
  auto x = FinSet::range(2);
  GeneratedSieve s{x, {SetFunction(FinSet::range(2), x, {0, 0}), SetFunction(FinSet::range(1), x, {1})}};
  CHECK(is_bijection(coequalizer_comparison(s)));
  CHECK(is_bijection(pairwise_diagram_comparison(s)));
  CHECK(family_map(x, s.generators).dom().size() == 3);
}

TEST_CASE("basis axioms on small families") {
  auto x = FinSet::range(2);
  std::vector<SetFunction> cover{SetFunction(FinSet::range(1), x, {0}), SetFunction(FinSet::range(1), x, {1})};
  CHECK(basis_cover_check(x, cover, 3).holds);
  CHECK(basis_isomorphism_axiom(SetFunction(x, x, {1, 0}), 3));
  CHECK(basis_stability_axiom(x, cover, SetFunction(FinSet::range(3), x, {0, 1, 1}), 3));
  std::vector<std::vector<SetFunction>> refinements{{identity(FinSet::range(1))}, {identity(FinSet::range(1))}};
  CHECK(basis_transitivity_axiom(x, cover, refinements, 3));
}
