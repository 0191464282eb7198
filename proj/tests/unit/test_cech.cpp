#include <chrono>

#include "catsieve/catalog.hpp"
#include "catsieve/cech.hpp"
#include "catsieve/homology.hpp"
#include "diagrams.hpp"
#include "doctest.h"

using namespace catsieve;
using testkit::share;

namespace {

bool homology_iso(const SimplicialMap& f) {
  auto through = cone_acyclic_through(f);
  return through && *through + 1 >= std::min(f.source->dim(), f.target->dim());
}

}  // namespace

TEST_CASE("circle covered by two arcs") {
  auto x = share(boundary_simplex(2, 3));
  auto cover = cech_cover(x, {generated_subobject(x, {"01", "12"}), generated_subobject(x, {"02"})});
  cover.hocolim.space->validate();
  cover.to_space.validate();
  CHECK(homology(*cover.hocolim.space).summary() == "Z,Z,0");
  CHECK(homology_iso(cover.to_space));
  cover.nerve->validate();
  cover.nerve_to_space.validate();
  CHECK(homology(*cover.nerve_diagonal).summary() == "Z,Z,0");
  CHECK(homology_iso(cover.nerve_to_space));
}

TEST_CASE("boundary of the tetrahedron covered by its faces") {
  const auto start = std::chrono::steady_clock::now();
  auto x = share(boundary_simplex(3, 4));
  std::vector<SubSSet> parts;
  for (const char* face : {"123", "023", "013", "012"}) parts.push_back(generated_subobject(x, {face}));
  auto cover = cech_cover(x, parts);
  auto h = homology(*cover.hocolim.space);
  CHECK(h.groups[0].betti == 1);
  CHECK(h.groups[1].betti == 0);
  CHECK(h.groups[2].betti == 1);
  CHECK(homology_iso(cover.to_space));
  CHECK(homology_equal(*cover.nerve_diagonal, *x).equal);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(120));
}

TEST_CASE("a single part recovers the space") {
  auto x = share(two_cell_circle(3));
  SubSSet all{x, {}};
  for (std::size_t n = 0; n <= 3; ++n) all.members.emplace_back(x->size(n), true);
  auto cover = cech_cover(x, {all});
  CHECK(homology_equal(*cover.hocolim.space, *x).equal);
  CHECK(homology_iso(cover.to_space));
}

TEST_CASE("parts must be subobjects of the same space") {
  auto x = share(boundary_simplex(2, 2));
  auto part = generated_subobject(x, {"01"});
  part.members[0].assign(part.members[0].size(), false);
  CHECK_THROWS_AS(cech_cover(x, {part}), Error);
  auto y = share(boundary_simplex(2, 2));
  CHECK_THROWS_AS(cech_cover(x, {generated_subobject(y, {"01"})}), Error);
}

TEST_CASE("nerve of a finite set is contractible") {
  for (std::size_t b = 1; b <= 3; ++b) {
    auto c = cech_set(b, 3);
    c.validate();
    std::size_t expected = b;
    for (std::size_t n = 0; n <= 3; ++n, expected *= b) CHECK(c.size(n) == expected);
    CHECK(homology(c).summary() == "Z,0,0");
  }
  auto two = cech_set(2, 2);
  auto fold = cech_map(SetFunction(FinSet::range(2), FinSet::range(1), {0, 0}), 2);
  CHECK(two.levels[2].faces == fold.levels[2].faces);
  CHECK(two.levels[1].labels == fold.levels[1].labels);
  auto fibres = cech_map(SetFunction(FinSet::range(3), FinSet::range(2), {0, 0, 1}), 3);
  fibres.validate();
  CHECK(homology(fibres).summary() == "Z^2,0,0");
}

TEST_CASE("Čech object of a split epimorphism") {
  auto x = share(two_cell_circle(3));
  auto y = share(coproduct({x, x}));
  SimplicialMap fold{y, x, {}};
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<int> level;
    for (int k = 0; k < static_cast<int>(y->size(n)); ++k) level.push_back(k % static_cast<int>(x->size(n)));
    fold.levels.push_back(level);
  }
  fold.validate();
  auto c = cech_map(fold);
  c.object->validate();
  c.diagonal->validate();
  c.augmentation.validate();
  CHECK(homology_equal(*c.diagonal, *x).equal);
  CHECK(homology_iso(c.augmentation));

  auto pt = share(point_sset(3));
  auto section_target = share(standard_simplex(1, 3));
  auto collapse = testkit::constant_map(section_target, pt, 0);
  auto d = cech_map(collapse);
  CHECK(homology(*d.diagonal).summary() == "Z,0,0");
}

TEST_CASE("simplex category recovers the space") {
  for (const auto& x : {share(point_sset(3)), share(two_cell_circle(3)), share(boundary_simplex(2, 3)),
                        share(standard_simplex(2, 3))}) {
    auto s = simplex_category(x);
    s.diagram.validate();
    auto h = hocolim(s.diagram);
    auto f = simplex_category_to_space(s, h, x);
    f.validate();
    CHECK(homology_equal(*h.space, *x).equal);
    CHECK(homology_iso(f));
  }
  auto c = simplex_category(share(boundary_simplex(2, 2)));
  CHECK(c.diagram.shape->object_count() == 6);
  CHECK(c.diagram.shape->morphism_count() == 12);
}

TEST_CASE("homotopy finality verdicts") {
  auto arrow = walking_arrow();
  CHECK(is_homotopy_final_proxy(identity_functor(arrow)).verdict == TriState::Yes);
  FinFunctor top(point_category(), arrow, {arrow->object("1")}, {arrow->identity(arrow->object("1"))});
  CHECK(is_homotopy_final_proxy(top).verdict == TriState::Yes);
  FinFunctor bottom(point_category(), arrow, {arrow->object("0")}, {arrow->identity(arrow->object("0"))});
  auto r = is_homotopy_final_proxy(bottom);
  CHECK(r.verdict == TriState::No);
  CHECK(r.entries.size() == 2);

  auto span = poset({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
  FinFunctor legs(poset({"a", "b"}, {}), span, {span->object("a"), span->object("b")},
                  {span->identity(span->object("a")), span->identity(span->object("b"))});
  CHECK(is_homotopy_final_proxy(legs).verdict == TriState::No);

  auto zigzag = poset({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "b"}, {"c", "d"}});
  std::vector<MorId> to_point(zigzag->morphism_count(), point_category()->identity(0));
  FinFunctor collapse(zigzag, point_category(), std::vector<ObjId>(4, 0), to_point);
  CHECK(is_homotopy_final_proxy(collapse).verdict == TriState::Inconclusive);
  CHECK(to_string(TriState::Inconclusive) == "inconclusive");
  CHECK_THROWS_AS(is_homotopy_final_proxy(collapse, 0), Error);
}

TEST_CASE("cover intersections are final in the subobject poset") {
  auto x = share(boundary_simplex(2, 3));
  auto cover = cech_cover(x, {generated_subobject(x, {"01", "12"}), generated_subobject(x, {"02"})});
  auto sieve = cover_sieve(cover);
  for (const auto& s : sieve.objects) s.validate();
  CHECK(is_homotopy_final_proxy(sieve.gamma, 3).verdict == TriState::Yes);
}

TEST_CASE("forgetting the last arrow of a two-level sieve is a homology isomorphism") {
  auto x = share(boundary_simplex(2, 3));
  auto cover = cech_cover(x, {generated_subobject(x, {"01", "12"}), generated_subobject(x, {"02"})});
  auto ambient = subobject_ambient(cover);
  CHECK(ambient.category->object_name(ambient.apex) == "{0,1,2,01,02,12}");
  auto cmp = forgetful_comparison(cover);
  cmp.map.validate();
  CHECK(cmp.range == 1);
  CHECK(cmp.holds());
  CHECK(homology(*cmp.target.space).summary() == "Z,Z,0");
  CHECK(homology_equal(*cmp.source.space, *cmp.target.space).equal);
}
