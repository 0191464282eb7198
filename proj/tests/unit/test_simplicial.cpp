#include "catsieve/catalog.hpp"
#include "catsieve/simplicial.hpp"
#include "doctest.h"

using namespace catsieve;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("level counts of basic simplicial sets") {
  for (std::size_t k = 0; k <= 3; ++k) {
    auto s = standard_simplex(k, 3);
    s.validate();
    for (std::size_t n = 0; n <= 3; ++n) CHECK(s.size(n) == binom(k + n + 1, n + 1));
  }
  auto c = two_cell_circle(4);
  c.validate();
  for (std::size_t n = 0; n <= 4; ++n) CHECK(c.size(n) == 2 + 2 * n);
  auto i = interval(4);
  i.validate();
  for (std::size_t n = 0; n <= 4; ++n) CHECK(i.size(n) == n + 2);
  CHECK(i.label(0, 0) == "0");
  CHECK(i.label(0, 1) == "1");
  auto p = product_with_interval(c);
  p.validate();
  for (std::size_t n = 0; n <= 4; ++n) CHECK(p.size(n) == c.size(n) * (n + 2));
}

TEST_CASE("boundary of a simplex omits the top cell") {
  auto b = boundary_simplex(2, 3);
  b.validate();
  CHECK(b.size(0) == 3);
  CHECK(b.size(1) == 6);
  CHECK_FALSE(b.find(2, "012").has_value());
}

TEST_CASE("operator action matches sequence composition") {
  auto s = standard_simplex(3, 3);
  const int top = *s.find(3, "0123");
  CHECK(s.label(2, s.apply(3, top, {0, 2, 3})) == "023");
  CHECK(s.label(3, s.apply(3, top, {1, 1, 2, 3})) == "1123");
  CHECK(s.label(1, s.apply(3, top, {3, 3})) == "33");
  const int edge = *s.find(1, "13");
  CHECK(s.label(2, s.apply(1, edge, {0, 0, 1})) == "113");
}

TEST_CASE("face tables that break the identities are rejected") {
  auto s = standard_simplex(2, 2);
  s.levels[2].faces[0][0] = s.levels[2].faces[0][1];
  CHECK_THROWS_AS(s.validate(), Error);
  try {
    s.validate();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSimplicial);
  }
}

TEST_CASE("copies of a finite set over each simplex") {
  auto k = standard_simplex(1, 2);
  auto y = odot(3, k);
  y.validate();
  for (std::size_t n = 0; n <= 2; ++n) CHECK(y.size(n) == 3 * k.size(n));
}

TEST_CASE("nerves of finite categories") {
  auto n = nerve(walking_arrow(), 4);
  n.validate();
  for (std::size_t k = 0; k <= 4; ++k) CHECK(n.size(k) == k + 2);
  auto pt = nerve(point_category(), 3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(pt.size(k) == 1);
  auto sq = nerve(commutative_square(), 2);
  sq.validate();
  CHECK(nerve(idempotent_monoid(), 2).size(2) == 4);
  CHECK_THROWS_AS(require_chain_bounded(*idempotent_monoid()), Error);
  try {
    require_chain_bounded(*idempotent_monoid());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundedChains);
  }
}

TEST_CASE("chain faces compose in the middle") {
  auto c = poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto t = chain_table(c, 2);
  for (int x = 0; x < static_cast<int>(t.size(2)); ++x) {
    const auto& ch = t.chains[2][x];
    const int middle = t.faces[2][1][x];
    CHECK(t.chains[1][middle][0] == c->compose(ch[0], ch[1]));
  }
}

TEST_CASE("generated subobjects are closed") {
  auto s = std::make_shared<SSet>(standard_simplex(2, 2));
  auto edge = generated_subobject(s, {"01"});
  edge.validate();
  auto [space, inc] = realize(edge);
  space->validate();
  inc.validate();
  CHECK(space->size(0) == 2);
  CHECK(space->size(1) == 3);
  auto other = generated_subobject(s, {"12"});
  auto meet = intersect(edge, other);
  auto [pt, pinc] = realize(meet);
  CHECK(pt->size(0) == 1);
  SubSSet broken = edge;
  broken.members[0].assign(broken.members[0].size(), false);
  CHECK_THROWS_AS(broken.validate(), Error);
}

TEST_CASE("maps compose and preserve structure") {
  auto x = std::make_shared<SSet>(two_cell_circle(3));
  auto id = identity_map(x);
  id.validate();
  CHECK(compose(id, id) == id);
  auto p = std::make_shared<SSet>(point_sset(3));
  SimplicialMap collapse{x, p, {}};
  for (std::size_t n = 0; n <= 3; ++n) collapse.levels.emplace_back(x->size(n), 0);
  collapse.validate();
  SimplicialMap bad = collapse;
  bad.target = x;
  bad.levels[1][2] = 3;
  CHECK_THROWS_AS(bad.validate(), Error);
}
