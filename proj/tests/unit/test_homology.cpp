#include <algorithm>

#include "catsieve/homology.hpp"
#include "doctest.h"

using namespace catsieve;

namespace {

constexpr std::int64_t kPrime = 1000003;

std::int64_t power(std::int64_t a, std::int64_t e) {
  std::int64_t r = 1;
  a %= kPrime;
  while (e > 0) {
    if (e & 1) r = r * a % kPrime;
    a = a * a % kPrime;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(const SparseIntMatrix& s) {
  auto rows = std::vector<std::vector<std::int64_t>>(s.rows, std::vector<std::int64_t>(s.cols, 0));
  for (std::size_t i = 0; i < s.rows; ++i)
    for (const auto& [c, v] : s.entries[i]) rows[i][c] = ((v % kPrime) + kPrime) % kPrime;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < s.cols && rank < s.rows; ++col) {
    std::size_t piv = rank;
    while (piv < s.rows && rows[piv][col] == 0) ++piv;
    if (piv == s.rows) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t inv = power(rows[rank][col], kPrime - 2);
    for (std::size_t i = 0; i < s.rows; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const std::int64_t f = rows[i][col] * inv % kPrime;
      for (std::size_t j = col; j < s.cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> betti_mod_p(const SSet& x) {
  auto c = normalized_chains(x);
  std::vector<std::size_t> r(c.top + 2, 0);
  for (std::size_t n = 1; n <= c.top; ++n) r[n] = rank_mod_p(c.boundary[n]);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c.top; ++k) out.push_back(c.rank(k) - r[k] - r[k + 1]);
  return out;
}

std::vector<std::size_t> bettis(const HomologyGroups& h) {
  std::vector<std::size_t> out;
  for (const auto& g : h.groups) out.push_back(g.betti);
  return out;
}

SSet projective_plane(std::size_t dim) {
  std::vector<std::vector<int>> facets{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                       {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  for (auto& f : facets) {
    for (int& v : f) --v;
    std::sort(f.begin(), f.end());
  }
  return simplicial_complex({"1", "2", "3", "4", "5", "6"}, facets, dim);
}

}  // namespace

TEST_CASE("homology of contractible spaces") {
  CHECK(homology(point_sset(3)).summary() == "Z,0,0");
  CHECK(homology(standard_simplex(3, 4)).summary() == "Z,0,0,0");
}

TEST_CASE("two-cell circle") {
  auto c = normalized_chains(two_cell_circle(3));
  CHECK(c.rank(0) == 2);
  CHECK(c.rank(1) == 2);
  CHECK(c.rank(2) == 0);
  CHECK(homology(two_cell_circle(3)).summary() == "Z,Z,0");
}

TEST_CASE("boundaries of simplices are spheres") {
  CHECK(homology_equal(boundary_simplex(2, 3), two_cell_circle(3)).equal);
  CHECK(homology(boundary_simplex(3, 4)).summary() == "Z,0,Z,0");
}

TEST_CASE("projective plane has two-torsion") {
  auto h = homology(projective_plane(3));
  CHECK(h.summary() == "Z,Z/2,0");
  CHECK(h.groups[1].torsion == std::vector<BigInt>{2});
}

TEST_CASE("free ranks agree with ranks over a prime field") {
  for (const SSet& x : {two_cell_circle(3), boundary_simplex(3, 4), projective_plane(3), standard_simplex(2, 3),
                        product_with_interval(two_cell_circle(3))}) {
    CHECK(bettis(homology(x)) == betti_mod_p(x));
  }
}

TEST_CASE("boundary squares vanish and Euler characteristic matches") {
  for (const SSet& x : {two_cell_circle(4), boundary_simplex(3, 3), projective_plane(2)}) {
    auto c = normalized_chains(x);
    c.check_boundary_squares();
    std::int64_t chi_cells = 0, chi_betti = 0;
    auto h = homology_groups(c);
    for (std::size_t n = 0; n < c.top; ++n) {
      chi_cells += (n % 2 ? -1 : 1) * static_cast<std::int64_t>(c.rank(n));
      chi_betti += (n % 2 ? -1 : 1) * static_cast<std::int64_t>(h.groups[n].betti);
    }
    // Truncating at top drops ranks above top - 1; correct with the image of the top boundary.
    const std::int64_t sign = (c.top - 1) % 2 ? -1 : 1;
    chi_cells -= sign * static_cast<std::int64_t>(h.boundary_ranks[c.top]);
    CHECK(chi_cells == chi_betti);
  }
}

TEST_CASE("broken boundary is detected") {
  auto c = normalized_chains(standard_simplex(2, 2));
  c.boundary[1].entries[0].clear();
  CHECK_THROWS_AS(c.check_boundary_squares(), Error);
  c = normalized_chains(standard_simplex(2, 2));
  c.boundary[2].entries[0].push_back({0, 5});
  try {
    homology_groups(c);
    FAIL("expected a failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundaryCompositionNonzero);
  }
}

TEST_CASE("ranges outside the valid window are rejected") {
  CHECK_THROWS_AS(homology(point_sset(0)), Error);
  CHECK_THROWS_AS(homology_equal(point_sset(2), point_sset(2), 2), Error);
  CHECK(homology(point_sset(2)).valid_max == 1);
}

TEST_CASE("induced maps on the circle") {
  auto x = std::make_shared<SSet>(two_cell_circle(3));
  auto p = std::make_shared<SSet>(point_sset(3));
  auto id = identity_map(x);
  SimplicialMap constant{x, x, {}};
  const int v0 = *x->find(0, "v0");
  for (std::size_t n = 0; n <= 3; ++n)
    constant.levels.emplace_back(x->size(n), x->apply(0, v0, std::vector<int>(n + 1, 0)));
  constant.validate();
  CHECK(induced_maps_equal(id, id, 1));
  CHECK(induced_maps_equal(id, constant, 0));
  CHECK_FALSE(induced_maps_equal(id, constant, 1));
  CHECK(cone_acyclic_through(id) == std::optional<std::size_t>{2});
  SimplicialMap collapse{x, p, {}};
  for (std::size_t n = 0; n <= 3; ++n) collapse.levels.emplace_back(x->size(n), 0);
  auto through = cone_acyclic_through(collapse);
  REQUIRE(through.has_value());
  CHECK(*through == 1);
}
