#include "catsieve/homology.hpp"

#include <algorithm>
#include <map>

namespace catsieve {

namespace {

using Row = std::vector<std::pair<int, std::int64_t>>;

Row to_row(const std::map<int, std::int64_t>& acc) {
  Row r;
  for (const auto& [c, v] : acc)
    if (v != 0) r.emplace_back(c, v);
  return r;
}

[[noreturn]] void out_of_range(std::size_t asked, std::size_t valid) {
  throw Error(ErrorKind::RangeExceedsValidity, "degree " + std::to_string(asked) +
                                                   " is outside the valid range [0," + std::to_string(valid) + "]");
}

HomologyGroups groups_from_profiles(const std::vector<std::size_t>& ranks, const std::vector<RankProfile>& profiles,
                                    std::size_t top) {
  HomologyGroups h;
  h.valid_max = top - 1;
  h.ranks = ranks;
  h.boundary_ranks.assign(top + 1, 0);
  for (std::size_t n = 1; n <= top; ++n) h.boundary_ranks[n] = profiles[n].rank;
  for (std::size_t k = 0; k < top; ++k) {
    HomologyGroup g;
    g.degree = k;
    g.betti = ranks[k] - h.boundary_ranks[k] - profiles[k + 1].rank;
    g.torsion = profiles[k + 1].torsion;
    h.groups.push_back(std::move(g));
  }
  return h;
}

}  // namespace

std::size_t ChainComplex::valid_max() const {
  if (top == 0) out_of_range(0, 0);
  return top - 1;
}

ChainComplex normalized_chains(const SSet& x) {
  ChainComplex c;
  c.top = x.dim();
  c.basis.resize(c.top + 1);
  c.position.resize(c.top + 1);
  for (std::size_t n = 0; n <= c.top; ++n) {
    c.position[n].assign(x.size(n), -1);
    for (int s = 0; s < static_cast<int>(x.size(n)); ++s)
      if (!x.is_degenerate(n, s)) {
        c.position[n][s] = static_cast<int>(c.basis[n].size());
        c.basis[n].push_back(s);
      }
  }
  for (std::size_t n = 0; n <= c.top; ++n) {
    SparseIntMatrix m;
    m.rows = c.basis[n].size();
    m.cols = n == 0 ? 0 : c.basis[n - 1].size();
    m.entries.resize(m.rows);
    for (std::size_t j = 0; n > 0 && j < m.rows; ++j) {
      std::map<int, std::int64_t> acc;
      for (std::size_t i = 0; i <= n; ++i) {
        int p = c.position[n - 1][x.face(n, i, c.basis[n][j])];
        if (p >= 0) acc[p] += (i % 2 == 0) ? 1 : -1;
      }
      m.entries[j] = to_row(acc);
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

void ChainComplex::check_boundary_squares() const {
  for (std::size_t n = 2; n <= top; ++n)
    for (std::size_t j = 0; j < boundary[n].entries.size(); ++j) {
      std::map<int, std::int64_t> acc;
      for (const auto& [c, v] : boundary[n].entries[j])
        for (const auto& [c2, v2] : boundary[n - 1].entries[c]) acc[c2] += v * v2;
      if (!to_row(acc).empty())
        throw Error(ErrorKind::BoundaryCompositionNonzero,
                    "boundary of the boundary of basis element " + std::to_string(j) + " in degree " +
                        std::to_string(n) + " is nonzero");
    }
}

std::string HomologyGroups::summary() const {
  std::string out;
  for (const auto& g : groups) {
    if (!out.empty()) out += ",";
    std::string term;
    if (g.betti == 1) term = "Z";
    if (g.betti > 1) term = "Z^" + std::to_string(g.betti);
    for (const auto& t : g.torsion) term += (term.empty() ? "" : "+") + std::string("Z/") + t.str();
    out += term.empty() ? "0" : term;
  }
  return out;
}

HomologyGroups homology_groups(const ChainComplex& c) {
  c.valid_max();
  c.check_boundary_squares();
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= c.top; ++n) ranks.push_back(c.rank(n));
  std::vector<RankProfile> profiles(c.top + 1);
  for (std::size_t n = 1; n <= c.top; ++n) profiles[n] = rank_profile(c.boundary[n]);
  return groups_from_profiles(ranks, profiles, c.top);
}

HomologyGroups homology(const SSet& x) { return homology_groups(normalized_chains(x)); }

HomologyComparison homology_equal(const SSet& x, const SSet& y, std::size_t max_degree) {
  HomologyComparison r;
  r.left = homology(x);
  r.right = homology(y);
  if (max_degree > r.left.valid_max) out_of_range(max_degree, r.left.valid_max);
  if (max_degree > r.right.valid_max) out_of_range(max_degree, r.right.valid_max);
  r.max_degree = max_degree;
  for (std::size_t k = 0; k <= max_degree; ++k)
    if (!(r.left.groups[k] == r.right.groups[k])) {
      r.equal = false;
      r.first_difference = k;
      break;
    }
  return r;
}

HomologyComparison homology_equal(const SSet& x, const SSet& y) {
  const std::size_t top = std::min(x.dim(), y.dim());
  if (top == 0) out_of_range(0, 0);
  return homology_equal(x, y, top - 1);
}

IntMatrix chain_map_matrix(const SimplicialMap& f, const ChainComplex& cx, const ChainComplex& cy, std::size_t n) {
  IntMatrix m(cy.rank(n), cx.rank(n));
  for (std::size_t j = 0; j < cx.rank(n); ++j) {
    int p = cy.position[n][f(n, cx.basis[n][j])];
    if (p >= 0) m(static_cast<std::size_t>(p), j) = 1;
  }
  return m;
}

namespace {

// Column j holds the boundary of basis element j.
IntMatrix boundary_columns(const ChainComplex& c, std::size_t n) {
  IntMatrix m(n == 0 ? 0 : c.rank(n - 1), c.rank(n));
  for (std::size_t j = 0; n > 0 && j < c.rank(n); ++j)
    for (const auto& [i, v] : c.boundary[n].entries[j]) m(static_cast<std::size_t>(i), j) = v;
  return m;
}

}  // namespace

bool induced_maps_equal(const SimplicialMap& f, const SimplicialMap& g, std::size_t max_degree) {
  if (f.levels.size() != g.levels.size() || f.target->dim() != g.target->dim())
    throw Error(ErrorKind::Mismatch, "maps are not parallel");
  for (std::size_t n = 0; n < f.levels.size(); ++n)
    if (f.levels[n].size() != g.levels[n].size()) throw Error(ErrorKind::Mismatch, "maps are not parallel");
  ChainComplex cx = normalized_chains(*f.source);
  ChainComplex cy = normalized_chains(*f.target);
  const std::size_t valid = std::min(cx.valid_max(), cy.valid_max());
  if (max_degree > valid) out_of_range(max_degree, valid);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    IntMatrix delta = chain_map_matrix(f, cx, cy, k);
    const IntMatrix mg = chain_map_matrix(g, cx, cy, k);
    for (std::size_t i = 0; i < delta.rows(); ++i)
      for (std::size_t j = 0; j < delta.cols(); ++j) delta(i, j) -= mg(i, j);
    if (delta.is_zero()) continue;

    std::vector<std::vector<BigInt>> kernel;
    if (k == 0) {
      for (std::size_t j = 0; j < cx.rank(0); ++j) {
        std::vector<BigInt> e(cx.rank(0));
        e[j] = 1;
        kernel.push_back(std::move(e));
      }
    } else {
      SmithForm a = smith_normal_form(boundary_columns(cx, k));
      for (std::size_t j = a.invariants.size(); j < cx.rank(k); ++j) {
        std::vector<BigInt> z(cx.rank(k));
        for (std::size_t i = 0; i < cx.rank(k); ++i) z[i] = a.v(i, j);
        kernel.push_back(std::move(z));
      }
    }
    SmithForm b = smith_normal_form(boundary_columns(cy, k + 1));
    for (const auto& z : kernel) {
      std::vector<BigInt> w(cy.rank(k));
      for (std::size_t i = 0; i < cy.rank(k); ++i)
        for (std::size_t j = 0; j < z.size(); ++j)
          if (!delta(i, j).is_zero() && !z[j].is_zero()) w[i] += delta(i, j) * z[j];
      for (std::size_t i = 0; i < cy.rank(k); ++i) {
        BigInt y = 0;
        for (std::size_t j = 0; j < cy.rank(k); ++j)
          if (!b.u(i, j).is_zero() && !w[j].is_zero()) y += b.u(i, j) * w[j];
        if (i < b.invariants.size() ? BigInt(y % b.invariants[i]) != 0 : !y.is_zero()) return false;
      }
    }
  }
  return true;
}

std::optional<std::size_t> cone_acyclic_through(const SimplicialMap& f) {
  ChainComplex cx = normalized_chains(*f.source);
  ChainComplex cy = normalized_chains(*f.target);
  cx.check_boundary_squares();
  cy.check_boundary_squares();
  const std::size_t top = std::min(cx.top, cy.top);
  if (top == 0) out_of_range(0, 0);
  auto xr = [&](std::size_t k) { return k == 0 ? std::size_t{0} : cx.rank(k - 1); };
  std::vector<std::size_t> ranks;
  std::vector<RankProfile> profiles(top + 1);
  for (std::size_t k = 0; k <= top; ++k) ranks.push_back(xr(k) + cy.rank(k));
  for (std::size_t k = 1; k <= top; ++k) {
    SparseIntMatrix m;
    m.rows = ranks[k];
    m.cols = ranks[k - 1];
    const int shift = static_cast<int>(xr(k - 1));
    for (std::size_t j = 0; j < xr(k); ++j) {
      Row r;
      if (k >= 2)
        for (const auto& [c, v] : cx.boundary[k - 1].entries[j]) r.emplace_back(c, -v);
      int p = cy.position[k - 1][f(k - 1, cx.basis[k - 1][j])];
      if (p >= 0) r.emplace_back(shift + p, 1);
      m.entries.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < cy.rank(k); ++j) {
      Row r;
      for (const auto& [c, v] : cy.boundary[k].entries[j]) r.emplace_back(shift + c, v);
      m.entries.push_back(std::move(r));
    }
    profiles[k] = rank_profile(m);
  }
  HomologyGroups h = groups_from_profiles(ranks, profiles, top);
  std::optional<std::size_t> through;
  for (const auto& g : h.groups) {
    if (g.betti != 0 || !g.torsion.empty()) break;
    through = g.degree;
  }
  return through;
}

}  // namespace catsieve
