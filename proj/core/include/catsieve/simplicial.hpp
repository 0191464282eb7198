#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catsieve/errors.hpp"
#include "catsieve/fincat.hpp"

namespace catsieve {

// A simplicial set truncated at dimension N = levels.size() - 1. Level n holds
// the n-simplices, faces[i][x] = d_i x (n >= 1) and degeneracies[i][x] = s_i x
// (n < N).
struct SSet {
  struct Level {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> faces;
    std::vector<std::vector<int>> degeneracies;
  };
  std::vector<Level> levels;

  std::size_t dim() const { return levels.size() - 1; }
  std::size_t size(std::size_t n) const { return levels[n].labels.size(); }
  const std::string& label(std::size_t n, int x) const { return levels[n].labels[x]; }
  int face(std::size_t n, std::size_t i, int x) const { return levels[n].faces[i][x]; }
  int degeneracy(std::size_t n, std::size_t i, int x) const { return levels[n].degeneracies[i][x]; }

  // x lies in the image of some s_i.
  bool is_degenerate(std::size_t n, int x) const;
  std::optional<int> find(std::size_t n, const std::string& label) const;
  std::size_t total_size() const;

  // θ^*(y) for y ∈ X_m and a monotone θ : [n] -> [m] given as its values.
  int apply(std::size_t m, int y, const std::vector<int>& theta) const;

  // Exhaustive check of the simplicial identities; throws NotSimplicial.
  void validate() const;
};

using SSetPtr = std::shared_ptr<const SSet>;

struct SimplicialMap {
  SSetPtr source;
  SSetPtr target;
  std::vector<std::vector<int>> levels;

  int operator()(std::size_t n, int x) const { return levels[n][x]; }
  // Throws NotSimplicial when a face or degeneracy fails to commute.
  void validate() const;
  bool operator==(const SimplicialMap& other) const { return levels == other.levels; }
};

SimplicialMap identity_map(const SSetPtr& x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// A nondegenerate cell; faces[j] indexes the cells one dimension down.
struct Cell {
  std::string label;
  std::vector<int> faces;
};

// The simplicial set freely generated by cells with nondegenerate faces.
// Simplices are kept in Eilenberg–Zilber normal form (y, σ) with σ a monotone
// surjection, labelled "y" when σ is the identity and "y[σ]" otherwise.
SSet sset_from_cells(const std::vector<std::vector<Cell>>& cells, std::size_t dim);

// Nondecreasing vertex sequences whose support passes `accept`. Faces delete
// an entry and degeneracies repeat one.
SSet sequence_sset(const std::vector<std::string>& vertices,
                   const std::function<bool(const std::vector<int>&)>& accept, std::size_t dim);

SSet point_sset(std::size_t dim);
SSet empty_sset(std::size_t dim);
SSet standard_simplex(std::size_t k, std::size_t dim);
SSet boundary_simplex(std::size_t k, std::size_t dim);
// Ordered simplicial complex on the listed facets (vertex indices).
SSet simplicial_complex(const std::vector<std::string>& vertices, const std::vector<std::vector<int>>& facets,
                        std::size_t dim);
// Two vertices joined by two edges a, b : v0 -> v1.
SSet two_cell_circle(std::size_t dim);

// The interval with n-simplices the non-increasing maps [n] -> [1], written as
// digit strings "1..10..0". Vertex 0 is "0" and vertex 1 is "1".
SSet interval(std::size_t dim);

SSet product(const SSet& x, const SSet& y);
SSet coproduct(const std::vector<SSetPtr>& parts);
SSet product_with_interval(const SSet& x);

// (Y⊙K)_n = ∐_{K_n} Y for a finite set Y of the given size.
SSet odot(std::size_t y, const SSet& k);

// Chains a0 <- a1 <- ... <- an up to length dim. Level 0 lists objects as
// one-element tuples; level n >= 1 lists (σ1, ..., σn) with σk : ak -> a(k-1).
// d0 drops a0, d_i composes σi∘σ(i+1), dn drops an, s_i repeats a_i.
struct ChainTable {
  CategoryPtr category;
  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> degeneracies;

  std::size_t size(std::size_t n) const { return chains[n].size(); }
  ObjId last(std::size_t n, int c) const;
  ObjId first(std::size_t n, int c) const;
  // -1 when the tuple is not a chain of this table.
  int find(std::size_t n, const std::vector<int>& tuple) const;
  std::string label(std::size_t n, int c) const;

  std::vector<std::map<std::vector<int>, int>> index;
};

// Throws AmbientTooLarge past guards.simplices_per_level chains in a level.
ChainTable chain_table(const CategoryPtr& c, std::size_t dim, const Guards& guards = {});

// No non-identity endomorphisms and no cycles of non-identity arrows; throws
// UnboundedChains otherwise.
void require_chain_bounded(const FinCategory& c);

SSet nerve(const CategoryPtr& c, std::size_t dim, const Guards& guards = {});

// Membership masks per level; checked for closure under faces and
// degeneracies (NotSubobject).
struct SubSSet {
  SSetPtr ambient;
  std::vector<std::vector<bool>> members;

  void validate() const;
};

// Smallest subobject containing the named simplices of any level.
SubSSet generated_subobject(const SSetPtr& x, const std::vector<std::string>& labels);
SubSSet intersect(const SubSSet& a, const SubSSet& b);
// The subobject as a simplicial set with its inclusion.
std::pair<SSetPtr, SimplicialMap> realize(const SubSSet& s);

}  // namespace catsieve
