#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catsieve/simplicial.hpp"
#include "catsieve/smith.hpp"

namespace catsieve {

// Normalized chains: degree n is free on the nondegenerate n-simplices.
// boundary[n] has one row per basis element of degree n holding its boundary
// in degree n - 1 coordinates; boundary[0] has no columns.
struct ChainComplex {
  std::size_t top = 0;
  std::vector<std::vector<int>> basis;
  std::vector<std::vector<int>> position;  // simplex -> basis index or -1
  std::vector<SparseIntMatrix> boundary;

  std::size_t rank(std::size_t n) const { return basis[n].size(); }
  // Degrees 0..valid_max() have both kernel and image data.
  std::size_t valid_max() const;
  bool has_valid_range() const { return top >= 1; }
  // Throws BoundaryCompositionNonzero.
  void check_boundary_squares() const;
};

ChainComplex normalized_chains(const SSet& x);

struct HomologyGroup {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  bool operator==(const HomologyGroup&) const = default;
};

struct HomologyGroups {
  std::vector<HomologyGroup> groups;  // degrees 0..valid_max
  std::size_t valid_max = 0;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> boundary_ranks;  // rank of boundary[n]

  // Betti numbers as a compact string, e.g. "Z,Z,0".
  std::string summary() const;
};

// Throws BoundaryCompositionNonzero; a complex truncated at 0 has no valid
// degrees and yields RangeExceedsValidity.
HomologyGroups homology_groups(const ChainComplex& c);
HomologyGroups homology(const SSet& x);

struct HomologyComparison {
  bool equal = true;
  std::size_t max_degree = 0;
  std::string method = "homology-proxy";
  std::optional<std::size_t> first_difference;
  HomologyGroups left;
  HomologyGroups right;
};

// Equal Betti numbers and torsion in degrees 0..max_degree. Throws
// RangeExceedsValidity when max_degree lies outside either valid range.
HomologyComparison homology_equal(const SSet& x, const SSet& y, std::size_t max_degree);
// Over the largest shared valid range.
HomologyComparison homology_equal(const SSet& x, const SSet& y);

// f_# on normalized chains in degree n, as dense rank(Y) × rank(X).
IntMatrix chain_map_matrix(const SimplicialMap& f, const ChainComplex& cx, const ChainComplex& cy, std::size_t n);

// f_* = g_* on H_k for k <= max_degree, tested on a kernel basis against the
// image of the next boundary. Throws RangeExceedsValidity.
bool induced_maps_equal(const SimplicialMap& f, const SimplicialMap& g, std::size_t max_degree);

// Mapping-cone test: f_* is an isomorphism in degrees below the returned
// bound and surjective at it. Returns the largest k with cone homology
// vanishing through k, or nullopt when even H_0 of the cone is nonzero.
std::optional<std::size_t> cone_acyclic_through(const SimplicialMap& f);

}  // namespace catsieve
