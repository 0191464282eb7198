#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catsieve/bisimplicial.hpp"
#include "catsieve/finset.hpp"
#include "catsieve/gensieve.hpp"
#include "catsieve/sieves.hpp"

namespace catsieve {

// Intersections of a cover indexed by the nonempty subsets of the parts. The
// arrow σ -> τ exists when σ ⊇ τ and is sent to the inclusion V_σ ⊆ V_τ.
struct CechCover {
  SSetPtr space;
  std::vector<SubSSet> parts;
  std::vector<std::vector<int>> subsets;  // shape object -> part indices
  SSetDiagram diagram;
  std::vector<SimplicialMap> inclusions;  // V_σ -> X
  Hocolim hocolim;
  SimplicialMap to_space;  // hocolim -> X
  // Č(𝒰)_{n,m} = ∐_{(a0..an)} (V_{a0} ∩ ... ∩ V_{an})_m and its diagonal.
  BiSSetPtr nerve;
  SSetPtr nerve_diagonal;
  SimplicialMap nerve_to_space;
};

// Throws NotSubobject when a part is not closed under faces and degeneracies.
CechCover cech_cover(const SSetPtr& x, const std::vector<SubSSet>& parts, const Guards& guards = {});

// Č(B)_n = B^{n+1}; faces delete a coordinate and degeneracies repeat one.
SSet cech_set(std::size_t b, std::size_t dim);
// Č(f)_n = Y ×_X ... ×_X Y with n + 1 factors.
SSet cech_map(const SetFunction& f, std::size_t dim);

struct CechMap {
  BiSSetPtr object;  // Č(f)_{n,m} = Y_m ×_{X_m} ... ×_{X_m} Y_m
  SSetPtr diagonal;
  SimplicialMap augmentation;  // diagonal -> X, (y0, ..., yn) |-> f(y0)
};

CechMap cech_map(const SimplicialMap& f, const Guards& guards = {});

// Nondegenerate simplices of X and the face operators between them, each
// simplex sent to the standard simplex of its dimension.
struct SimplexCategory {
  std::vector<std::pair<std::size_t, int>> simplices;  // object -> (dimension, simplex)
  std::vector<std::vector<int>> operators;             // morphism -> injective monotone map
  SSetDiagram diagram;
};

SimplexCategory simplex_category(const SSetPtr& x);
// The characteristic maps Δ^n -> X assembled on the homotopy colimit.
SimplicialMap simplex_category_to_space(const SimplexCategory& s, const Hocolim& h, const SSetPtr& x);

enum class TriState { Yes, No, Inconclusive };
std::string to_string(TriState t);

struct FinalityEntry {
  std::string object;
  std::string status;  // "empty", "disconnected", "homology", "initial", "terminal", "acyclic"
  std::string homology;
};

// Each comma category (b↓L) must be nonempty with connected, acyclic nerve
// through degree dim - 1. Yes needs a contractibility certificate (an initial
// or terminal object) for every b; acyclic comma categories without one give
// Inconclusive.
struct FinalityReport {
  TriState verdict = TriState::Yes;
  std::size_t range = 0;
  std::string method = "homology-proxy";
  std::vector<FinalityEntry> entries;
};

FinalityReport is_homotopy_final_proxy(const FinFunctor& l, std::size_t dim = 4, const Guards& guards = {});

// Subobjects of X lying inside some part, ordered by inclusion, with the
// functor from the subset poset of the cover sending σ to V_σ.
struct CoverSieve {
  CategoryPtr ambient;                 // poset of such subobjects
  std::vector<SubSSet> objects;
  FinFunctor gamma;                    // subset poset -> ambient
};

// Throws AmbientTooLarge when a part has more than 16 nondegenerate simplices.
CoverSieve cover_sieve(const CechCover& cover);

// The subobjects of the cover sieve together with X as apex, each realized as
// a simplicial set with inclusions along the order, and the sieve R on X of
// subobjects lying inside a part.
struct SubobjectAmbient {
  CategoryPtr category;
  ObjId apex = -1;
  std::vector<SubSSet> objects;
  SSetDiagram diagram;
  ExplicitSieve cover;
};

SubobjectAmbient subobject_ambient(const CechCover& cover);

// 𝓕_* : hocolim over X[R R] -> hocolim over X[R] of the realized bottoms,
// with η = ρ2. An isomorphism through `range` needs the cone acyclic one
// degree further.
struct ForgetfulComparison {
  GeneralizedSievePtr two;
  GeneralizedSievePtr one;
  Hocolim source;
  Hocolim target;
  SimplicialMap map;
  std::optional<std::size_t> cone_acyclic;
  std::size_t range = 0;
  std::string method = "homology-proxy";

  bool holds() const { return cone_acyclic && *cone_acyclic >= range + 1; }
};

ForgetfulComparison forgetful_comparison(const CechCover& cover, const Guards& guards = {});

}  // namespace catsieve
