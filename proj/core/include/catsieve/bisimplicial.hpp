#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "catsieve/errors.hpp"
#include "catsieve/fincat.hpp"
#include "catsieve/simplicial.hpp"

namespace catsieve {

// K_{n,m} for 0 <= n, m <= N. The first index is horizontal.
struct BiSSet {
  struct Cell {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> hfaces;   // [i][x] into K_{n-1,m}
    std::vector<std::vector<int>> vfaces;   // [j][x] into K_{n,m-1}
    std::vector<std::vector<int>> hdegens;  // [i][x] into K_{n+1,m}
    std::vector<std::vector<int>> vdegens;  // [j][x] into K_{n,m+1}
  };
  std::size_t dim = 0;
  std::vector<std::vector<Cell>> cells;

  std::size_t size(std::size_t n, std::size_t m) const { return cells[n][m].labels.size(); }
  // Both directions simplicial and commuting; throws NotSimplicial.
  void validate() const;
  // Rows and columns as simplicial sets.
  SSet row(std::size_t m) const;
  SSet column(std::size_t n) const;
};

using BiSSetPtr = std::shared_ptr<const BiSSet>;

struct BiSSetMap {
  BiSSetPtr source;
  BiSSetPtr target;
  std::vector<std::vector<std::vector<int>>> levels;  // [n][m][x]

  void validate() const;
  bool operator==(const BiSSetMap& other) const { return levels == other.levels; }
};

BiSSetMap compose(const BiSSetMap& g, const BiSSetMap& f);
BiSSetMap identity_map(const BiSSetPtr& k);

// diag(K)_n = K_{n,n} with d_i = dh_i ∘ dv_i and s_i = sh_i ∘ sv_i.
SSet diag(const BiSSet& k);
SimplicialMap diag(const BiSSetMap& f, const SSetPtr& source_diag, const SSetPtr& target_diag);

// K_{n,m} = X_m in every column.
BiSSet horizontally_constant(const SSet& x);
// K_{n,m} = X_m × Δ¹_n with the interval acting horizontally.
BiSSet product_with_interval(const BiSSet& k);
// (Y⊙K)_{n,m} = ∐_{K_n} Y_m.
BiSSet odot(const SSet& y, const SSet& k);

// A diagram of simplicial sets on a finite category. maps[f] : D(src f) -> D(dst f).
struct SSetDiagram {
  CategoryPtr shape;
  std::vector<SSetPtr> values;
  std::vector<SimplicialMap> maps;

  std::size_t dim() const { return values.empty() ? 0 : values.front()->dim(); }
  // Throws NotFunctor, NotSimplicial or UnboundedChains.
  void validate() const;
};

SSetDiagram precompose(const SSetDiagram& d, const FinFunctor& alpha);
SSetDiagram constant_diagram(const CategoryPtr& shape, const SSetPtr& value);

// srep(D)_{n,m} = ∐ over n-chains c of D(last c)_m, laid out chain by chain.
struct Replacement {
  SSetDiagram diagram;
  ChainTable chains;
  BiSSetPtr object;
  std::vector<std::vector<std::vector<int>>> offset;  // [n][m][chain]

  int index(std::size_t n, std::size_t m, int chain, int x) const { return offset[n][m][chain] + x; }
  // (chain, simplex of D(last chain)) for an element of K_{n,m}.
  std::pair<int, int> locate(std::size_t n, std::size_t m, int k) const;
};

Replacement srep(const SSetDiagram& d, const Guards& guards = {});

// α_# : srep(Dα) -> srep(D); relabels chains by α and keeps values.
BiSSetMap alpha_sharp(const FinFunctor& alpha, const Replacement& source, const Replacement& target);

// Components η_j : D(j) -> E(α j).
struct SSetDiagramMorphism {
  FinFunctor alpha;
  std::vector<SimplicialMap> eta;
};

// Throws NotNatural when η fails to commute with the diagram maps.
void validate(const SSetDiagramMorphism& m, const SSetDiagram& d, const SSetDiagram& e);

// η̂ : srep(D) -> srep(Eα), acting on values over a fixed chain.
BiSSetMap eta_hat(const std::vector<SimplicialMap>& eta, const Replacement& source, const Replacement& target);

struct Hocolim {
  Replacement replacement;
  SSetPtr space;
};

Hocolim hocolim(const SSetDiagram& d, const Guards& guards = {});

// diag(α_# ∘ η̂) : hocolim D -> hocolim E.
SimplicialMap induced_hocolim_map(const SSetDiagramMorphism& m, const Hocolim& d, const Hocolim& e,
                                  const Guards& guards = {});

// Sends (chain, x) to the image of x in a cocone vertex; legs[j] : D(j) -> X.
SimplicialMap hocolim_to_cocone(const Hocolim& d, const std::vector<SimplicialMap>& legs);

}  // namespace catsieve
