#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catsieve/errors.hpp"
#include "catsieve/fincat.hpp"

namespace catsieve {

// Visits every cocone on `d` with nadir `z` in canonical order. Each leg
// choice consumes one unit of `budget`. Returning false from `visit` stops
// the enumeration.
void for_each_cocone(const FinFunctor& d, ObjId z, Budget& budget,
                     const std::function<bool(const std::vector<MorId>&)>& visit);

std::vector<std::vector<MorId>> all_cocones(const FinFunctor& d, ObjId z, Budget& budget);

struct UniversalityResult {
  bool universal = false;
  // On failure: the nadir Z where uniqueness or existence breaks, a cocone
  // under the diagram at Z, and the mediating arrows that produce it.
  ObjId nadir = -1;
  std::vector<MorId> cocone;
  std::vector<MorId> mediators;
  std::string reason;
};

// Caches the cocones to every ambient object so several candidates can be
// tested against the same diagram.
class CoconeTable {
 public:
  CoconeTable(FinFunctor d, const Guards& guards);

  const FinFunctor& diagram() const { return d_; }
  const std::vector<std::vector<MorId>>& cocones_to(ObjId z) const { return cocones_[z]; }
  UniversalityResult check(ObjId nadir, const std::vector<MorId>& legs) const;

 private:
  FinFunctor d_;
  std::vector<std::vector<std::vector<MorId>>> cocones_;
};

UniversalityResult check_universal_cocone(const Cocone& c, const Guards& guards);
std::optional<Cocone> colim_by_universal_property(const FinFunctor& d, const Guards& guards);

struct PullbackSquare {
  ObjId apex;
  MorId first;   // apex -> src f
  MorId second;  // apex -> src g
};

// Searches for a pullback of the cospan f, g by its universal property.
std::optional<PullbackSquare> find_pullback(const FinCategory& c, MorId f, MorId g);

struct DesignatedCoproduct {
  std::vector<ObjId> parts;
  ObjId apex;
  std::vector<MorId> inclusions;
};

struct CoproductReport {
  bool coproducts_valid = true;
  bool disjoint = true;
  bool stable = true;
  // Unset when the category has no initial object.
  std::optional<bool> maps_into_initial_are_initial;
  std::vector<std::string> findings;
};

CoproductReport check_coproduct_properties(const CategoryPtr& c, const std::vector<DesignatedCoproduct>& coproducts,
                                           const Guards& guards);

}  // namespace catsieve
