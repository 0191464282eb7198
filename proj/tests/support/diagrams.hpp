#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "catsieve/bisimplicial.hpp"
#include "catsieve/catalog.hpp"
#include "catsieve/simplicial.hpp"

namespace testkit {

using namespace catsieve;

inline SimplicialMap constant_map(const SSetPtr& x, const SSetPtr& y, int vertex) {
  SimplicialMap m{x, y, {}};
  for (std::size_t n = 0; n <= x->dim(); ++n)
    m.levels.emplace_back(x->size(n), y->apply(0, vertex, std::vector<int>(n + 1, 0)));
  return m;
}

// Arrows between equal values act as the identity; arrows into a point
// collapse. Anything else must be supplied in `extra` by morphism name.
inline SSetDiagram diagram(const CategoryPtr& shape, const std::map<std::string, SSetPtr>& values,
                           const std::map<std::string, SimplicialMap>& extra = {}) {
  SSetDiagram d{shape, {}, {}};
  for (ObjId o = 0; o < static_cast<ObjId>(shape->object_count()); ++o) d.values.push_back(values.at(shape->object_name(o)));
  for (MorId f = 0; f < static_cast<MorId>(shape->morphism_count()); ++f) {
    const auto& src = d.values[shape->src(f)];
    const auto& dst = d.values[shape->dst(f)];
    if (auto it = extra.find(shape->morphism_name(f)); it != extra.end())
      d.maps.push_back(it->second);
    else if (src == dst)
      d.maps.push_back(identity_map(src));
    else if (dst->size(0) == 1)
      d.maps.push_back(constant_map(src, dst, 0));
    else
      throw std::logic_error("no map supplied for " + shape->morphism_name(f));
  }
  d.validate();
  return d;
}

inline SSetPtr share(SSet x) { return std::make_shared<SSet>(std::move(x)); }

}  // namespace testkit
