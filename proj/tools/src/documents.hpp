#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "catsieve/bisimplicial.hpp"
#include "catsieve/fincat.hpp"
#include "catsieve/finset.hpp"
#include "catsieve/homology.hpp"
#include "catsieve/sieves.hpp"
#include "catsieve/simplicial.hpp"
#include "catsieve/topology.hpp"

namespace catsieve::cli {

using nlohmann::json;
namespace fs = std::filesystem;

// Unreadable files and documents that do not parse as JSON.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A JSON value together with the directory that relative references resolve against.
struct Document {
  json value;
  fs::path base;

  // A string field is read as a path to another document.
  Document at(const std::string& key) const;
  bool has(const std::string& key) const { return value.is_object() && value.contains(key); }
};

Document load(const fs::path& path);

// {"objects", "morphisms":[{"id","src","dst"}], "identities":{obj:mor}, "compose":{"g,f":h}}
// or {"catalog": name}.
CategoryPtr parse_category(const Document& d);
json category_to_json(const FinCategory& c);

// {"elements":[...]} or a bare array.
FinSet parse_finset(const json& j);
// {"dom", "cod", "map":{a:b}}; dom or cod may be supplied by context.
SetFunction parse_function(const json& j, const std::optional<FinSet>& dom = {}, const std::optional<FinSet>& cod = {});

// {"apex": obj, "morphisms":[ids]} over a category.
ExplicitSieve parse_explicit_sieve(const json& j, const CategoryPtr& c);
// {"apex": finset, "generators":[functions into the apex]}.
GeneratedSieve parse_generated_sieve(const json& j);
json sieve_to_json(const ExplicitSieve& s);

// {"covers": {obj: [[morphism ids], ...]}}
TopologyAssignment parse_topology(const json& j, const CategoryPtr& c);
json topology_to_json(const TopologyAssignment& t);

// {"sets": {obj: [elements]}, "maps": {mor: {x: y}}} with maps[f] : F(dst f) -> F(src f).
Presheaf parse_presheaf(const json& j, const CategoryPtr& c);

// {"objects": {a: b}, "morphisms": {f: g}}; unlisted identities go to identities.
FinFunctor parse_functor(const json& j, const CategoryPtr& source, const CategoryPtr& target);

// {"dim":N, "simplices":{n:[ids]}, "faces":{n:{id:[d0,...,dn]}}, "degeneracies":{n:{id:[s0,...,sn]}}}
// or {"dim":N, "vertices":[...], "facets":[[vertex,...],...]}.
SSetPtr parse_sset(const Document& d);
// {n: {id: id}} per level.
SimplicialMap parse_simplicial_map(const json& j, const SSetPtr& source, const SSetPtr& target);

// {"shape": category, "values": {obj: sset}, "maps": {mor: levels}}. Identity
// maps may be omitted, as may maps into a one-vertex value.
SSetDiagram parse_diagram(const Document& d);

// Parts as lists of simplex ids; each generates its subobject.
std::vector<SubSSet> parse_cover(const json& parts, const SSetPtr& x);

json homology_to_json(const HomologyGroups& h);

}  // namespace catsieve::cli
