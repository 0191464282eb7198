#include "documents.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "catsieve/catalog.hpp"

namespace catsieve::cli {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Malformed, what); }

const json& field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) malformed("missing field '" + key + "'");
  return j.at(key);
}

std::string text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  malformed("expected a string or integer, got " + j.dump());
}

std::vector<std::string> texts(const json& j) {
  if (!j.is_array()) malformed("expected an array, got " + j.dump());
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(text(v));
  return out;
}

ObjId object_in(const FinCategory& c, const json& j) {
  auto o = c.find_object(text(j));
  if (!o) throw Error(ErrorKind::UnknownObject, "unknown object '" + text(j) + "'");
  return *o;
}

MorId morphism_in(const FinCategory& c, const json& j) {
  auto f = c.find_morphism(text(j));
  if (!f) throw Error(ErrorKind::UnknownMorphism, "unknown morphism '" + text(j) + "'");
  return *f;
}

int simplex_in(const SSet& x, std::size_t n, const json& j) {
  auto s = x.find(n, text(j));
  if (!s) malformed("no " + std::to_string(n) + "-simplex '" + text(j) + "'");
  return *s;
}

}  // namespace

Document Document::at(const std::string& key) const {
  const json& v = field(value, key);
  if (v.is_string()) return load(base / v.get<std::string>());
  return Document{v, base};
}

Document load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return Document{json::parse(in), path.parent_path()};
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

CategoryPtr parse_category(const Document& d) {
  const json& j = d.value;
  if (j.is_object() && j.contains("catalog")) return named_category(text(j.at("catalog")));
  RawCategory raw;
  raw.objects = texts(field(j, "objects"));
  for (const auto& m : field(j, "morphisms")) raw.morphisms.push_back({text(field(m, "id")), text(field(m, "src")), text(field(m, "dst"))});
  for (const auto& [o, m] : field(j, "identities").items()) raw.identities[o] = text(m);
  if (j.contains("compose"))
    for (const auto& [key, h] : j.at("compose").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) malformed("composite key '" + key + "' is not of the form g,f");
      raw.compose[{key.substr(0, comma), key.substr(comma + 1)}] = text(h);
    }
  return std::make_shared<FinCategory>(FinCategory::validate(raw));
}

json category_to_json(const FinCategory& c) {
  RawCategory raw = c.to_raw();
  json out{{"objects", raw.objects}, {"morphisms", json::array()}, {"identities", raw.identities}, {"compose", json::object()}};
  for (const auto& m : raw.morphisms) out["morphisms"].push_back({{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
  for (const auto& [key, h] : raw.compose) out["compose"][key.first + "," + key.second] = h;
  return out;
}

FinSet parse_finset(const json& j) {
  if (j.is_array()) return FinSet(texts(j));
  if (j.is_number_unsigned()) return FinSet::range(j.get<std::size_t>());
  return FinSet(texts(field(j, "elements")));
}

SetFunction parse_function(const json& j, const std::optional<FinSet>& dom, const std::optional<FinSet>& cod) {
  FinSet a = j.contains("dom") ? parse_finset(j.at("dom")) : dom ? *dom : (malformed("function without 'dom'"), FinSet());
  FinSet b = j.contains("cod") ? parse_finset(j.at("cod")) : cod ? *cod : (malformed("function without 'cod'"), FinSet());
  std::map<std::string, std::string> m;
  for (const auto& [x, y] : field(j, "map").items()) m[x] = text(y);
  return SetFunction::from_labels(a, b, m);
}

ExplicitSieve parse_explicit_sieve(const json& j, const CategoryPtr& c) {
  ExplicitSieve s{c, object_in(*c, field(j, "apex")), {}};
  for (const auto& m : field(j, "morphisms")) s.members.push_back(morphism_in(*c, m));
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  s.validate();
  return s;
}

GeneratedSieve parse_generated_sieve(const json& j) {
  GeneratedSieve s{parse_finset(field(j, "apex")), {}};
  for (const auto& g : field(j, "generators")) s.generators.push_back(parse_function(g, std::nullopt, s.apex));
  for (const auto& g : s.generators)
    if (!(g.cod() == s.apex)) throw Error(ErrorKind::CodomainMismatch, "generator does not land in the apex");
  return s;
}

json sieve_to_json(const ExplicitSieve& s) {
  json members = json::array();
  for (MorId f : s.members) members.push_back(s.ambient->morphism_name(f));
  return {{"apex", s.ambient->object_name(s.apex)}, {"morphisms", members}};
}

TopologyAssignment parse_topology(const json& j, const CategoryPtr& c) {
  TopologyAssignment t{c, std::vector<std::vector<ExplicitSieve>>(c->object_count())};
  for (const auto& [o, sieves] : field(j, "covers").items()) {
    const ObjId x = object_in(*c, o);
    for (const auto& members : sieves) t.covers[x].push_back(parse_explicit_sieve({{"apex", o}, {"morphisms", members}}, c));
  }
  return t;
}

json topology_to_json(const TopologyAssignment& t) {
  json covers = json::object();
  for (ObjId o = 0; o < static_cast<ObjId>(t.covers.size()); ++o) {
    json list = json::array();
    for (const auto& s : t.covers[o]) list.push_back(sieve_to_json(s)["morphisms"]);
    covers[t.ambient->object_name(o)] = list;
  }
  return {{"covers", covers}};
}

Presheaf parse_presheaf(const json& j, const CategoryPtr& c) {
  Presheaf p{c, std::vector<FinSet>(c->object_count()), {}};
  const json& sets = field(j, "sets");
  for (ObjId o = 0; o < static_cast<ObjId>(c->object_count()); ++o) p.sets[o] = parse_finset(field(sets, c->object_name(o)));
  const json maps = j.value("maps", json::object());
  for (MorId f = 0; f < static_cast<MorId>(c->morphism_count()); ++f) {
    const FinSet& from = p.sets[c->dst(f)];
    const FinSet& to = p.sets[c->src(f)];
    if (maps.contains(c->morphism_name(f)))
      p.maps.push_back(parse_function({{"map", maps.at(c->morphism_name(f))}}, from, to));
    else if (c->is_identity(f))
      p.maps.push_back(identity(from));
    else
      malformed("presheaf has no map for '" + c->morphism_name(f) + "'");
  }
  p.validate();
  return p;
}

FinFunctor parse_functor(const json& j, const CategoryPtr& source, const CategoryPtr& target) {
  std::vector<ObjId> objs(source->object_count());
  std::vector<MorId> mors(source->morphism_count());
  const json& objects = field(j, "objects");
  for (ObjId o = 0; o < static_cast<ObjId>(source->object_count()); ++o)
    objs[o] = object_in(*target, field(objects, source->object_name(o)));
  const json arrows = j.value("morphisms", json::object());
  for (MorId f = 0; f < static_cast<MorId>(source->morphism_count()); ++f) {
    if (arrows.contains(source->morphism_name(f)))
      mors[f] = morphism_in(*target, arrows.at(source->morphism_name(f)));
    else if (source->is_identity(f))
      mors[f] = target->identity(objs[source->src(f)]);
    else
      malformed("functor has no image for '" + source->morphism_name(f) + "'");
  }
  return FinFunctor(source, target, objs, mors);
}

SSetPtr parse_sset(const Document& d) {
  const json& j = d.value;
  const auto dim = field(j, "dim").get<std::size_t>();
  if (j.contains("facets")) {
    const auto vertices = texts(field(j, "vertices"));
    std::vector<std::vector<int>> facets;
    for (const auto& f : field(j, "facets")) {
      std::vector<int> facet;
      for (const auto& v : f) {
        auto it = std::find(vertices.begin(), vertices.end(), text(v));
        if (it == vertices.end()) malformed("unknown vertex '" + text(v) + "'");
        facet.push_back(static_cast<int>(it - vertices.begin()));
      }
      std::sort(facet.begin(), facet.end());
      facets.push_back(std::move(facet));
    }
    return std::make_shared<SSet>(simplicial_complex(vertices, facets, dim));
  }
  SSet x;
  const json& simplices = field(j, "simplices");
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level;
    level.labels = texts(field(simplices, std::to_string(n)));
    level.faces.assign(n == 0 ? 0 : n + 1, std::vector<int>(level.labels.size(), -1));
    level.degeneracies.assign(n < dim ? n + 1 : 0, std::vector<int>(level.labels.size(), -1));
    x.levels.push_back(std::move(level));
  }
  auto fill = [&](const char* key, std::size_t n, std::size_t other, std::vector<std::vector<int>>& table) {
    const json& all = field(j, key);
    const json& level = field(all, std::to_string(n));
    for (int s = 0; s < static_cast<int>(x.size(n)); ++s) {
      const json& images = field(level, x.label(n, s));
      if (!images.is_array() || images.size() != n + 1)
        malformed(std::string(key) + " of '" + x.label(n, s) + "' must list " + std::to_string(n + 1) + " simplices");
      for (std::size_t i = 0; i <= n; ++i) table[i][s] = simplex_in(x, other, images[i]);
    }
  };
  for (std::size_t n = 1; n <= dim; ++n) fill("faces", n, n - 1, x.levels[n].faces);
  for (std::size_t n = 0; n < dim; ++n) fill("degeneracies", n, n + 1, x.levels[n].degeneracies);
  x.validate();
  return std::make_shared<SSet>(std::move(x));
}

SimplicialMap parse_simplicial_map(const json& j, const SSetPtr& source, const SSetPtr& target) {
  if (source->dim() != target->dim()) throw Error(ErrorKind::Mismatch, "simplicial sets truncated at different dimensions");
  SimplicialMap m{source, target, {}};
  for (std::size_t n = 0; n <= source->dim(); ++n) {
    const json& level = field(j, std::to_string(n));
    std::vector<int> values;
    for (int s = 0; s < static_cast<int>(source->size(n)); ++s)
      values.push_back(simplex_in(*target, n, field(level, source->label(n, s))));
    m.levels.push_back(std::move(values));
  }
  m.validate();
  return m;
}

SSetDiagram parse_diagram(const Document& d) {
  SSetDiagram out{parse_category(d.at("shape")), {}, {}};
  const FinCategory& c = *out.shape;
  const Document values = d.at("values");
  for (ObjId o = 0; o < static_cast<ObjId>(c.object_count()); ++o) out.values.push_back(parse_sset(values.at(c.object_name(o))));
  const json maps = d.value.value("maps", json::object());
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
    const SSetPtr& a = out.values[c.src(f)];
    const SSetPtr& b = out.values[c.dst(f)];
    if (maps.contains(c.morphism_name(f))) {
      out.maps.push_back(parse_simplicial_map(maps.at(c.morphism_name(f)), a, b));
    } else if (c.is_identity(f)) {
      out.maps.push_back(identity_map(a));
    } else if (b->size(0) == 1) {
      SimplicialMap m{a, b, {}};
      for (std::size_t n = 0; n <= a->dim(); ++n) m.levels.emplace_back(a->size(n), b->apply(0, 0, std::vector<int>(n + 1, 0)));
      out.maps.push_back(std::move(m));
    } else {
      malformed("diagram has no map for '" + c.morphism_name(f) + "'");
    }
  }
  out.validate();
  return out;
}

std::vector<SubSSet> parse_cover(const json& parts, const SSetPtr& x) {
  if (!parts.is_array() || parts.empty()) malformed("a cover is a nonempty list of simplex lists");
  std::vector<SubSSet> out;
  for (const auto& p : parts) {
    const auto ids = texts(p);
    for (const auto& id : ids) {
      bool found = false;
      for (std::size_t n = 0; n <= x->dim() && !found; ++n) found = x->find(n, id).has_value();
      if (!found) malformed("cover mentions unknown simplex '" + id + "'");
    }
    out.push_back(generated_subobject(x, ids));
  }
  return out;
}

json homology_to_json(const HomologyGroups& h) {
  json out = json::array();
  for (const auto& g : h.groups) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.convert_to<long long>());
    out.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}, {"valid_range", {0, h.valid_max}}});
  }
  return out;
}

}  // namespace catsieve::cli
