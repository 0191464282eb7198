#include "catsieve/cech.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "catsieve/catalog.hpp"
#include "catsieve/homology.hpp"

namespace catsieve {

namespace {

std::string subset_name(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<std::vector<int>> blank_tables(std::size_t count) { return std::vector<std::vector<int>>(count); }

SSet::Level blank_level(std::size_t n, std::size_t dim) {
  SSet::Level l;
  l.faces = blank_tables(n == 0 ? 0 : n + 1);
  l.degeneracies = blank_tables(n < dim ? n + 1 : 0);
  return l;
}

// Tuples of length n + 1 over a sorted alphabet of candidates, in lexicographic order.
void for_each_tuple(const std::vector<int>& alphabet, std::size_t len, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur(len);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == len) {
      visit(cur);
      return;
    }
    for (int a : alphabet) {
      cur[pos] = a;
      rec(pos + 1);
    }
  };
  rec(0);
}

std::string tuple_label(const std::vector<int>& t, const std::function<std::string(int)>& name) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + name(t[i]);
  return out;
}

// Sets of tuples with equal images, one table per level, in lexicographic order.
struct FiberTuples {
  std::vector<std::vector<int>> tuples;
  std::map<std::vector<int>, int> index;
};

FiberTuples fiber_tuples(const std::vector<int>& image, std::size_t len, std::size_t guard) {
  std::map<int, std::vector<int>> fibers;
  for (int y = 0; y < static_cast<int>(image.size()); ++y) fibers[image[y]].push_back(y);
  FiberTuples out;
  for (const auto& [x, ys] : fibers) {
    for_each_tuple(ys, len, [&](const std::vector<int>& t) { out.tuples.push_back(t); });
    if (out.tuples.size() > guard)
      throw Error(ErrorKind::AmbientTooLarge, "fibre products exceed " + std::to_string(guard) + " simplices");
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  for (std::size_t i = 0; i < out.tuples.size(); ++i) out.index[out.tuples[i]] = static_cast<int>(i);
  return out;
}


std::string subobject_name(const SSet& x, const SubSSet& s) {
  std::vector<std::string> labels;
  for (std::size_t n = 0; n <= x.dim(); ++n)
    for (int c = 0; c < static_cast<int>(x.size(n)); ++c)
      if (s.members[n][c] && !x.is_degenerate(n, c)) labels.push_back(x.label(n, c));
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

bool contains(const SubSSet& a, const SubSSet& b) {
  for (std::size_t n = 0; n < a.members.size(); ++n)
    for (std::size_t c = 0; c < a.members[n].size(); ++c)
      if (b.members[n][c] && !a.members[n][c]) return false;
  return true;
}

// Inclusion order on distinct subobjects; `sorted` follows the object ids.
CategoryPtr subobject_poset(const SSet& x, const std::vector<SubSSet>& objects, std::vector<SubSSet>& sorted) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> less;
  for (const auto& s : objects) names.push_back(subobject_name(x, s));
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      if (i != j && contains(objects[j], objects[i])) less.emplace_back(names[i], names[j]);
  CategoryPtr ambient = poset(names, less);
  sorted.assign(objects.size(), objects.front());
  for (std::size_t i = 0; i < objects.size(); ++i) sorted[ambient->object(names[i])] = objects[i];
  return ambient;
}

}  // namespace

CechCover cech_cover(const SSetPtr& x, const std::vector<SubSSet>& parts, const Guards& guards) {
  if (parts.empty()) throw Error(ErrorKind::NotSubobject, "a cover needs at least one part");
  if (parts.size() > 10) throw Error(ErrorKind::AmbientTooLarge, "more than 10 parts");
  for (const auto& p : parts) {
    if (p.ambient != x) throw Error(ErrorKind::NotSubobject, "part of a different simplicial set");
    p.validate();
  }
  const int a = static_cast<int>(parts.size());
  const std::size_t dim = x->dim();

  std::vector<std::string> names;
  std::vector<std::vector<int>> by_mask(std::size_t{1} << a);
  std::vector<std::pair<std::string, std::string>> covers;
  for (int mask = 1; mask < (1 << a); ++mask) {
    for (int i = 0; i < a; ++i)
      if (mask >> i & 1) by_mask[mask].push_back(i);
    names.push_back(subset_name(by_mask[mask]));
  }
  for (int mask = 1; mask < (1 << a); ++mask)
    for (int i = 0; i < a; ++i)
      if ((mask >> i & 1) && mask != (1 << i)) covers.emplace_back(subset_name(by_mask[mask]), subset_name(by_mask[mask & ~(1 << i)]));
  CategoryPtr shape = poset(names, covers);

  CechCover out{x, parts, {}, {shape, {}, {}}, {}, {}, {}, nullptr, nullptr, {}};
  out.subsets.resize(shape->object_count());
  std::vector<int> object_of_mask(std::size_t{1} << a, -1);
  for (int mask = 1; mask < (1 << a); ++mask) {
    ObjId o = shape->object(subset_name(by_mask[mask]));
    out.subsets[o] = by_mask[mask];
    object_of_mask[mask] = o;
  }

  // global -> local index per object and level
  std::vector<std::vector<std::unordered_map<int, int>>> local(shape->object_count());
  for (ObjId o = 0; o < static_cast<ObjId>(shape->object_count()); ++o) {
    SubSSet s = parts[out.subsets[o][0]];
    for (int i : out.subsets[o]) s = intersect(s, parts[i]);
    auto [value, inc] = realize(s);
    out.diagram.values.push_back(value);
    out.inclusions.push_back(inc);
    local[o].resize(dim + 1);
    for (std::size_t n = 0; n <= dim; ++n)
      for (int k = 0; k < static_cast<int>(inc.levels[n].size()); ++k) local[o][n][inc.levels[n][k]] = k;
  }
  auto transport = [&](ObjId from, ObjId to, std::size_t n, int k) {
    return local[to][n].at(out.inclusions[from](n, k));
  };
  for (MorId f = 0; f < static_cast<MorId>(shape->morphism_count()); ++f) {
    const ObjId s = shape->src(f), t = shape->dst(f);
    SimplicialMap m{out.diagram.values[s], out.diagram.values[t], {}};
    for (std::size_t n = 0; n <= dim; ++n) {
      std::vector<int> level;
      for (int k = 0; k < static_cast<int>(out.diagram.values[s]->size(n)); ++k) level.push_back(transport(s, t, n, k));
      m.levels.push_back(std::move(level));
    }
    out.diagram.maps.push_back(std::move(m));
  }
  out.hocolim = hocolim(out.diagram, guards);
  out.to_space = hocolim_to_cocone(out.hocolim, out.inclusions);

  // The Čech nerve over ordered tuples of parts.
  auto nerve = std::make_shared<BiSSet>();
  nerve->dim = dim;
  nerve->cells.assign(dim + 1, std::vector<BiSSet::Cell>(dim + 1));
  std::vector<int> alphabet(a);
  for (int i = 0; i < a; ++i) alphabet[i] = i;
  std::vector<std::vector<std::vector<int>>> tuples(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n)
    for_each_tuple(alphabet, n + 1, [&](const std::vector<int>& t) { tuples[n].push_back(t); });
  auto tuple_index = [&](const std::vector<int>& t) {
    int idx = 0;
    for (int v : t) idx = idx * a + v;
    return idx;
  };
  auto object_of = [&](const std::vector<int>& t) {
    int mask = 0;
    for (int v : t) mask |= 1 << v;
    return object_of_mask[mask];
  };
  std::vector<std::vector<std::vector<int>>> offset(dim + 1, std::vector<std::vector<int>>(dim + 1));
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) {
      int total = 0;
      for (const auto& t : tuples[n]) {
        offset[n][m].push_back(total);
        total += static_cast<int>(out.diagram.values[object_of(t)]->size(m));
      }
      if (static_cast<std::size_t>(total) > guards.simplices_per_level)
        throw Error(ErrorKind::AmbientTooLarge, "Čech nerve exceeds the simplex guard");
    }
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) {
      auto& cell = nerve->cells[n][m];
      cell.hfaces.resize(n == 0 ? 0 : n + 1);
      cell.vfaces.resize(m == 0 ? 0 : m + 1);
      cell.hdegens.resize(n < dim ? n + 1 : 0);
      cell.vdegens.resize(m < dim ? m + 1 : 0);
      for (std::size_t ti = 0; ti < tuples[n].size(); ++ti) {
        const auto& t = tuples[n][ti];
        const ObjId o = object_of(t);
        const SSet& v = *out.diagram.values[o];
        for (int k = 0; k < static_cast<int>(v.size(m)); ++k) {
          cell.labels.push_back(subset_name(t) + "|" + v.label(m, k));
          for (std::size_t i = 0; n > 0 && i <= n; ++i) {
            auto u = t;
            u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
            cell.hfaces[i].push_back(offset[n - 1][m][tuple_index(u)] + transport(o, object_of(u), m, k));
          }
          for (std::size_t i = 0; n < dim && i <= n; ++i) {
            auto u = t;
            u.insert(u.begin() + static_cast<std::ptrdiff_t>(i), t[i]);
            cell.hdegens[i].push_back(offset[n + 1][m][tuple_index(u)] + k);
          }
          for (std::size_t j = 0; m > 0 && j <= m; ++j) cell.vfaces[j].push_back(offset[n][m - 1][ti] + v.face(m, j, k));
          for (std::size_t j = 0; m < dim && j <= m; ++j)
            cell.vdegens[j].push_back(offset[n][m + 1][ti] + v.degeneracy(m, j, k));
        }
      }
    }
  out.nerve = nerve;
  out.nerve_diagonal = std::make_shared<SSet>(diag(*nerve));
  out.nerve_to_space = SimplicialMap{out.nerve_diagonal, x, {}};
  for (std::size_t n = 0; n <= dim; ++n) {
    std::vector<int> level;
    for (std::size_t ti = 0; ti < tuples[n].size(); ++ti) {
      const ObjId o = object_of(tuples[n][ti]);
      for (int k = 0; k < static_cast<int>(out.diagram.values[o]->size(n)); ++k) level.push_back(out.inclusions[o](n, k));
    }
    out.nerve_to_space.levels.push_back(std::move(level));
  }
  return out;
}

SSet cech_set(std::size_t b, std::size_t dim) {
  return cech_map(SetFunction(FinSet::range(b), FinSet::range(b == 0 ? 0 : 1), std::vector<int>(b, 0)), dim);
}

SSet cech_map(const SetFunction& f, std::size_t dim) {
  std::vector<FiberTuples> levels;
  for (std::size_t n = 0; n <= dim; ++n) levels.push_back(fiber_tuples(f.map(), n + 1, Guards{}.simplices_per_level));
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level = blank_level(n, dim);
    for (const auto& t : levels[n].tuples) {
      level.labels.push_back(tuple_label(t, [&](int y) { return f.dom().label(y); }));
      for (std::size_t i = 0; n > 0 && i <= n; ++i) {
        auto u = t;
        u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
        level.faces[i].push_back(levels[n - 1].index.at(u));
      }
      for (std::size_t i = 0; n < dim && i <= n; ++i) {
        auto u = t;
        u.insert(u.begin() + static_cast<std::ptrdiff_t>(i), t[i]);
        level.degeneracies[i].push_back(levels[n + 1].index.at(u));
      }
    }
    x.levels.push_back(std::move(level));
  }
  return x;
}

CechMap cech_map(const SimplicialMap& f, const Guards& guards) {
  const SSet& y = *f.source;
  const std::size_t dim = y.dim();
  std::vector<std::vector<FiberTuples>> t(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) t[n].push_back(fiber_tuples(f.levels[m], n + 1, guards.simplices_per_level));
  auto k = std::make_shared<BiSSet>();
  k->dim = dim;
  k->cells.assign(dim + 1, std::vector<BiSSet::Cell>(dim + 1));
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) {
      auto& cell = k->cells[n][m];
      cell.hfaces.resize(n == 0 ? 0 : n + 1);
      cell.vfaces.resize(m == 0 ? 0 : m + 1);
      cell.hdegens.resize(n < dim ? n + 1 : 0);
      cell.vdegens.resize(m < dim ? m + 1 : 0);
      for (const auto& tup : t[n][m].tuples) {
        cell.labels.push_back("(" + tuple_label(tup, [&](int s) { return y.label(m, s); }) + ")");
        for (std::size_t i = 0; n > 0 && i <= n; ++i) {
          auto u = tup;
          u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
          cell.hfaces[i].push_back(t[n - 1][m].index.at(u));
        }
        for (std::size_t i = 0; n < dim && i <= n; ++i) {
          auto u = tup;
          u.insert(u.begin() + static_cast<std::ptrdiff_t>(i), tup[i]);
          cell.hdegens[i].push_back(t[n + 1][m].index.at(u));
        }
        for (std::size_t j = 0; m > 0 && j <= m; ++j) {
          auto u = tup;
          for (int& s : u) s = y.face(m, j, s);
          cell.vfaces[j].push_back(t[n][m - 1].index.at(u));
        }
        for (std::size_t j = 0; m < dim && j <= m; ++j) {
          auto u = tup;
          for (int& s : u) s = y.degeneracy(m, j, s);
          cell.vdegens[j].push_back(t[n][m + 1].index.at(u));
        }
      }
    }
  CechMap out{k, std::make_shared<SSet>(diag(*k)), {}};
  out.augmentation = SimplicialMap{out.diagonal, f.target, {}};
  for (std::size_t n = 0; n <= dim; ++n) {
    std::vector<int> level;
    for (const auto& tup : t[n][n].tuples) level.push_back(f(n, tup[0]));
    out.augmentation.levels.push_back(std::move(level));
  }
  return out;
}

SimplexCategory simplex_category(const SSetPtr& x) {
  const std::size_t dim = x->dim();
  SimplexCategory out;
  FinCategory::Builder b;
  std::map<std::pair<std::size_t, int>, ObjId> object_of;
  std::set<std::string> used;
  for (std::size_t n = 0; n <= dim; ++n)
    for (int s = 0; s < static_cast<int>(x->size(n)); ++s) {
      if (x->is_degenerate(n, s)) continue;
      std::string name = x->label(n, s);
      if (!used.insert(name).second) name += "@" + std::to_string(n);
      used.insert(name);
      object_of[{n, s}] = b.add_object(name);
      out.simplices.emplace_back(n, s);
    }
  // (target object, operator) -> builder morphism
  std::map<std::pair<ObjId, std::vector<int>>, MorId> morphism_of;
  std::vector<std::vector<int>> ops;
  for (const auto& [key, target] : object_of) {
    const auto [n, s] = key;
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
      std::vector<int> delta;
      for (std::size_t i = 0; i <= n; ++i)
        if (mask >> i & 1) delta.push_back(static_cast<int>(i));
      const std::size_t m = delta.size() - 1;
      const int z = x->apply(n, s, delta);
      if (x->is_degenerate(m, z)) continue;
      const ObjId source = object_of.at({m, z});
      std::string digits;
      for (int v : delta) digits += std::to_string(v);
      const bool identity = m == n;
      MorId f = b.add_morphism(identity ? "id_" + x->label(n, s) : x->label(n, s) + "/" + digits, source, target);
      if (identity) b.set_identity(target, f);
      morphism_of[{target, delta}] = f;
      ops.push_back(delta);
    }
  }
  std::vector<ObjId> target_of(ops.size());
  for (const auto& [key, f] : morphism_of) target_of[f] = key.first;
  auto built = b.build(
      [&](MorId g, MorId f) {
        std::vector<int> composite;
        for (int v : ops[f]) composite.push_back(ops[g][v]);
        return morphism_of.at({target_of[g], composite});
      },
      true);
  CategoryPtr cat = built.category;

  std::vector<SSetPtr> simplices;
  for (std::size_t n = 0; n <= dim; ++n) simplices.push_back(std::make_shared<SSet>(standard_simplex(n, dim)));
  out.diagram.shape = cat;
  out.diagram.values.resize(cat->object_count());
  std::vector<std::pair<std::size_t, int>> sorted(cat->object_count());
  for (std::size_t i = 0; i < out.simplices.size(); ++i) sorted[built.object[i]] = out.simplices[i];
  out.simplices = sorted;
  for (ObjId o = 0; o < static_cast<ObjId>(cat->object_count()); ++o) out.diagram.values[o] = simplices[out.simplices[o].first];
  out.operators.resize(cat->morphism_count());
  for (std::size_t i = 0; i < ops.size(); ++i) out.operators[built.morphism[i]] = ops[i];

  // Label lookup in each standard simplex.
  std::vector<std::vector<std::unordered_map<std::string, int>>> lookup(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) {
    lookup[n].resize(dim + 1);
    for (std::size_t p = 0; p <= dim; ++p)
      for (int k = 0; k < static_cast<int>(simplices[n]->size(p)); ++k) lookup[n][p][simplices[n]->label(p, k)] = k;
  }
  for (MorId f = 0; f < static_cast<MorId>(cat->morphism_count()); ++f) {
    const auto& delta = out.operators[f];
    const std::size_t m = out.simplices[cat->src(f)].first;
    const std::size_t n = out.simplices[cat->dst(f)].first;
    SimplicialMap map{simplices[m], simplices[n], {}};
    for (std::size_t p = 0; p <= dim; ++p) {
      std::vector<int> level;
      for (int k = 0; k < static_cast<int>(simplices[m]->size(p)); ++k) {
        std::string image;
        for (char ch : simplices[m]->label(p, k)) image += std::to_string(delta[ch - '0']);
        level.push_back(lookup[n][p].at(image));
      }
      map.levels.push_back(std::move(level));
    }
    out.diagram.maps.push_back(std::move(map));
  }
  return out;
}

SimplicialMap simplex_category_to_space(const SimplexCategory& s, const Hocolim& h, const SSetPtr& x) {
  std::vector<SimplicialMap> legs;
  for (const auto& [n, y] : s.simplices) {
    const SSet& delta = *s.diagram.values[legs.size()];
    SimplicialMap leg{s.diagram.values[legs.size()], x, {}};
    for (std::size_t p = 0; p <= x->dim(); ++p) {
      std::vector<int> level;
      for (int k = 0; k < static_cast<int>(delta.size(p)); ++k) {
        std::vector<int> theta;
        for (char ch : delta.label(p, k)) theta.push_back(ch - '0');
        level.push_back(x->apply(n, y, theta));
      }
      leg.levels.push_back(std::move(level));
    }
    legs.push_back(std::move(leg));
  }
  return hocolim_to_cocone(h, legs);
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes:
      return "yes";
    case TriState::No:
      return "no";
    case TriState::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

FinalityReport is_homotopy_final_proxy(const FinFunctor& l, std::size_t dim, const Guards& guards) {
  if (dim == 0) throw Error(ErrorKind::RangeExceedsValidity, "nerve homology needs truncation at least 1");
  FinalityReport r;
  r.range = dim - 1;
  const FinCategory& b = *l.target();
  bool inconclusive = false;
  for (ObjId o = 0; o < static_cast<ObjId>(b.object_count()); ++o) {
    CommaCategory comma = undercategory(l, o);
    FinalityEntry e{b.object_name(o), "", ""};
    const FinCategory& c = *comma.category;
    if (c.object_count() == 0) {
      e.status = "empty";
      r.verdict = TriState::No;
      r.entries.push_back(e);
      continue;
    }
    HomologyGroups h = homology(nerve(comma.category, dim, guards));
    e.homology = h.summary();
    const bool connected = h.groups[0].betti == 1 && h.groups[0].torsion.empty();
    bool acyclic = true;
    for (std::size_t k = 1; k < h.groups.size(); ++k)
      if (h.groups[k].betti != 0 || !h.groups[k].torsion.empty()) acyclic = false;
    if (!connected) {
      e.status = "disconnected";
      r.verdict = TriState::No;
    } else if (!acyclic) {
      e.status = "homology";
      r.verdict = TriState::No;
    } else if (initial_object(c)) {
      e.status = "initial";
    } else if (terminal_object(c)) {
      e.status = "terminal";
    } else {
      e.status = "acyclic";
      inconclusive = true;
    }
    r.entries.push_back(e);
  }
  if (r.verdict == TriState::Yes && inconclusive) r.verdict = TriState::Inconclusive;
  return r;
}

CoverSieve cover_sieve(const CechCover& cover) {
  const SSet& x = *cover.space;
  std::vector<std::vector<bool>> seen;
  std::vector<SubSSet> objects;
  for (const auto& part : cover.parts) {
    std::vector<std::pair<std::size_t, int>> cells;
    for (std::size_t n = 0; n <= x.dim(); ++n)
      for (int s = 0; s < static_cast<int>(x.size(n)); ++s)
        if (part.members[n][s] && !x.is_degenerate(n, s)) cells.emplace_back(n, s);
    if (cells.size() > 16) throw Error(ErrorKind::AmbientTooLarge, "a part has more than 16 nondegenerate simplices");
    for (unsigned mask = 0; mask < (1u << cells.size()); ++mask) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (mask >> i & 1) labels.push_back(x.label(cells[i].first, cells[i].second));
      SubSSet s = generated_subobject(cover.space, labels);
      std::size_t count = 0;
      for (const auto& [n, c] : cells) count += s.members[n][c];
      std::size_t nondegenerate = 0;
      for (std::size_t n = 0; n <= x.dim(); ++n)
        for (int c = 0; c < static_cast<int>(x.size(n)); ++c) nondegenerate += s.members[n][c] && !x.is_degenerate(n, c);
      if (count != labels.size() || nondegenerate != labels.size()) continue;
      std::vector<bool> flat;
      for (const auto& level : s.members) flat.insert(flat.end(), level.begin(), level.end());
      if (std::find(seen.begin(), seen.end(), flat) != seen.end()) continue;
      seen.push_back(flat);
      objects.push_back(std::move(s));
    }
  }
  std::vector<SubSSet> sorted;
  CategoryPtr ambient = subobject_poset(x, objects, sorted);

  const FinCategory& shape = *cover.diagram.shape;
  std::vector<ObjId> objs;
  for (ObjId o = 0; o < static_cast<ObjId>(shape.object_count()); ++o) {
    SubSSet v = cover.parts[cover.subsets[o][0]];
    for (int i : cover.subsets[o]) v = intersect(v, cover.parts[i]);
    objs.push_back(ambient->object(subobject_name(x, v)));
  }
  std::vector<MorId> mors;
  for (MorId f = 0; f < static_cast<MorId>(shape.morphism_count()); ++f) {
    ObjId s = objs[shape.src(f)], t = objs[shape.dst(f)];
    mors.push_back(s == t ? ambient->identity(s) : ambient->hom(s, t)[0]);
  }
  return CoverSieve{ambient, std::move(sorted), FinFunctor(cover.diagram.shape, ambient, objs, mors)};
}

SubobjectAmbient subobject_ambient(const CechCover& cover) {
  const SSet& x = *cover.space;
  std::vector<SubSSet> objects = cover_sieve(cover).objects;
  SubSSet whole{cover.space, {}};
  for (std::size_t n = 0; n <= x.dim(); ++n) whole.members.emplace_back(x.size(n), true);
  const bool has_whole = std::any_of(objects.begin(), objects.end(), [&](const SubSSet& s) { return contains(s, whole); });
  if (!has_whole) objects.push_back(whole);

  SubobjectAmbient out;
  out.category = subobject_poset(x, objects, out.objects);
  out.apex = out.category->object(subobject_name(x, whole));
  const FinCategory& c = *out.category;

  std::vector<SimplicialMap> inclusions;
  out.diagram.shape = out.category;
  for (const auto& s : out.objects) {
    auto [value, inc] = realize(s);
    out.diagram.values.push_back(value);
    inclusions.push_back(inc);
  }
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
    const ObjId a = c.src(f), b = c.dst(f);
    SimplicialMap m{out.diagram.values[a], out.diagram.values[b], {}};
    for (std::size_t n = 0; n <= x.dim(); ++n) {
      std::unordered_map<int, int> local;
      for (int k = 0; k < static_cast<int>(inclusions[b].levels[n].size()); ++k) local[inclusions[b].levels[n][k]] = k;
      std::vector<int> level;
      for (int g : inclusions[a].levels[n]) level.push_back(local.at(g));
      m.levels.push_back(std::move(level));
    }
    out.diagram.maps.push_back(std::move(m));
  }

  std::vector<MorId> members;
  for (ObjId a = 0; a < static_cast<ObjId>(c.object_count()); ++a) {
    const bool inside = std::any_of(cover.parts.begin(), cover.parts.end(),
                                    [&](const SubSSet& p) { return contains(p, out.objects[a]); });
    if (inside) members.push_back(a == out.apex ? c.identity(a) : c.hom(a, out.apex)[0]);
  }
  std::sort(members.begin(), members.end());
  out.cover = ExplicitSieve{out.category, out.apex, members};
  out.cover.validate();
  return out;
}

namespace {

SSetDiagram bottoms(const GeneralizedSieve& g, const SSetDiagram& values) {
  FinFunctor u(g.category, values.shape, g.diagram->values, g.diagram->arrows);
  return precompose(values, u);
}

}  // namespace

ForgetfulComparison forgetful_comparison(const CechCover& cover, const Guards& guards) {
  SubobjectAmbient a = subobject_ambient(cover);
  ForgetfulComparison out;
  out.two = build_generalized_sieve(a.category, a.apex, {a.cover, a.cover}, guards);
  out.one = build_generalized_sieve(a.category, a.apex, {a.cover}, guards);
  CategoryWorld w{a.category};
  auto f = forgetful_F(w, *out.two, *out.one);
  SSetDiagram d2 = bottoms(*out.two, a.diagram);
  SSetDiagram d1 = bottoms(*out.one, a.diagram);
  out.source = hocolim(d2, guards);
  out.target = hocolim(d1, guards);
  std::vector<SimplicialMap> eta;
  for (MorId m : f.eta) eta.push_back(a.diagram.maps[m]);
  SSetDiagramMorphism morphism{f.g, eta};
  validate(morphism, d2, d1);
  out.map = induced_hocolim_map(morphism, out.source, out.target, guards);
  out.cone_acyclic = cone_acyclic_through(out.map);
  const std::size_t dim = cover.space->dim();
  out.range = dim >= 2 ? dim - 2 : 0;
  return out;
}

}  // namespace catsieve
