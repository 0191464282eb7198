#include "catsieve/bisimplicial.hpp"

#include <algorithm>

namespace catsieve {

namespace {

[[noreturn]] void not_simplicial(const std::string& what) { throw Error(ErrorKind::NotSimplicial, what); }

std::vector<std::vector<BiSSet::Cell>> blank_cells(std::size_t dim) {
  std::vector<std::vector<BiSSet::Cell>> cells(dim + 1, std::vector<BiSSet::Cell>(dim + 1));
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) {
      auto& c = cells[n][m];
      c.hfaces.assign(n == 0 ? 0 : n + 1, {});
      c.vfaces.assign(m == 0 ? 0 : m + 1, {});
      c.hdegens.assign(n < dim ? n + 1 : 0, {});
      c.vdegens.assign(m < dim ? m + 1 : 0, {});
    }
  return cells;
}

std::string at(std::size_t n, std::size_t m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

}  // namespace

SSet BiSSet::row(std::size_t m) const {
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) {
    const auto& c = cells[n][m];
    x.levels.push_back({c.labels, c.hfaces, c.hdegens});
  }
  return x;
}

SSet BiSSet::column(std::size_t n) const {
  SSet x;
  for (std::size_t m = 0; m <= dim; ++m) {
    const auto& c = cells[n][m];
    x.levels.push_back({c.labels, c.vfaces, c.vdegens});
  }
  return x;
}

void BiSSet::validate() const {
  if (cells.size() != dim + 1) not_simplicial("bisimplicial level count");
  for (const auto& r : cells)
    if (r.size() != dim + 1) not_simplicial("bisimplicial level count");
  for (std::size_t m = 0; m <= dim; ++m) row(m).validate();
  for (std::size_t n = 0; n <= dim; ++n) column(n).validate();
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) {
      const auto& c = cells[n][m];
      for (int x = 0; x < static_cast<int>(c.labels.size()); ++x) {
        auto fail = [&](const char* rule) {
          not_simplicial(std::string(rule) + " does not commute at " + c.labels[x] + " " + at(n, m));
        };
        for (std::size_t i = 0; n > 0 && i <= n; ++i) {
          for (std::size_t j = 0; m > 0 && j <= m; ++j)
            if (cells[n][m - 1].hfaces[i][c.vfaces[j][x]] != cells[n - 1][m].vfaces[j][c.hfaces[i][x]])
              fail("dh dv");
          for (std::size_t j = 0; m < dim && j <= m; ++j)
            if (cells[n][m + 1].hfaces[i][c.vdegens[j][x]] != cells[n - 1][m].vdegens[j][c.hfaces[i][x]])
              fail("dh sv");
        }
        for (std::size_t i = 0; n < dim && i <= n; ++i) {
          for (std::size_t j = 0; m > 0 && j <= m; ++j)
            if (cells[n][m - 1].hdegens[i][c.vfaces[j][x]] != cells[n + 1][m].vfaces[j][c.hdegens[i][x]])
              fail("sh dv");
          for (std::size_t j = 0; m < dim && j <= m; ++j)
            if (cells[n + 1][m].vdegens[j][c.hdegens[i][x]] != cells[n][m + 1].hdegens[i][c.vdegens[j][x]])
              fail("sh sv");
        }
      }
    }
}

void BiSSetMap::validate() const {
  const BiSSet& a = *source;
  const BiSSet& b = *target;
  if (a.dim != b.dim || levels.size() != a.dim + 1) not_simplicial("bisimplicial map shape");
  for (std::size_t n = 0; n <= a.dim; ++n) {
    if (levels[n].size() != a.dim + 1) not_simplicial("bisimplicial map shape");
    for (std::size_t m = 0; m <= a.dim; ++m) {
      if (levels[n][m].size() != a.size(n, m)) not_simplicial("bisimplicial map size at " + at(n, m));
      for (int v : levels[n][m])
        if (v < 0 || static_cast<std::size_t>(v) >= b.size(n, m)) not_simplicial("bisimplicial map value out of range");
    }
  }
  for (std::size_t n = 0; n <= a.dim; ++n)
    for (std::size_t m = 0; m <= a.dim; ++m) {
      const auto& ca = a.cells[n][m];
      const auto& cb = b.cells[n][m];
      const auto& f = levels[n][m];
      for (int x = 0; x < static_cast<int>(ca.labels.size()); ++x) {
        auto fail = [&](const std::string& op) {
          not_simplicial("map does not commute with " + op + " at " + ca.labels[x] + " " + at(n, m));
        };
        for (std::size_t i = 0; n > 0 && i <= n; ++i)
          if (levels[n - 1][m][ca.hfaces[i][x]] != cb.hfaces[i][f[x]]) fail("dh" + std::to_string(i));
        for (std::size_t j = 0; m > 0 && j <= m; ++j)
          if (levels[n][m - 1][ca.vfaces[j][x]] != cb.vfaces[j][f[x]]) fail("dv" + std::to_string(j));
        for (std::size_t i = 0; n < a.dim && i <= n; ++i)
          if (levels[n + 1][m][ca.hdegens[i][x]] != cb.hdegens[i][f[x]]) fail("sh" + std::to_string(i));
        for (std::size_t j = 0; m < a.dim && j <= m; ++j)
          if (levels[n][m + 1][ca.vdegens[j][x]] != cb.vdegens[j][f[x]]) fail("sv" + std::to_string(j));
      }
    }
}

BiSSetMap compose(const BiSSetMap& g, const BiSSetMap& f) {
  if (f.levels.size() != g.levels.size()) throw Error(ErrorKind::CodomainMismatch, "bisimplicial maps do not compose");
  BiSSetMap h{f.source, g.target, f.levels};
  for (std::size_t n = 0; n < h.levels.size(); ++n)
    for (std::size_t m = 0; m < h.levels[n].size(); ++m)
      for (int& v : h.levels[n][m]) {
        if (static_cast<std::size_t>(v) >= g.levels[n][m].size())
          throw Error(ErrorKind::CodomainMismatch, "bisimplicial maps do not compose");
        v = g.levels[n][m][v];
      }
  return h;
}

BiSSetMap identity_map(const BiSSetPtr& k) {
  BiSSetMap f{k, k, {}};
  f.levels.resize(k->dim + 1);
  for (std::size_t n = 0; n <= k->dim; ++n)
    for (std::size_t m = 0; m <= k->dim; ++m) {
      std::vector<int> level(k->size(n, m));
      for (std::size_t x = 0; x < level.size(); ++x) level[x] = static_cast<int>(x);
      f.levels[n].push_back(std::move(level));
    }
  return f;
}

SSet diag(const BiSSet& k) {
  SSet x;
  for (std::size_t n = 0; n <= k.dim; ++n) {
    const auto& c = k.cells[n][n];
    SSet::Level level;
    level.labels = c.labels;
    for (std::size_t i = 0; n > 0 && i <= n; ++i) {
      const auto& h = k.cells[n][n - 1].hfaces[i];
      std::vector<int> table;
      table.reserve(c.labels.size());
      for (int v : c.vfaces[i]) table.push_back(h[v]);
      level.faces.push_back(std::move(table));
    }
    for (std::size_t i = 0; n < k.dim && i <= n; ++i) {
      const auto& h = k.cells[n][n + 1].hdegens[i];
      std::vector<int> table;
      table.reserve(c.labels.size());
      for (int v : c.vdegens[i]) table.push_back(h[v]);
      level.degeneracies.push_back(std::move(table));
    }
    x.levels.push_back(std::move(level));
  }
  return x;
}

SimplicialMap diag(const BiSSetMap& f, const SSetPtr& source_diag, const SSetPtr& target_diag) {
  SimplicialMap g{source_diag, target_diag, {}};
  for (std::size_t n = 0; n < f.levels.size(); ++n) g.levels.push_back(f.levels[n][n]);
  return g;
}

BiSSet horizontally_constant(const SSet& x) {
  BiSSet k;
  k.dim = x.dim();
  k.cells = blank_cells(k.dim);
  for (std::size_t n = 0; n <= k.dim; ++n)
    for (std::size_t m = 0; m <= k.dim; ++m) {
      auto& c = k.cells[n][m];
      c.labels = x.levels[m].labels;
      std::vector<int> id(c.labels.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      for (auto& t : c.hfaces) t = id;
      for (auto& t : c.hdegens) t = id;
      c.vfaces = x.levels[m].faces;
      c.vdegens = x.levels[m].degeneracies;
    }
  return k;
}

BiSSet product_with_interval(const BiSSet& k) {
  const SSet iv = interval(k.dim);
  BiSSet p;
  p.dim = k.dim;
  p.cells = blank_cells(k.dim);
  for (std::size_t n = 0; n <= k.dim; ++n)
    for (std::size_t m = 0; m <= k.dim; ++m) {
      const auto& src = k.cells[n][m];
      auto& c = p.cells[n][m];
      const int w = static_cast<int>(n) + 2;
      for (std::size_t a = 0; a < src.labels.size(); ++a)
        for (int t = 0; t < w; ++t) {
          c.labels.push_back("(" + src.labels[a] + "," + iv.label(n, t) + ")");
          for (std::size_t i = 0; n > 0 && i <= n; ++i) c.hfaces[i].push_back(src.hfaces[i][a] * (w - 1) + iv.face(n, i, t));
          for (std::size_t j = 0; m > 0 && j <= m; ++j) c.vfaces[j].push_back(src.vfaces[j][a] * w + t);
          for (std::size_t i = 0; n < k.dim && i <= n; ++i)
            c.hdegens[i].push_back(src.hdegens[i][a] * (w + 1) + iv.degeneracy(n, i, t));
          for (std::size_t j = 0; m < k.dim && j <= m; ++j) c.vdegens[j].push_back(src.vdegens[j][a] * w + t);
        }
    }
  return p;
}

BiSSet odot(const SSet& y, const SSet& k) {
  if (y.dim() != k.dim()) throw Error(ErrorKind::Malformed, "odot of different truncations");
  BiSSet p;
  p.dim = k.dim();
  p.cells = blank_cells(p.dim);
  for (std::size_t n = 0; n <= p.dim; ++n)
    for (std::size_t m = 0; m <= p.dim; ++m) {
      auto& c = p.cells[n][m];
      const int w = static_cast<int>(y.size(m));
      const int wl = m > 0 ? static_cast<int>(y.size(m - 1)) : 0;
      const int wu = m < p.dim ? static_cast<int>(y.size(m + 1)) : 0;
      for (int a = 0; a < static_cast<int>(k.size(n)); ++a)
        for (int b = 0; b < w; ++b) {
          c.labels.push_back(k.label(n, a) + "/" + y.label(m, b));
          for (std::size_t i = 0; n > 0 && i <= n; ++i) c.hfaces[i].push_back(k.face(n, i, a) * w + b);
          for (std::size_t j = 0; m > 0 && j <= m; ++j) c.vfaces[j].push_back(a * wl + y.face(m, j, b));
          for (std::size_t i = 0; n < p.dim && i <= n; ++i) c.hdegens[i].push_back(k.degeneracy(n, i, a) * w + b);
          for (std::size_t j = 0; m < p.dim && j <= m; ++j) c.vdegens[j].push_back(a * wu + y.degeneracy(m, j, b));
        }
    }
  return p;
}

void SSetDiagram::validate() const {
  if (!shape) throw Error(ErrorKind::Malformed, "diagram without a shape");
  const FinCategory& c = *shape;
  if (values.size() != c.object_count() || maps.size() != c.morphism_count())
    throw Error(ErrorKind::NotFunctor, "diagram tables do not match the shape");
  for (const auto& v : values) {
    if (!v || v->dim() != dim()) throw Error(ErrorKind::NotFunctor, "diagram values have different truncations");
    v->validate();
  }
  auto same_shape = [](const SSet& a, const SSet& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t n = 0; n <= a.dim(); ++n)
      if (a.size(n) != b.size(n)) return false;
    return true;
  };
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
    const auto& m = maps[f];
    if (!m.source || !m.target || !same_shape(*m.source, *values[c.src(f)]) || !same_shape(*m.target, *values[c.dst(f)]))
      throw Error(ErrorKind::NotFunctor, "map for " + c.morphism_name(f) + " has the wrong endpoints");
    m.validate();
    if (c.is_identity(f) && m.levels != identity_map(values[c.src(f)]).levels)
      throw Error(ErrorKind::NotFunctor, "identity " + c.morphism_name(f) + " is not sent to an identity");
  }
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
    for (MorId g : c.arrows_from(c.dst(f)))
      if (compose(maps[g], maps[f]).levels != maps[c.compose(g, f)].levels)
        throw Error(ErrorKind::NotFunctor,
                    "composite " + c.morphism_name(g) + "∘" + c.morphism_name(f) + " is not preserved");
  require_chain_bounded(c);
}

SSetDiagram precompose(const SSetDiagram& d, const FinFunctor& alpha) {
  SSetDiagram e{alpha.source(), {}, {}};
  const FinCategory& c = *alpha.source();
  for (ObjId j = 0; j < static_cast<ObjId>(c.object_count()); ++j) e.values.push_back(d.values[alpha(j)]);
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) e.maps.push_back(d.maps[alpha.on_morphism(f)]);
  return e;
}

SSetDiagram constant_diagram(const CategoryPtr& shape, const SSetPtr& value) {
  SSetDiagram d{shape, std::vector<SSetPtr>(shape->object_count(), value), {}};
  d.maps.assign(shape->morphism_count(), identity_map(value));
  return d;
}

std::pair<int, int> Replacement::locate(std::size_t n, std::size_t m, int k) const {
  const auto& off = offset[n][m];
  auto it = std::upper_bound(off.begin(), off.end(), k);
  int c = static_cast<int>(it - off.begin()) - 1;
  return {c, k - off[c]};
}

Replacement srep(const SSetDiagram& d, const Guards& guards) {
  d.validate();
  const std::size_t dim = d.dim();
  Replacement r{d, chain_table(d.shape, dim, guards), nullptr, {}};
  const ChainTable& t = r.chains;
  r.offset.assign(dim + 1, std::vector<std::vector<int>>(dim + 1));
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) {
      auto& off = r.offset[n][m];
      std::size_t total = 0;
      for (int c = 0; c < static_cast<int>(t.size(n)); ++c) {
        off.push_back(static_cast<int>(total));
        total += d.values[t.last(n, c)]->size(m);
      }
      if (total > guards.simplices_per_level)
        throw Error(ErrorKind::AmbientTooLarge, "simplicial replacement exceeds " +
                                                    std::to_string(guards.simplices_per_level) + " simplices at " +
                                                    at(n, m));
      off.push_back(static_cast<int>(total));
    }

  auto k = std::make_shared<BiSSet>();
  k->dim = dim;
  k->cells = blank_cells(dim);
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) {
      auto& cell = k->cells[n][m];
      for (int c = 0; c < static_cast<int>(t.size(n)); ++c) {
        const SSet& v = *d.values[t.last(n, c)];
        const std::string chain = t.label(n, c);
        const SimplicialMap* last_map = n > 0 ? &d.maps[t.chains[n][c].back()] : nullptr;
        for (int x = 0; x < static_cast<int>(v.size(m)); ++x) {
          cell.labels.push_back(chain + "|" + v.label(m, x));
          for (std::size_t i = 0; n > 0 && i <= n; ++i) {
            int y = i == n ? (*last_map)(m, x) : x;
            cell.hfaces[i].push_back(r.index(n - 1, m, t.faces[n][i][c], y));
          }
          for (std::size_t j = 0; m > 0 && j <= m; ++j) cell.vfaces[j].push_back(r.index(n, m - 1, c, v.face(m, j, x)));
          for (std::size_t i = 0; n < dim && i <= n; ++i)
            cell.hdegens[i].push_back(r.index(n + 1, m, t.degeneracies[n][i][c], x));
          for (std::size_t j = 0; m < dim && j <= m; ++j)
            cell.vdegens[j].push_back(r.index(n, m + 1, c, v.degeneracy(m, j, x)));
        }
      }
    }
  r.object = std::move(k);
  return r;
}

BiSSetMap alpha_sharp(const FinFunctor& alpha, const Replacement& source, const Replacement& target) {
  const std::size_t dim = source.object->dim;
  BiSSetMap f{source.object, target.object, {}};
  f.levels.resize(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) {
    std::vector<int> image;
    for (const auto& ch : source.chains.chains[n]) {
      std::vector<int> mapped;
      if (n == 0)
        mapped = {alpha(ch[0])};
      else
        for (int s : ch) mapped.push_back(alpha.on_morphism(s));
      int tc = target.chains.find(n, mapped);
      if (tc < 0) throw Error(ErrorKind::NotFunctor, "functor does not send chains to chains");
      image.push_back(tc);
    }
    for (std::size_t m = 0; m <= dim; ++m) {
      std::vector<int> level;
      level.reserve(source.object->size(n, m));
      for (int c = 0; c < static_cast<int>(image.size()); ++c) {
        const int width = source.offset[n][m][c + 1] - source.offset[n][m][c];
        if (target.offset[n][m][image[c] + 1] - target.offset[n][m][image[c]] != width)
          throw Error(ErrorKind::Mismatch, "source diagram is not the target diagram along the functor");
        for (int x = 0; x < width; ++x) level.push_back(target.index(n, m, image[c], x));
      }
      f.levels[n].push_back(std::move(level));
    }
  }
  return f;
}

void validate(const SSetDiagramMorphism& m, const SSetDiagram& d, const SSetDiagram& e) {
  const FinCategory& c = *d.shape;
  if (m.alpha.source()->object_count() != c.object_count() ||
      m.alpha.target()->object_count() != e.shape->object_count() || m.eta.size() != c.object_count())
    throw Error(ErrorKind::NotNatural, "morphism of diagrams has the wrong shape");
  for (ObjId j = 0; j < static_cast<ObjId>(c.object_count()); ++j) {
    const auto& eta = m.eta[j];
    if (eta.levels.size() != d.values[j]->levels.size())
      throw Error(ErrorKind::NotNatural, "component at " + c.object_name(j) + " has the wrong source");
    for (std::size_t n = 0; n < eta.levels.size(); ++n)
      if (eta.levels[n].size() != d.values[j]->size(n))
        throw Error(ErrorKind::NotNatural, "component at " + c.object_name(j) + " has the wrong source");
    eta.validate();
    const SSet& target = *e.values[m.alpha(j)];
    for (std::size_t n = 0; n < eta.levels.size(); ++n)
      for (int v : eta.levels[n])
        if (static_cast<std::size_t>(v) >= target.size(n))
          throw Error(ErrorKind::NotNatural, "component at " + c.object_name(j) + " has the wrong target");
  }
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
    auto lhs = compose(e.maps[m.alpha.on_morphism(f)], m.eta[c.src(f)]);
    auto rhs = compose(m.eta[c.dst(f)], d.maps[f]);
    if (lhs.levels != rhs.levels) throw Error(ErrorKind::NotNatural, "components are not natural at " + c.morphism_name(f));
  }
}

BiSSetMap eta_hat(const std::vector<SimplicialMap>& eta, const Replacement& source, const Replacement& target) {
  const std::size_t dim = source.object->dim;
  if (source.chains.chains != target.chains.chains)
    throw Error(ErrorKind::Mismatch, "η̂ needs replacements over the same shape");
  BiSSetMap f{source.object, target.object, {}};
  f.levels.resize(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t m = 0; m <= dim; ++m) {
      std::vector<int> level;
      level.reserve(source.object->size(n, m));
      for (int c = 0; c < static_cast<int>(source.chains.size(n)); ++c) {
        const auto& e = eta[source.chains.last(n, c)];
        const int width = source.offset[n][m][c + 1] - source.offset[n][m][c];
        for (int x = 0; x < width; ++x) level.push_back(target.index(n, m, c, e(m, x)));
      }
      f.levels[n].push_back(std::move(level));
    }
  return f;
}

Hocolim hocolim(const SSetDiagram& d, const Guards& guards) {
  Hocolim h{srep(d, guards), nullptr};
  h.space = std::make_shared<SSet>(diag(*h.replacement.object));
  return h;
}

SimplicialMap induced_hocolim_map(const SSetDiagramMorphism& m, const Hocolim& d, const Hocolim& e,
                                  const Guards& guards) {
  validate(m, d.replacement.diagram, e.replacement.diagram);
  Replacement pulled = srep(precompose(e.replacement.diagram, m.alpha), guards);
  BiSSetMap hat = eta_hat(m.eta, d.replacement, pulled);
  BiSSetMap sharp = alpha_sharp(m.alpha, pulled, e.replacement);
  return diag(compose(sharp, hat), d.space, e.space);
}

SimplicialMap hocolim_to_cocone(const Hocolim& d, const std::vector<SimplicialMap>& legs) {
  if (legs.empty() || legs.size() != d.replacement.diagram.values.size())
    throw Error(ErrorKind::Malformed, "one leg per object is required");
  SimplicialMap f{d.space, legs.front().target, {}};
  const auto& r = d.replacement;
  for (std::size_t n = 0; n <= d.space->dim(); ++n) {
    std::vector<int> level;
    for (int k = 0; k < static_cast<int>(d.space->size(n)); ++k) {
      auto [c, x] = r.locate(n, n, k);
      level.push_back(legs[r.chains.last(n, c)](n, x));
    }
    f.levels.push_back(std::move(level));
  }
  return f;
}

}  // namespace catsieve
