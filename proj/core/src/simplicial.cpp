#include "catsieve/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace catsieve {

namespace {

[[noreturn]] void not_simplicial(const std::string& what) { throw Error(ErrorKind::NotSimplicial, what); }

std::string join(const std::vector<int>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

void check_range(const std::vector<int>& table, std::size_t bound, const std::string& what) {
  for (int v : table)
    if (v < 0 || static_cast<std::size_t>(v) >= bound) not_simplicial(what + " out of range");
}

SSet::Level empty_level(std::size_t n, std::size_t dim) {
  SSet::Level l;
  l.faces.assign(n == 0 ? 0 : n + 1, {});
  l.degeneracies.assign(n < dim ? n + 1 : 0, {});
  return l;
}

}  // namespace

bool SSet::is_degenerate(std::size_t n, int x) const {
  for (std::size_t i = 0; i < n; ++i)
    if (degeneracy(n - 1, i, face(n, i, x)) == x) return true;
  return false;
}

std::optional<int> SSet::find(std::size_t n, const std::string& l) const {
  const auto& labels = levels[n].labels;
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) return std::nullopt;
  return static_cast<int>(it - labels.begin());
}

std::size_t SSet::total_size() const {
  std::size_t total = 0;
  for (const auto& l : levels) total += l.labels.size();
  return total;
}

int SSet::apply(std::size_t m, int y, const std::vector<int>& theta) const {
  std::vector<bool> hit(m + 1, false);
  for (int v : theta) {
    if (v < 0 || static_cast<std::size_t>(v) > m) throw Error(ErrorKind::Malformed, "operator leaves [m]");
    hit[v] = true;
  }
  for (std::size_t i = 1; i < theta.size(); ++i)
    if (theta[i] < theta[i - 1]) throw Error(ErrorKind::Malformed, "operator is not monotone");
  int cur = y;
  std::size_t d = m;
  for (std::size_t j = m + 1; j-- > 0;)
    if (!hit[j]) cur = face(d--, j, cur);
  std::vector<int> rank(m + 1, 0);
  int r = 0;
  for (std::size_t j = 0; j <= m; ++j) rank[j] = hit[j] ? r++ : -1;
  std::vector<int> sigma;
  for (int v : theta) sigma.push_back(rank[v]);
  std::vector<int> seq(d + 1);
  for (std::size_t j = 0; j <= d; ++j) seq[j] = static_cast<int>(j);
  for (std::size_t p = 0; seq.size() < sigma.size(); ++p) {
    if (p < seq.size() && seq[p] == sigma[p]) continue;
    cur = degeneracy(d++, p - 1, cur);
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(p), seq[p - 1]);
  }
  return cur;
}

void SSet::validate() const {
  if (levels.empty()) not_simplicial("no levels");
  const std::size_t top = dim();
  for (std::size_t n = 0; n <= top; ++n) {
    const auto& l = levels[n];
    if (l.faces.size() != (n == 0 ? 0 : n + 1)) not_simplicial("level " + std::to_string(n) + " face count");
    if (l.degeneracies.size() != (n < top ? n + 1 : 0))
      not_simplicial("level " + std::to_string(n) + " degeneracy count");
    for (const auto& f : l.faces) {
      if (f.size() != size(n)) not_simplicial("face table size at level " + std::to_string(n));
      check_range(f, size(n - 1), "face");
    }
    for (const auto& s : l.degeneracies) {
      if (s.size() != size(n)) not_simplicial("degeneracy table size at level " + std::to_string(n));
      check_range(s, size(n + 1), "degeneracy");
    }
  }
  auto fail = [&](const char* rule, std::size_t n, int x, std::size_t i, std::size_t j) {
    not_simplicial(std::string(rule) + " fails at " + label(n, x) + " (level " + std::to_string(n) +
                   ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
  };
  for (std::size_t n = 0; n <= top; ++n)
    for (int x = 0; x < static_cast<int>(size(n)); ++x) {
      if (n >= 2)
        for (std::size_t j = 1; j <= n; ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x))) fail("d_i d_j", n, x, i, j);
      if (n < top)
        for (std::size_t j = 0; j <= n; ++j) {
          int sx = degeneracy(n, j, x);
          for (std::size_t i = 0; i <= n + 1; ++i) {
            int lhs = face(n + 1, i, sx);
            int rhs;
            if (i == j || i == j + 1)
              rhs = x;
            else if (i < j)
              rhs = degeneracy(n - 1, j - 1, face(n, i, x));
            else
              rhs = degeneracy(n - 1, j, face(n, i - 1, x));
            if (lhs != rhs) fail("d_i s_j", n, x, i, j);
          }
        }
      if (n + 2 <= top)
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t i = 0; i <= j; ++i)
            if (degeneracy(n + 1, i, degeneracy(n, j, x)) != degeneracy(n + 1, j + 1, degeneracy(n, i, x)))
              fail("s_i s_j", n, x, i, j);
    }
}

void SimplicialMap::validate() const {
  if (!source || !target) not_simplicial("map without endpoints");
  const SSet& x = *source;
  const SSet& y = *target;
  if (x.dim() != y.dim()) not_simplicial("map between different truncations");
  if (levels.size() != x.levels.size()) not_simplicial("map level count");
  for (std::size_t n = 0; n <= x.dim(); ++n) {
    if (levels[n].size() != x.size(n)) not_simplicial("map table size at level " + std::to_string(n));
    check_range(levels[n], y.size(n), "map value");
  }
  for (std::size_t n = 0; n <= x.dim(); ++n)
    for (int s = 0; s < static_cast<int>(x.size(n)); ++s) {
      for (std::size_t i = 0; n > 0 && i <= n; ++i)
        if (levels[n - 1][x.face(n, i, s)] != y.face(n, i, levels[n][s]))
          not_simplicial("map does not commute with d" + std::to_string(i) + " at " + x.label(n, s));
      for (std::size_t i = 0; n < x.dim() && i <= n; ++i)
        if (levels[n + 1][x.degeneracy(n, i, s)] != y.degeneracy(n, i, levels[n][s]))
          not_simplicial("map does not commute with s" + std::to_string(i) + " at " + x.label(n, s));
    }
}

SimplicialMap identity_map(const SSetPtr& x) {
  SimplicialMap m{x, x, {}};
  for (std::size_t n = 0; n <= x->dim(); ++n) {
    std::vector<int> level(x->size(n));
    for (std::size_t i = 0; i < level.size(); ++i) level[i] = static_cast<int>(i);
    m.levels.push_back(std::move(level));
  }
  return m;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target->dim() != g.source->dim() || f.levels.size() != g.levels.size())
    throw Error(ErrorKind::CodomainMismatch, "simplicial maps do not compose");
  SimplicialMap m{f.source, g.target, f.levels};
  for (std::size_t n = 0; n < m.levels.size(); ++n)
    for (int& v : m.levels[n]) {
      if (static_cast<std::size_t>(v) >= g.levels[n].size())
        throw Error(ErrorKind::CodomainMismatch, "simplicial maps do not compose");
      v = g.levels[n][v];
    }
  return m;
}

SSet sset_from_cells(const std::vector<std::vector<Cell>>& cells, std::size_t dim) {
  const std::size_t top_cell = cells.empty() ? 0 : cells.size() - 1;
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (const auto& c : cells[k]) {
      if (c.faces.size() != (k == 0 ? 0 : k + 1)) not_simplicial("cell " + c.label + " has the wrong face count");
      for (int f : c.faces)
        if (f < 0 || static_cast<std::size_t>(f) >= cells[k - 1].size())
          not_simplicial("cell " + c.label + " names a missing face");
      for (std::size_t j = 1; k >= 2 && j <= k; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (cells[k - 1][c.faces[j]].faces[i] != cells[k - 1][c.faces[i]].faces[j - 1])
            not_simplicial("cell " + c.label + " violates d_i d_j");
    }

  using Key = std::tuple<int, int, std::vector<int>>;
  std::vector<std::vector<Key>> keys(dim + 1);
  std::vector<std::map<Key, int>> index(dim + 1);
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level = empty_level(n, dim);
    for (std::size_t k = 0; k <= std::min(n, top_cell); ++k) {
      // Monotone surjections [n] -> [k]: choose which k of the n steps rise.
      std::vector<std::vector<int>> surjections;
      std::vector<int> rise(n, 0);
      std::fill(rise.end() - static_cast<std::ptrdiff_t>(k), rise.end(), 1);
      do {
        std::vector<int> sigma{0};
        for (int r : rise) sigma.push_back(sigma.back() + r);
        surjections.push_back(std::move(sigma));
      } while (std::next_permutation(rise.begin(), rise.end()));
      std::sort(surjections.begin(), surjections.end());
      for (std::size_t y = 0; y < cells[k].size(); ++y)
        for (const auto& sigma : surjections) {
          Key key{static_cast<int>(k), static_cast<int>(y), sigma};
          index[n][key] = static_cast<int>(keys[n].size());
          keys[n].push_back(key);
          level.labels.push_back(n == k ? cells[k][y].label : cells[k][y].label + "[" + join(sigma, ",") + "]");
        }
    }
    x.levels.push_back(std::move(level));
  }
  for (std::size_t n = 0; n <= dim; ++n) {
    auto& level = x.levels[n];
    for (std::size_t i = 0; n > 0 && i <= n; ++i) {
      auto& table = level.faces[i];
      for (const auto& [k, y, sigma] : keys[n]) {
        std::vector<int> tau = sigma;
        tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(i));
        const int v = sigma[i];
        if (std::count(sigma.begin(), sigma.end(), v) > 1) {
          table.push_back(index[n - 1].at({k, y, tau}));
        } else {
          for (int& t : tau)
            if (t > v) --t;
          table.push_back(index[n - 1].at({k - 1, cells[k][y].faces[v], tau}));
        }
      }
    }
    for (std::size_t i = 0; n < dim && i <= n; ++i) {
      auto& table = level.degeneracies[i];
      for (const auto& [k, y, sigma] : keys[n]) {
        std::vector<int> tau = sigma;
        tau.insert(tau.begin() + static_cast<std::ptrdiff_t>(i), sigma[i]);
        table.push_back(index[n + 1].at({k, y, tau}));
      }
    }
  }
  return x;
}

SSet sequence_sset(const std::vector<std::string>& vertices,
                   const std::function<bool(const std::vector<int>&)>& accept, std::size_t dim) {
  const int v = static_cast<int>(vertices.size());
  const bool short_names = std::all_of(vertices.begin(), vertices.end(), [](const auto& s) { return s.size() == 1; });
  std::vector<std::vector<std::vector<int>>> seqs(dim + 1);
  std::vector<std::map<std::vector<int>, int>> index(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) {
    std::vector<int> cur(n + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int lo) {
      if (pos == n + 1) {
        std::vector<int> support(cur);
        support.erase(std::unique(support.begin(), support.end()), support.end());
        if (accept(support)) {
          index[n][cur] = static_cast<int>(seqs[n].size());
          seqs[n].push_back(cur);
        }
        return;
      }
      for (int a = lo; a < v; ++a) {
        cur[pos] = a;
        rec(pos + 1, a);
      }
    };
    rec(0, 0);
  }
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level = empty_level(n, dim);
    for (const auto& s : seqs[n]) {
      std::string l;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i && !short_names) l += ",";
        l += vertices[s[i]];
      }
      level.labels.push_back(std::move(l));
    }
    auto lookup = [&](std::size_t m, const std::vector<int>& s) {
      auto it = index[m].find(s);
      if (it == index[m].end()) not_simplicial("vertex sequences are not closed under faces and degeneracies");
      return it->second;
    };
    for (std::size_t i = 0; n > 0 && i <= n; ++i)
      for (const auto& s : seqs[n]) {
        auto t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        level.faces[i].push_back(lookup(n - 1, t));
      }
    for (std::size_t i = 0; n < dim && i <= n; ++i)
      for (const auto& s : seqs[n]) {
        auto t = s;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
        level.degeneracies[i].push_back(lookup(n + 1, t));
      }
    x.levels.push_back(std::move(level));
  }
  return x;
}

namespace {

std::vector<std::string> digit_vertices(std::size_t k) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i <= k; ++i) v.push_back(std::to_string(i));
  return v;
}

}  // namespace

SSet point_sset(std::size_t dim) { return standard_simplex(0, dim); }

SSet empty_sset(std::size_t dim) {
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) x.levels.push_back(empty_level(n, dim));
  return x;
}

SSet standard_simplex(std::size_t k, std::size_t dim) {
  return sequence_sset(digit_vertices(k), [](const std::vector<int>&) { return true; }, dim);
}

SSet boundary_simplex(std::size_t k, std::size_t dim) {
  return sequence_sset(digit_vertices(k), [k](const std::vector<int>& s) { return s.size() < k + 1; }, dim);
}

SSet simplicial_complex(const std::vector<std::string>& vertices, const std::vector<std::vector<int>>& facets,
                        std::size_t dim) {
  std::vector<std::set<int>> sets;
  for (const auto& f : facets) {
    for (int v : f)
      if (v < 0 || static_cast<std::size_t>(v) >= vertices.size())
        throw Error(ErrorKind::Malformed, "facet names a missing vertex");
    sets.emplace_back(f.begin(), f.end());
  }
  return sequence_sset(
      vertices,
      [&](const std::vector<int>& s) {
        return std::any_of(sets.begin(), sets.end(),
                           [&](const auto& f) { return std::includes(f.begin(), f.end(), s.begin(), s.end()); });
      },
      dim);
}

SSet two_cell_circle(std::size_t dim) {
  return sset_from_cells({{{"v0", {}}, {"v1", {}}}, {{"a", {1, 0}}, {"b", {1, 0}}}}, dim);
}

SSet interval(std::size_t dim) {
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level = empty_level(n, dim);
    for (std::size_t t = 0; t <= n + 1; ++t) level.labels.push_back(std::string(t, '1') + std::string(n + 1 - t, '0'));
    for (std::size_t k = 0; n > 0 && k <= n; ++k)
      for (int t = 0; t <= static_cast<int>(n) + 1; ++t) level.faces[k].push_back(static_cast<int>(k) < t ? t - 1 : t);
    for (std::size_t k = 0; n < dim && k <= n; ++k)
      for (int t = 0; t <= static_cast<int>(n) + 1; ++t)
        level.degeneracies[k].push_back(static_cast<int>(k) < t ? t + 1 : t);
    x.levels.push_back(std::move(level));
  }
  return x;
}

SSet product(const SSet& x, const SSet& y) {
  if (x.dim() != y.dim()) throw Error(ErrorKind::Malformed, "product of different truncations");
  const std::size_t dim = x.dim();
  SSet p;
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level = empty_level(n, dim);
    const int ny = static_cast<int>(y.size(n));
    for (std::size_t a = 0; a < x.size(n); ++a)
      for (int b = 0; b < ny; ++b) level.labels.push_back("(" + x.label(n, static_cast<int>(a)) + "," + y.label(n, b) + ")");
    const int my = n > 0 ? static_cast<int>(y.size(n - 1)) : 0;
    const int py = n < dim ? static_cast<int>(y.size(n + 1)) : 0;
    for (std::size_t i = 0; n > 0 && i <= n; ++i)
      for (int a = 0; a < static_cast<int>(x.size(n)); ++a)
        for (int b = 0; b < ny; ++b) level.faces[i].push_back(x.face(n, i, a) * my + y.face(n, i, b));
    for (std::size_t i = 0; n < dim && i <= n; ++i)
      for (int a = 0; a < static_cast<int>(x.size(n)); ++a)
        for (int b = 0; b < ny; ++b) level.degeneracies[i].push_back(x.degeneracy(n, i, a) * py + y.degeneracy(n, i, b));
    p.levels.push_back(std::move(level));
  }
  return p;
}

SSet coproduct(const std::vector<SSetPtr>& parts) {
  if (parts.empty()) throw Error(ErrorKind::Malformed, "coproduct needs a truncation");
  const std::size_t dim = parts[0]->dim();
  for (const auto& p : parts)
    if (p->dim() != dim) throw Error(ErrorKind::Malformed, "coproduct of different truncations");
  std::vector<std::vector<int>> offset(dim + 1, std::vector<int>(parts.size() + 1, 0));
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t j = 0; j < parts.size(); ++j) offset[n][j + 1] = offset[n][j] + static_cast<int>(parts[j]->size(n));
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level = empty_level(n, dim);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const SSet& p = *parts[j];
      for (int a = 0; a < static_cast<int>(p.size(n)); ++a) {
        level.labels.push_back(std::to_string(j) + ":" + p.label(n, a));
        for (std::size_t i = 0; n > 0 && i <= n; ++i) level.faces[i].push_back(offset[n - 1][j] + p.face(n, i, a));
        for (std::size_t i = 0; n < dim && i <= n; ++i)
          level.degeneracies[i].push_back(offset[n + 1][j] + p.degeneracy(n, i, a));
      }
    }
    x.levels.push_back(std::move(level));
  }
  return x;
}

SSet product_with_interval(const SSet& x) { return product(x, interval(x.dim())); }

SSet odot(std::size_t y, const SSet& k) {
  const std::size_t dim = k.dim();
  const int ny = static_cast<int>(y);
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level = empty_level(n, dim);
    for (int a = 0; a < static_cast<int>(k.size(n)); ++a)
      for (int b = 0; b < ny; ++b) {
        level.labels.push_back(k.label(n, a) + "/" + std::to_string(b));
        for (std::size_t i = 0; n > 0 && i <= n; ++i) level.faces[i].push_back(k.face(n, i, a) * ny + b);
        for (std::size_t i = 0; n < dim && i <= n; ++i) level.degeneracies[i].push_back(k.degeneracy(n, i, a) * ny + b);
      }
    x.levels.push_back(std::move(level));
  }
  return x;
}

ObjId ChainTable::last(std::size_t n, int c) const {
  const auto& ch = chains[n][c];
  return n == 0 ? ch[0] : category->src(ch.back());
}

ObjId ChainTable::first(std::size_t n, int c) const {
  const auto& ch = chains[n][c];
  return n == 0 ? ch[0] : category->dst(ch.front());
}

int ChainTable::find(std::size_t n, const std::vector<int>& tuple) const {
  auto it = index[n].find(tuple);
  return it == index[n].end() ? -1 : it->second;
}

std::string ChainTable::label(std::size_t n, int c) const {
  const auto& ch = chains[n][c];
  if (n == 0) return category->object_name(ch[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (i) out += ",";
    out += category->morphism_name(ch[i]);
  }
  return out + "]";
}

ChainTable chain_table(const CategoryPtr& c, std::size_t dim, const Guards& guards) {
  ChainTable t;
  t.category = c;
  t.chains.resize(dim + 1);
  t.index.resize(dim + 1);
  for (ObjId a = 0; a < static_cast<ObjId>(c->object_count()); ++a) t.chains[0].push_back({a});
  for (std::size_t n = 1; n <= dim; ++n) {
    for (std::size_t k = 0; k < t.chains[n - 1].size(); ++k) {
      const auto& prev = t.chains[n - 1][k];
      ObjId bottom = t.last(n - 1, static_cast<int>(k));
      for (MorId s : c->arrows_into(bottom)) {
        std::vector<int> next = n == 1 ? std::vector<int>{} : prev;
        next.push_back(s);
        t.chains[n].push_back(std::move(next));
      }
    }
    if (t.chains[n].size() > guards.simplices_per_level)
      throw Error(ErrorKind::AmbientTooLarge, "more than " + std::to_string(guards.simplices_per_level) +
                                                  " chains of length " + std::to_string(n));
  }
  for (std::size_t n = 0; n <= dim; ++n)
    for (std::size_t k = 0; k < t.chains[n].size(); ++k) t.index[n][t.chains[n][k]] = static_cast<int>(k);

  t.faces.resize(dim + 1);
  t.degeneracies.resize(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) {
    const auto& level = t.chains[n];
    for (std::size_t i = 0; n > 0 && i <= n; ++i) {
      std::vector<int> table;
      table.reserve(level.size());
      for (const auto& ch : level) {
        std::vector<int> f;
        if (n == 1) {
          f = {i == 0 ? c->src(ch[0]) : c->dst(ch[0])};
        } else if (i == 0) {
          f.assign(ch.begin() + 1, ch.end());
        } else if (i == n) {
          f.assign(ch.begin(), ch.end() - 1);
        } else {
          f = ch;
          f[i - 1] = c->compose(ch[i - 1], ch[i]);
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        }
        table.push_back(t.index[n - 1].at(f));
      }
      t.faces[n].push_back(std::move(table));
    }
    for (std::size_t i = 0; n < dim && i <= n; ++i) {
      std::vector<int> table;
      table.reserve(level.size());
      for (std::size_t k = 0; k < level.size(); ++k) {
        const auto& ch = level[k];
        std::vector<int> d;
        if (n == 0) {
          d = {c->identity(ch[0])};
        } else {
          ObjId ai = i == 0 ? c->dst(ch[0]) : c->src(ch[i - 1]);
          d = ch;
          d.insert(d.begin() + static_cast<std::ptrdiff_t>(i), c->identity(ai));
        }
        table.push_back(t.index[n + 1].at(d));
      }
      t.degeneracies[n].push_back(std::move(table));
    }
  }
  return t;
}

void require_chain_bounded(const FinCategory& c) {
  const std::size_t n = c.object_count();
  std::vector<std::vector<ObjId>> out(n);
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
    if (c.is_identity(f)) continue;
    if (c.src(f) == c.dst(f))
      throw Error(ErrorKind::UnboundedChains, "non-identity endomorphism " + c.morphism_name(f));
    out[c.src(f)].push_back(c.dst(f));
  }
  std::vector<int> state(n, 0);
  std::function<void(ObjId)> visit = [&](ObjId a) {
    state[a] = 1;
    for (ObjId b : out[a]) {
      if (state[b] == 1)
        throw Error(ErrorKind::UnboundedChains, "non-identity cycle through " + c.object_name(b));
      if (state[b] == 0) visit(b);
    }
    state[a] = 2;
  };
  for (ObjId a = 0; a < static_cast<ObjId>(n); ++a)
    if (state[a] == 0) visit(a);
}

SSet nerve(const CategoryPtr& c, std::size_t dim, const Guards& guards) {
  ChainTable t = chain_table(c, dim, guards);
  SSet x;
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level;
    for (std::size_t k = 0; k < t.size(n); ++k) level.labels.push_back(t.label(n, static_cast<int>(k)));
    level.faces = std::move(t.faces[n]);
    level.degeneracies = std::move(t.degeneracies[n]);
    x.levels.push_back(std::move(level));
  }
  return x;
}

void SubSSet::validate() const {
  const SSet& x = *ambient;
  if (members.size() != x.levels.size()) throw Error(ErrorKind::NotSubobject, "subobject level count");
  for (std::size_t n = 0; n <= x.dim(); ++n) {
    if (members[n].size() != x.size(n)) throw Error(ErrorKind::NotSubobject, "subobject mask size");
    for (int s = 0; s < static_cast<int>(x.size(n)); ++s) {
      if (!members[n][s]) continue;
      for (std::size_t i = 0; n > 0 && i <= n; ++i)
        if (!members[n - 1][x.face(n, i, s)])
          throw Error(ErrorKind::NotSubobject, "face of " + x.label(n, s) + " is missing");
      for (std::size_t i = 0; n < x.dim() && i <= n; ++i)
        if (!members[n + 1][x.degeneracy(n, i, s)])
          throw Error(ErrorKind::NotSubobject, "degeneracy of " + x.label(n, s) + " is missing");
    }
  }
}

SubSSet generated_subobject(const SSetPtr& x, const std::vector<std::string>& labels) {
  SubSSet s{x, {}};
  for (std::size_t n = 0; n <= x->dim(); ++n) s.members.emplace_back(x->size(n), false);
  std::deque<std::pair<std::size_t, int>> work;
  for (const auto& l : labels) {
    bool found = false;
    for (std::size_t n = 0; n <= x->dim() && !found; ++n)
      if (auto k = x->find(n, l)) {
        work.emplace_back(n, *k);
        found = true;
      }
    if (!found) throw Error(ErrorKind::NotSubobject, "no simplex named " + l);
  }
  while (!work.empty()) {
    auto [n, k] = work.front();
    work.pop_front();
    if (s.members[n][k]) continue;
    s.members[n][k] = true;
    for (std::size_t i = 0; n > 0 && i <= n; ++i) work.emplace_back(n - 1, x->face(n, i, k));
    for (std::size_t i = 0; n < x->dim() && i <= n; ++i) work.emplace_back(n + 1, x->degeneracy(n, i, k));
  }
  return s;
}

SubSSet intersect(const SubSSet& a, const SubSSet& b) {
  if (a.ambient != b.ambient) throw Error(ErrorKind::NotSubobject, "subobjects of different simplicial sets");
  SubSSet s = a;
  for (std::size_t n = 0; n < s.members.size(); ++n)
    for (std::size_t k = 0; k < s.members[n].size(); ++k) s.members[n][k] = a.members[n][k] && b.members[n][k];
  return s;
}

std::pair<SSetPtr, SimplicialMap> realize(const SubSSet& s) {
  s.validate();
  const SSet& x = *s.ambient;
  const std::size_t dim = x.dim();
  std::vector<std::vector<int>> local(dim + 1), global(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) {
    local[n].assign(x.size(n), -1);
    for (int k = 0; k < static_cast<int>(x.size(n)); ++k)
      if (s.members[n][k]) {
        local[n][k] = static_cast<int>(global[n].size());
        global[n].push_back(k);
      }
  }
  auto sub = std::make_shared<SSet>();
  for (std::size_t n = 0; n <= dim; ++n) {
    SSet::Level level = empty_level(n, dim);
    for (int k : global[n]) {
      level.labels.push_back(x.label(n, k));
      for (std::size_t i = 0; n > 0 && i <= n; ++i) level.faces[i].push_back(local[n - 1][x.face(n, i, k)]);
      for (std::size_t i = 0; n < dim && i <= n; ++i) level.degeneracies[i].push_back(local[n + 1][x.degeneracy(n, i, k)]);
    }
    sub->levels.push_back(std::move(level));
  }
  SimplicialMap inc{sub, s.ambient, global};
  return {sub, std::move(inc)};
}

}  // namespace catsieve
