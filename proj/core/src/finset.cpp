#include "catsieve/finset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace catsieve {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

FinSet::FinSet() : data_(std::make_shared<Data>()) {}

FinSet::FinSet(std::vector<std::string> labels) {
  auto d = std::make_shared<Data>();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!d->index.emplace(labels[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::Malformed, "duplicate element '" + labels[i] + "'");
  d->labels = std::move(labels);
  data_ = std::move(d);
}

FinSet FinSet::range(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinSet(std::move(labels));
}

std::optional<int> FinSet::find(const std::string& label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

int FinSet::index(const std::string& label) const {
  auto i = find(label);
  if (!i) throw Error(ErrorKind::Malformed, "unknown element '" + label + "'");
  return *i;
}

bool FinSet::operator==(const FinSet& other) const {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

SetFunction::SetFunction(FinSet dom, FinSet cod, std::vector<int> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (map_.size() != dom_.size()) throw Error(ErrorKind::Malformed, "function is not total on its domain");
  for (int y : map_)
    if (y < 0 || y >= static_cast<int>(cod_.size())) throw Error(ErrorKind::Malformed, "image outside codomain");
}

SetFunction SetFunction::from_labels(FinSet dom, FinSet cod, const std::map<std::string, std::string>& map) {
  std::vector<int> m(dom.size(), -1);
  for (const auto& [a, b] : map) m[dom.index(a)] = cod.index(b);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0) throw Error(ErrorKind::Malformed, "element '" + dom.label(static_cast<int>(i)) + "' is unmapped");
  return SetFunction(std::move(dom), std::move(cod), std::move(m));
}

bool SetFunction::operator==(const SetFunction& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && map_ == other.map_;
}

SetFunction identity(const FinSet& s) {
  std::vector<int> m(s.size());
  std::iota(m.begin(), m.end(), 0);
  return SetFunction(s, s, std::move(m));
}

SetFunction compose(const SetFunction& g, const SetFunction& f) {
  if (!(f.cod() == g.dom())) throw Error(ErrorKind::CodomainMismatch, "functions are not composable");
  std::vector<int> m(f.dom().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g(f(static_cast<int>(i)));
  return SetFunction(f.dom(), g.cod(), std::move(m));
}

void for_each_function(const FinSet& dom, const FinSet& cod, const std::function<bool(const SetFunction&)>& visit) {
  const std::size_t n = dom.size(), k = cod.size();
  if (k == 0 && n > 0) return;
  std::vector<int> m(n, 0);
  while (true) {
    if (!visit(SetFunction(dom, cod, m))) return;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++m[pos] < static_cast<int>(k)) break;
      m[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<SetFunction> all_functions(const FinSet& dom, const FinSet& cod) {
  std::vector<SetFunction> out;
  for_each_function(dom, cod, [&](const SetFunction& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

Coproduct coproduct(const std::vector<FinSet>& parts) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& l : parts[i].labels()) labels.push_back(std::to_string(i) + ":" + l);
  FinSet total(std::move(labels));
  Coproduct c{total, {}};
  int offset = 0;
  for (const auto& p : parts) {
    std::vector<int> m(p.size());
    std::iota(m.begin(), m.end(), offset);
    c.inclusions.emplace_back(p, total, std::move(m));
    offset += static_cast<int>(p.size());
  }
  return c;
}

Pullback pullback(const SetFunction& f, const SetFunction& g) {
  if (!(f.cod() == g.cod())) throw Error(ErrorKind::CodomainMismatch, "pullback of maps with different codomains");
  std::vector<std::string> labels;
  std::vector<int> p1, p2;
  for (int a = 0; a < static_cast<int>(f.dom().size()); ++a)
    for (int b = 0; b < static_cast<int>(g.dom().size()); ++b)
      if (f(a) == g(b)) {
        labels.push_back("(" + f.dom().label(a) + "," + g.dom().label(b) + ")");
        p1.push_back(a);
        p2.push_back(b);
      }
  FinSet p(std::move(labels));
  return Pullback{p, SetFunction(p, f.dom(), std::move(p1)), SetFunction(p, g.dom(), std::move(p2))};
}

Quotient quotient(const FinSet& s, const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(s.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : pairs) {
    int ra = find_root(parent, a), rb = find_root(parent, b);
    if (ra == rb) continue;
    // Keep the least label at the root.
    if (s.label(rb) < s.label(ra)) std::swap(ra, rb);
    parent[rb] = ra;
  }
  std::vector<int> cls(n, -1), root_class(n, -1);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    int r = find_root(parent, x);
    if (root_class[r] < 0) {
      root_class[r] = static_cast<int>(labels.size());
      labels.push_back(s.label(r));
    }
    cls[x] = root_class[r];
  }
  FinSet q(std::move(labels));
  return Quotient{q, SetFunction(s, q, std::move(cls))};
}

Quotient coequalizer(const SetFunction& f, const SetFunction& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw Error(ErrorKind::NotParallel, "coequalizer of non-parallel maps");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < static_cast<int>(f.dom().size()); ++a) pairs.emplace_back(f(a), g(a));
  return quotient(f.cod(), pairs);
}

std::optional<SetFunction> factor_through(const SetFunction& q, const SetFunction& f) {
  if (!(q.dom() == f.dom())) throw Error(ErrorKind::Mismatch, "factorization through a map with another domain");
  std::vector<int> h(q.cod().size(), -1);
  for (int a = 0; a < static_cast<int>(q.dom().size()); ++a) {
    int& slot = h[q(a)];
    if (slot >= 0 && slot != f(a)) return std::nullopt;
    slot = f(a);
  }
  for (int y : h)
    if (y < 0) return std::nullopt;
  return SetFunction(q.cod(), f.cod(), std::move(h));
}

void FinSetDiagram::validate() const {
  const FinCategory& s = *shape;
  if (objects.size() != s.object_count() || morphisms.size() != s.morphism_count())
    throw Error(ErrorKind::NotFunctor, "diagram assignment sizes do not match the shape");
  for (MorId f = 0; f < static_cast<MorId>(s.morphism_count()); ++f) {
    if (!(morphisms[f].dom() == objects[s.src(f)]) || !(morphisms[f].cod() == objects[s.dst(f)]))
      throw Error(ErrorKind::NotFunctor, "value of " + s.morphism_name(f) + " has wrong endpoints");
    if (s.is_identity(f) && !(morphisms[f] == identity(objects[s.src(f)])))
      throw Error(ErrorKind::NotFunctor, "identity " + s.morphism_name(f) + " not preserved");
  }
  for (MorId f = 0; f < static_cast<MorId>(s.morphism_count()); ++f)
    for (MorId g : s.arrows_from(s.dst(f)))
      if (!(morphisms[s.compose(g, f)] == compose(morphisms[g], morphisms[f])))
        throw Error(ErrorKind::NotFunctor,
                    "composite " + s.morphism_name(g) + "," + s.morphism_name(f) + " not preserved");
}

SetCocone colim_finite_diagram(const FinSetDiagram& d) {
  const FinCategory& s = *d.shape;
  auto cop = coproduct(d.objects);
  std::vector<std::pair<int, int>> pairs;
  for (MorId f = 0; f < static_cast<MorId>(s.morphism_count()); ++f) {
    const auto& in_src = cop.inclusions[s.src(f)];
    const auto& in_dst = cop.inclusions[s.dst(f)];
    for (int x = 0; x < static_cast<int>(d.objects[s.src(f)].size()); ++x)
      pairs.emplace_back(in_src(x), in_dst(d.morphisms[f](x)));
  }
  auto q = quotient(cop.object, pairs);
  SetCocone c{q.object, {}};
  for (const auto& inc : cop.inclusions) c.legs.push_back(compose(q.map, inc));
  return c;
}

bool is_set_cocone(const FinSetDiagram& d, const SetCocone& c) {
  const FinCategory& s = *d.shape;
  if (c.legs.size() != d.objects.size()) return false;
  for (std::size_t i = 0; i < c.legs.size(); ++i)
    if (!(c.legs[i].dom() == d.objects[i]) || !(c.legs[i].cod() == c.nadir)) return false;
  for (MorId f = 0; f < static_cast<MorId>(s.morphism_count()); ++f)
    if (!(compose(c.legs[s.dst(f)], d.morphisms[f]) == c.legs[s.src(f)])) return false;
  return true;
}

bool is_colimit_cocone(const FinSetDiagram& d, const SetCocone& c) {
  if (!is_set_cocone(d, c)) return false;
  auto canon = colim_finite_diagram(d);
  // comparison: canonical colimit -> c.nadir, determined on leg images
  std::vector<int> h(canon.nadir.size(), -1);
  for (std::size_t i = 0; i < c.legs.size(); ++i)
    for (int x = 0; x < static_cast<int>(d.objects[i].size()); ++x) {
      int& slot = h[canon.legs[i](x)];
      if (slot >= 0 && slot != c.legs[i](x)) return false;
      slot = c.legs[i](x);
    }
  return is_bijection(SetFunction(canon.nadir, c.nadir, std::move(h)));
}

bool is_epi(const SetFunction& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (int y : f.map()) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_mono(const SetFunction& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (int y : f.map()) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool is_bijection(const SetFunction& f) { return f.dom().size() == f.cod().size() && is_mono(f); }

bool is_effective_epi(const SetFunction& f) {
  auto kp = pullback(f, f);
  auto q = coequalizer(kp.first, kp.second);
  auto c = factor_through(q.map, f);
  return c && is_bijection(*c);
}

bool is_strict_epi(const SetFunction& f, std::size_t k) {
  const std::size_t ny = f.dom().size();
  if (k < ny) throw Error(ErrorKind::Malformed, "probe bound smaller than the domain");
  // Generalized elements from a one-point probe detect the kernel relation.
  std::vector<std::pair<int, int>> kernel;
  for (int a = 0; a < static_cast<int>(ny); ++a)
    for (int b = 0; b < static_cast<int>(ny); ++b)
      if (f(a) == f(b)) kernel.emplace_back(a, b);

  for (std::size_t z = 0; z <= k; ++z) {
    FinSet zs = FinSet::range(z);
    // Count factorizations h∘f for each g by enumerating h once.
    std::unordered_map<std::uint64_t, std::size_t> factorizations;
    for_each_function(f.cod(), zs, [&](const SetFunction& h) {
      std::uint64_t code = 0;
      for (std::size_t a = 0; a < ny; ++a) code = code * (z + 1) + static_cast<std::uint64_t>(h(f(static_cast<int>(a))));
      ++factorizations[code];
      return true;
    });
    bool ok = true;
    for_each_function(f.dom(), zs, [&](const SetFunction& g) {
      for (auto [a, b] : kernel)
        if (g(a) != g(b)) return true;
      std::uint64_t code = 0;
      for (std::size_t a = 0; a < ny; ++a) code = code * (z + 1) + static_cast<std::uint64_t>(g(static_cast<int>(a)));
      auto it = factorizations.find(code);
      if (it == factorizations.end() || it->second != 1) ok = false;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_universal_effective_epi(const SetFunction& f, std::size_t k) {
  for (std::size_t z = 0; z <= k; ++z) {
    bool ok = true;
    for_each_function(FinSet::range(z), f.cod(), [&](const SetFunction& g) {
      auto pb = pullback(g, f);
      ok = is_effective_epi(pb.first);
      return ok;
    });
    if (!ok) return false;
  }
  if (k >= 1 && !is_epi(f)) throw Error(ErrorKind::Mismatch, "bounded probe accepted a non-surjection");
  return true;
}

SetFunction coproduct_map(const std::vector<SetFunction>& fs) {
  std::vector<FinSet> doms, cods;
  for (const auto& f : fs) {
    doms.push_back(f.dom());
    cods.push_back(f.cod());
  }
  auto d = coproduct(doms), c = coproduct(cods);
  std::vector<int> m(d.object.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (int x = 0; x < static_cast<int>(fs[i].dom().size()); ++x) m[d.inclusions[i](x)] = c.inclusions[i](fs[i](x));
  return SetFunction(d.object, c.object, std::move(m));
}

SetFunction coproduct_of_effective_epis(const std::vector<SetFunction>& fs, std::size_t k) {
  auto out = coproduct_map(fs);
  bool all_eff = std::all_of(fs.begin(), fs.end(), [](const SetFunction& f) { return is_effective_epi(f); });
  if (all_eff && !is_effective_epi(out))
    throw Error(ErrorKind::Mismatch, "coproduct of effective epimorphisms is not effective");
  bool all_univ = std::all_of(fs.begin(), fs.end(), [k](const SetFunction& f) { return is_universal_effective_epi(f, k); });
  if (all_univ && !is_universal_effective_epi(out, k))
    throw Error(ErrorKind::Mismatch, "coproduct of universal effective epimorphisms is not universal");
  return out;
}

SetFunction coproduct_pullback_comparison(const std::vector<SetFunction>& bs, const SetFunction& d) {
  std::vector<FinSet> parts, doms;
  for (const auto& b : bs) doms.push_back(b.dom());
  auto total = coproduct(doms);
  std::vector<int> tm(total.object.size());
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (int x = 0; x < static_cast<int>(bs[i].dom().size()); ++x) tm[total.inclusions[i](x)] = bs[i](x);
  SetFunction total_map(total.object, d.cod(), std::move(tm));
  auto right = pullback(total_map, d);

  std::vector<Pullback> pbs;
  for (const auto& b : bs) {
    pbs.push_back(pullback(b, d));
    parts.push_back(pbs.back().object);
  }
  auto left = coproduct(parts);
  std::map<std::pair<int, int>, int> right_index;
  for (int p = 0; p < static_cast<int>(right.object.size()); ++p) right_index[{right.first(p), right.second(p)}] = p;
  std::vector<int> m(left.object.size());
  for (std::size_t i = 0; i < pbs.size(); ++i)
    for (int p = 0; p < static_cast<int>(pbs[i].object.size()); ++p)
      m[left.inclusions[i](p)] = right_index.at({total.inclusions[i](pbs[i].first(p)), pbs[i].second(p)});
  return SetFunction(left.object, right.object, std::move(m));
}

SetFunction kernel_pair_comparison(const std::vector<SetFunction>& fs) {
  auto total = coproduct_map(fs);
  std::vector<FinSet> doms;
  for (const auto& f : fs) doms.push_back(f.dom());
  auto dom_cop = coproduct(doms);
  auto right = pullback(total, total);
  std::map<std::pair<int, int>, int> right_index;
  for (int p = 0; p < static_cast<int>(right.object.size()); ++p) right_index[{right.first(p), right.second(p)}] = p;

  std::vector<Pullback> kps;
  std::vector<FinSet> parts;
  for (const auto& f : fs) {
    kps.push_back(pullback(f, f));
    parts.push_back(kps.back().object);
  }
  auto left = coproduct(parts);
  std::vector<int> m(left.object.size());
  for (std::size_t i = 0; i < kps.size(); ++i)
    for (int p = 0; p < static_cast<int>(kps[i].object.size()); ++p)
      m[left.inclusions[i](p)] =
          right_index.at({dom_cop.inclusions[i](kps[i].first(p)), dom_cop.inclusions[i](kps[i].second(p))});
  return SetFunction(left.object, right.object, std::move(m));
}

}  // namespace catsieve
