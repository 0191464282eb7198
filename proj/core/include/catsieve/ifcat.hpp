#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catsieve/errors.hpp"
#include "catsieve/fincat.hpp"
#include "catsieve/finset.hpp"
#include "catsieve/sieves.hpp"

namespace catsieve {

inline bool less_mor(MorId a, MorId b) { return a < b; }
inline bool less_mor(const SetFunction& a, const SetFunction& b) { return a.map() < b.map(); }

template <class Mor>
bool less_legs(const std::vector<Mor>& a, const std::vector<Mor>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Mor& x, const Mor& y) { return less_mor(x, y); });
}

// Ambient world backed by a finite category.
struct CategoryWorld {
  using Obj = ObjId;
  using Mor = MorId;

  CategoryPtr ambient;

  Mor compose(Mor g, Mor f) const { return ambient->compose(g, f); }
  Mor identity(Obj a) const { return ambient->identity(a); }
  Obj src(Mor f) const { return ambient->src(f); }
  Obj dst(Mor f) const { return ambient->dst(f); }
  std::vector<Mor> hom(Obj a, Obj b) const {
    auto h = ambient->hom(a, b);
    return {h.begin(), h.end()};
  }
  std::vector<Obj> test_objects() const {
    std::vector<Obj> out(ambient->object_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Obj>(i);
    return out;
  }
  std::string describe(Obj a) const { return ambient->object_name(a); }
};

// Ambient world of finite sets. Quantification over "all objects" runs
// over {0..n-1} for n <= probe.
struct SetWorld {
  using Obj = FinSet;
  using Mor = SetFunction;

  std::size_t probe = 4;

  Mor compose(const Mor& g, const Mor& f) const { return catsieve::compose(g, f); }
  Mor identity(const Obj& a) const { return catsieve::identity(a); }
  Obj src(const Mor& f) const { return f.dom(); }
  Obj dst(const Mor& f) const { return f.cod(); }
  std::vector<Mor> hom(const Obj& a, const Obj& b) const { return all_functions(a, b); }
  std::vector<Obj> test_objects() const {
    std::vector<Obj> out;
    for (std::size_t n = 0; n <= probe; ++n) out.push_back(FinSet::range(n));
    return out;
  }
  std::string describe(const Obj& a) const { return "set of size " + std::to_string(a.size()); }
};

// (I, F): an index category with a diagram into the world.
template <class W>
struct IFObject {
  CategoryPtr index;
  std::vector<typename W::Obj> values;
  std::vector<typename W::Mor> arrows;

  void validate(const W& w) const {
    const FinCategory& i = *index;
    if (values.size() != i.object_count() || arrows.size() != i.morphism_count())
      throw Error(ErrorKind::NotFunctor, "diagram sizes do not match the index category");
    for (MorId f = 0; f < static_cast<MorId>(i.morphism_count()); ++f) {
      if (!(w.src(arrows[f]) == values[i.src(f)]) || !(w.dst(arrows[f]) == values[i.dst(f)]))
        throw Error(ErrorKind::NotFunctor, "value of " + i.morphism_name(f) + " has wrong endpoints");
      if (i.is_identity(f) && !(arrows[f] == w.identity(values[i.src(f)])))
        throw Error(ErrorKind::NotFunctor, "identity " + i.morphism_name(f) + " not preserved");
      for (MorId g : i.arrows_from(i.dst(f)))
        if (!(arrows[i.compose(g, f)] == w.compose(arrows[g], arrows[f])))
          throw Error(ErrorKind::NotFunctor, "composite " + i.morphism_name(g) + "," + i.morphism_name(f));
    }
  }
};

template <class W>
using IFObjectPtr = std::shared_ptr<const IFObject<W>>;

// (g, η): (I,F) -> (I',F') with η : F -> F'∘g.
template <class W>
struct IFMorphism {
  IFObjectPtr<W> source;
  IFObjectPtr<W> target;
  FinFunctor g;
  std::vector<typename W::Mor> eta;

  void validate(const W& w) const {
    if (g.source() != source->index || g.target() != target->index)
      throw Error(ErrorKind::Mismatch, "index functor does not match the IF-objects");
    const FinCategory& i = *source->index;
    if (eta.size() != i.object_count()) throw Error(ErrorKind::NotNatural, "component count mismatch");
    for (ObjId a = 0; a < static_cast<ObjId>(i.object_count()); ++a)
      if (!(w.src(eta[a]) == source->values[a]) || !(w.dst(eta[a]) == target->values[g(a)]))
        throw Error(ErrorKind::NotNatural, "component at " + i.object_name(a) + " has wrong endpoints");
    for (MorId f = 0; f < static_cast<MorId>(i.morphism_count()); ++f) {
      auto lhs = w.compose(target->arrows[g.on_morphism(f)], eta[i.src(f)]);
      auto rhs = w.compose(eta[i.dst(f)], source->arrows[f]);
      if (!(lhs == rhs)) throw Error(ErrorKind::NotNatural, "naturality fails at " + i.morphism_name(f));
    }
  }

  bool operator==(const IFMorphism& other) const {
    return source == other.source && target == other.target && g == other.g && eta == other.eta;
  }
};

template <class W>
IFMorphism<W> make_if_morphism(const W& w, IFObjectPtr<W> source, IFObjectPtr<W> target, FinFunctor g,
                               std::vector<typename W::Mor> eta) {
  IFMorphism<W> m{std::move(source), std::move(target), std::move(g), std::move(eta)};
  m.validate(w);
  return m;
}

template <class W>
IFObjectPtr<W> make_if_object(const W& w, CategoryPtr index, std::vector<typename W::Obj> values,
                              std::vector<typename W::Mor> arrows) {
  auto o = std::make_shared<IFObject<W>>(IFObject<W>{std::move(index), std::move(values), std::move(arrows)});
  o->validate(w);
  return o;
}

template <class W>
IFObjectPtr<W> constant_object(const W& w, const typename W::Obj& z) {
  return make_if_object<W>(w, point_category(), {z}, {w.identity(z)});
}

// (g2∘g1, g1*(η2)∘η1)
template <class W>
IFMorphism<W> compose_if(const W& w, const IFMorphism<W>& m2, const IFMorphism<W>& m1) {
  if (m1.target != m2.source) throw Error(ErrorKind::Mismatch, "IF-morphisms are not composable");
  std::vector<typename W::Mor> eta;
  const FinCategory& i = *m1.source->index;
  for (ObjId a = 0; a < static_cast<ObjId>(i.object_count()); ++a) eta.push_back(w.compose(m2.eta[m1.g(a)], m1.eta[a]));
  return IFMorphism<W>{m1.source, m2.target, compose(m2.g, m1.g), std::move(eta)};
}

template <class W>
IFMorphism<W> identity_if(const W& w, const IFObjectPtr<W>& a) {
  std::vector<typename W::Mor> eta;
  for (const auto& v : a->values) eta.push_back(w.identity(v));
  return IFMorphism<W>{a, a, identity_functor(a->index), std::move(eta)};
}

// The morphism (t, legs): A -> cZ for a cocone with nadir z.
template <class W>
IFMorphism<W> cocone_morphism(const W& w, const IFObjectPtr<W>& a, const IFObjectPtr<W>& cz,
                              std::vector<typename W::Mor> legs) {
  auto t = constant_functor(a->index, cz->index, 0);
  return make_if_morphism<W>(w, a, cz, std::move(t), std::move(legs));
}

// All morphisms A -> cY as leg lists, in lexicographic order of
// (index object, component).
template <class W>
std::vector<std::vector<typename W::Mor>> hom_into_constant(const W& w, const IFObject<W>& a,
                                                            const typename W::Obj& y, Budget& budget) {
  using Mor = typename W::Mor;
  const FinCategory& idx = *a.index;
  const auto n = static_cast<ObjId>(idx.object_count());
  std::vector<std::vector<Mor>> candidates(n);
  for (ObjId i = 0; i < n; ++i) candidates[i] = w.hom(a.values[i], y);

  std::vector<std::optional<Mor>> legs(n);
  std::vector<ObjId> trail;
  std::vector<std::vector<Mor>> out;

  auto propagate = [&](ObjId start, const Mor& leg) {
    std::vector<std::pair<ObjId, Mor>> stack{{start, leg}};
    while (!stack.empty()) {
      auto [j, m] = stack.back();
      stack.pop_back();
      if (legs[j]) {
        if (!(*legs[j] == m)) return false;
        continue;
      }
      legs[j] = m;
      trail.push_back(j);
      for (MorId sigma : idx.arrows_into(j)) {
        if (idx.is_identity(sigma)) continue;
        stack.emplace_back(idx.src(sigma), w.compose(m, a.arrows[sigma]));
      }
    }
    return true;
  };

  std::function<void(ObjId)> rec = [&](ObjId pos) {
    while (pos < n && legs[pos]) ++pos;
    if (pos == n) {
      std::vector<Mor> full;
      for (auto& l : legs) full.push_back(*l);
      out.push_back(std::move(full));
      return;
    }
    for (const Mor& c : candidates[pos]) {
      budget.spend();
      std::size_t mark = trail.size();
      if (propagate(pos, c)) rec(pos + 1);
      while (trail.size() > mark) {
        legs[trail.back()].reset();
        trail.pop_back();
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), less_legs<Mor>);
  return out;
}

// F* : A(B, cY) -> A(A, cY) for F : A -> B, as an index map between the two
// enumerated lists.
template <class W>
struct HomMap {
  std::vector<std::vector<typename W::Mor>> from;  // A(B, cY)
  std::vector<std::vector<typename W::Mor>> to;    // A(A, cY)
  std::vector<int> map;

  bool injective() const {
    std::vector<int> seen(to.size(), 0);
    for (int m : map)
      if (seen[m]++) return false;
    return true;
  }
  bool surjective() const {
    std::vector<bool> hit(to.size(), false);
    for (int m : map) hit[m] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }
  bool bijective() const { return injective() && surjective(); }
};

template <class W>
std::vector<typename W::Mor> precompose_legs(const W& w, const IFMorphism<W>& f,
                                             const std::vector<typename W::Mor>& chi) {
  std::vector<typename W::Mor> out;
  const FinCategory& i = *f.source->index;
  for (ObjId a = 0; a < static_cast<ObjId>(i.object_count()); ++a) out.push_back(w.compose(chi[f.g(a)], f.eta[a]));
  return out;
}

template <class W>
HomMap<W> induced_map_on_homs(const W& w, const IFMorphism<W>& f, const typename W::Obj& y, Budget& budget) {
  HomMap<W> h;
  h.from = hom_into_constant(w, *f.target, y, budget);
  h.to = hom_into_constant(w, *f.source, y, budget);
  for (const auto& chi : h.from) {
    auto image = precompose_legs(w, f, chi);
    auto it = std::lower_bound(h.to.begin(), h.to.end(), image, less_legs<typename W::Mor>);
    if (it == h.to.end() || !(*it == image)) throw Error(ErrorKind::Mismatch, "precomposition left the hom list");
    h.map.push_back(static_cast<int>(it - h.to.begin()));
  }
  return h;
}

struct HomsetDecision {
  bool holds = false;
  std::string witness;
};

// Lemma form of the colimit test: φ* bijective for every test object Y.
template <class W>
HomsetDecision colimit_via_homsets(const W& w, const IFObjectPtr<W>& a, const typename W::Obj& x,
                                   const std::vector<typename W::Mor>& legs, Budget& budget) {
  auto cx = constant_object(w, x);
  auto phi = cocone_morphism(w, a, cx, legs);
  for (const auto& y : w.test_objects()) {
    auto h = induced_map_on_homs(w, phi, y, budget);
    if (!h.injective()) return {false, "two maps out of the nadir agree on the cocone at " + w.describe(y)};
    if (!h.surjective()) return {false, "a cocone to " + w.describe(y) + " does not factor"};
  }
  return {true, {}};
}

// θ : f -> g (components in the target index category) is a 2-morphism.
template <class W>
bool is_two_morphism(const W& w, const IFMorphism<W>& f, const IFMorphism<W>& g, const std::vector<MorId>& theta) {
  if (f.source != g.source || f.target != g.target) return false;
  const FinCategory& i = *f.source->index;
  const FinCategory& j = *f.target->index;
  if (theta.size() != i.object_count()) return false;
  for (ObjId a = 0; a < static_cast<ObjId>(i.object_count()); ++a) {
    MorId t = theta[a];
    if (t < 0 || t >= static_cast<MorId>(j.morphism_count()) || j.src(t) != f.g(a) || j.dst(t) != g.g(a)) return false;
    if (!(w.compose(f.target->arrows[t], f.eta[a]) == g.eta[a])) return false;
  }
  for (MorId s = 0; s < static_cast<MorId>(i.morphism_count()); ++s)
    if (j.compose(g.g.on_morphism(s), theta[i.src(s)]) != j.compose(theta[i.dst(s)], f.g.on_morphism(s))) return false;
  return true;
}

// Sieves as IF-objects (T, U) and the canonical cocone map φ_T : T -> cX.
IFObjectPtr<CategoryWorld> sieve_object(const CategoryWorld& w, const SliceCategory& slice);
IFMorphism<CategoryWorld> canonical_cocone_map(const CategoryWorld& w, const IFObjectPtr<CategoryWorld>& sieve,
                                               const SliceCategory& slice, ObjId x);

struct GrothendieckFunctor {
  CategoryPtr base;
  std::vector<CategoryPtr> fibers;      // per base object
  std::vector<FinFunctor> transitions;  // per base morphism

  // Throws NotFunctor.
  void validate() const;
};

struct GrothendieckConstruction {
  CategoryPtr category;
  FinFunctor projection;
  std::vector<std::pair<ObjId, ObjId>> object_data;    // (a, τ)
  std::vector<std::pair<MorId, MorId>> morphism_data;  // (f, g)
  std::map<std::pair<ObjId, ObjId>, ObjId> object_index;
};

GrothendieckConstruction groth_construction(const GrothendieckFunctor& g);

}  // namespace catsieve
