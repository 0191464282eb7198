#include "catsieve/ifcat.hpp"

#include <tuple>

namespace catsieve {

IFObjectPtr<CategoryWorld> sieve_object(const CategoryWorld& w, const SliceCategory& slice) {
  const FinCategory& t = *slice.category;
  std::vector<ObjId> values;
  std::vector<MorId> arrows;
  for (ObjId o = 0; o < static_cast<ObjId>(t.object_count()); ++o) values.push_back(slice.forget(o));
  for (MorId m = 0; m < static_cast<MorId>(t.morphism_count()); ++m) arrows.push_back(slice.forget.on_morphism(m));
  return make_if_object<CategoryWorld>(w, slice.category, std::move(values), std::move(arrows));
}

IFMorphism<CategoryWorld> canonical_cocone_map(const CategoryWorld& w, const IFObjectPtr<CategoryWorld>& sieve,
                                               const SliceCategory& slice, ObjId x) {
  auto cx = constant_object(w, x);
  return cocone_morphism(w, sieve, cx, slice.object_arrow);
}

void GrothendieckFunctor::validate() const {
  const FinCategory& b = *base;
  if (fibers.size() != b.object_count() || transitions.size() != b.morphism_count())
    throw Error(ErrorKind::NotFunctor, "fiber or transition count does not match the base");
  for (MorId f = 0; f < static_cast<MorId>(b.morphism_count()); ++f) {
    const FinFunctor& t = transitions[f];
    if (t.source() != fibers[b.src(f)] || t.target() != fibers[b.dst(f)])
      throw Error(ErrorKind::NotFunctor, "transition for " + b.morphism_name(f) + " has wrong endpoints");
    if (b.is_identity(f) && !(t == identity_functor(fibers[b.src(f)])))
      throw Error(ErrorKind::NotFunctor, "identity " + b.morphism_name(f) + " not sent to the identity");
    for (MorId g : b.arrows_from(b.dst(f)))
      if (!(transitions[b.compose(g, f)] == compose(transitions[g], t)))
        throw Error(ErrorKind::NotFunctor, "composite " + b.morphism_name(g) + "," + b.morphism_name(f));
  }
}

GrothendieckConstruction groth_construction(const GrothendieckFunctor& gf) {
  gf.validate();
  const FinCategory& b = *gf.base;

  FinCategory::Builder builder;
  std::vector<std::pair<ObjId, ObjId>> objects;
  std::map<std::pair<ObjId, ObjId>, ObjId> builder_object;
  for (ObjId a = 0; a < static_cast<ObjId>(b.object_count()); ++a) {
    const FinCategory& fib = *gf.fibers[a];
    for (ObjId t = 0; t < static_cast<ObjId>(fib.object_count()); ++t) {
      ObjId id = builder.add_object("(" + b.object_name(a) + "," + fib.object_name(t) + ")");
      builder_object[{a, t}] = id;
      objects.emplace_back(a, t);
    }
  }

  // Morphisms (a,τ) -> (a',τ') are pairs (f : a -> a', g : G(f)τ -> τ').
  struct Pending {
    MorId f;
    ObjId tau;
    MorId g;
  };
  std::vector<Pending> pending;
  std::map<std::tuple<MorId, ObjId, MorId>, MorId> builder_morphism;
  for (MorId f = 0; f < static_cast<MorId>(b.morphism_count()); ++f) {
    const FinCategory& from = *gf.fibers[b.src(f)];
    const FinCategory& to = *gf.fibers[b.dst(f)];
    const FinFunctor& t = gf.transitions[f];
    for (ObjId tau = 0; tau < static_cast<ObjId>(from.object_count()); ++tau) {
      for (MorId g : to.arrows_from(t(tau))) {
        ObjId s = builder_object.at({b.src(f), tau});
        ObjId d = builder_object.at({b.dst(f), to.dst(g)});
        MorId id = builder.add_morphism(
            "(" + b.morphism_name(f) + "," + from.object_name(tau) + "," + to.morphism_name(g) + ")", s, d);
        builder_morphism[{f, tau, g}] = id;
        pending.push_back({f, tau, g});
        if (b.is_identity(f) && to.is_identity(g)) builder.set_identity(s, id);
      }
    }
  }

  auto compose_pending = [&](MorId second, MorId first) {
    const Pending& p1 = pending[first];
    const Pending& p2 = pending[second];
    MorId f = b.compose(p2.f, p1.f);
    const FinCategory& last = *gf.fibers[b.dst(p2.f)];
    MorId g = last.compose(p2.g, gf.transitions[p2.f].on_morphism(p1.g));
    return builder_morphism.at({f, p1.tau, g});
  };
  auto built = builder.build(compose_pending, true);

  const FinCategory& c = *built.category;
  std::vector<std::pair<ObjId, ObjId>> object_data(c.object_count());
  std::vector<std::pair<MorId, MorId>> morphism_data(c.morphism_count());
  std::map<std::pair<ObjId, ObjId>, ObjId> object_index;
  std::vector<ObjId> proj_obj(c.object_count());
  std::vector<MorId> proj_mor(c.morphism_count());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    ObjId o = built.object[i];
    object_data[o] = objects[i];
    object_index[objects[i]] = o;
    proj_obj[o] = objects[i].first;
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    MorId m = built.morphism[i];
    morphism_data[m] = {pending[i].f, pending[i].g};
    proj_mor[m] = pending[i].f;
  }
  FinFunctor projection(built.category, gf.base, std::move(proj_obj), std::move(proj_mor));
  return GrothendieckConstruction{built.category, std::move(projection), std::move(object_data),
                                  std::move(morphism_data), std::move(object_index)};
}

}  // namespace catsieve
