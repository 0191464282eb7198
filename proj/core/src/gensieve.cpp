#include "catsieve/gensieve.hpp"

#include <algorithm>
#include <functional>

namespace catsieve {

namespace {

std::string chain_name(const FinCategory& c, const std::vector<MorId>& arrows) {
  std::string out = "(";
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) out += ",";
    out += c.morphism_name(arrows[i]);
  }
  return out + ")";
}

std::vector<MorId> drop_last(std::vector<MorId> v) {
  v.pop_back();
  return v;
}

void require_same_sieves(const std::vector<ExplicitSieve>& a, const std::vector<ExplicitSieve>& b,
                         const char* what) {
  if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin()))
    throw Error(ErrorKind::Mismatch, what);
}

}  // namespace

ObjId GeneralizedSieve::object_of(const std::vector<MorId>& chain) const {
  auto it = object_index.find(chain);
  if (it == object_index.end())
    throw Error(ErrorKind::UnknownObject, "no chain " + chain_name(*ambient, chain) + " in the generalized sieve");
  return it->second;
}

MorId GeneralizedSieve::morphism_of(ObjId src, ObjId dst, const std::vector<MorId>& ladder) const {
  auto it = morphism_index.find({src, dst, ladder});
  if (it == morphism_index.end())
    throw Error(ErrorKind::UnknownMorphism, "no ladder " + chain_name(*ambient, ladder) + " between " +
                                                category->object_name(src) + " and " + category->object_name(dst));
  return it->second;
}

ObjId GeneralizedSieve::bottom(ObjId o) const {
  const auto& ch = chains[o];
  return ch.empty() ? apex : ambient->src(ch.back());
}

MorId GeneralizedSieve::composite(ObjId o) const {
  MorId out = ambient->identity(apex);
  for (MorId r : chains[o]) out = ambient->compose(out, r);
  return out;
}

GeneralizedSievePtr build_generalized_sieve(const CategoryPtr& c, ObjId x, const std::vector<ExplicitSieve>& sieves,
                                            const Guards& guards, bool allow_long) {
  const FinCategory& cat = *c;
  for (const auto& t : sieves) {
    if (t.ambient != c) throw Error(ErrorKind::ApexMismatch, "sieve lives in a different ambient category");
    if (t.apex != x) throw Error(ErrorKind::ApexMismatch, "sieve is not on " + cat.object_name(x));
  }
  const std::size_t n = sieves.size();
  if (n > 3 && !allow_long) throw Error(ErrorKind::Malformed, "chains longer than three are not enabled");

  auto gs = std::make_shared<GeneralizedSieve>();
  gs->ambient = c;
  gs->apex = x;
  gs->sieves = sieves;

  Budget budget(guards.gensieve_objects, "generalized sieve objects");
  std::vector<std::vector<MorId>> chains;
  {
    std::vector<MorId> chain;
    std::function<void(ObjId, MorId)> extend = [&](ObjId bottom, MorId comp) {
      if (chain.size() == n) {
        budget.spend();
        chains.push_back(chain);
        return;
      }
      for (MorId r : cat.arrows_into(bottom)) {
        MorId next = cat.compose(comp, r);
        if (!sieves[chain.size()].contains(next)) continue;
        chain.push_back(r);
        extend(cat.src(r), next);
        chain.pop_back();
      }
    };
    extend(x, cat.identity(x));
  }
  std::map<std::vector<MorId>, std::size_t> chain_pos;
  for (std::size_t i = 0; i < chains.size(); ++i) chain_pos[chains[i]] = i;

  // Ladders out of each source chain, target chosen arrow by arrow.
  struct Pending {
    std::size_t src, dst;
    std::vector<MorId> ladder;
  };
  std::vector<Pending> pending;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<MorId>>, MorId> pending_index;
  FinCategory::Builder builder;
  for (const auto& ch : chains) builder.add_object(chain_name(cat, ch));
  for (std::size_t s = 0; s < chains.size(); ++s) {
    const auto& rho = chains[s];
    std::vector<MorId> tau, ladder;
    std::function<void(MorId, MorId)> extend = [&](MorId prev, MorId tau_comp) {
      std::size_t i = ladder.size();
      if (i == n) {
        std::size_t d = chain_pos.at(tau);
        MorId id = builder.add_morphism(chain_name(cat, ladder) + ":" + chain_name(cat, rho) + "->" +
                                            chain_name(cat, tau),
                                        static_cast<ObjId>(s), static_cast<ObjId>(d));
        pending_index[{s, d, ladder}] = id;
        pending.push_back({s, d, ladder});
        return;
      }
      MorId target = cat.compose(prev, rho[i]);
      for (MorId t : cat.arrows_into(cat.dst(prev))) {
        MorId comp = cat.compose(tau_comp, t);
        if (!sieves[i].contains(comp)) continue;
        for (MorId f : cat.hom(cat.src(rho[i]), cat.src(t))) {
          if (cat.compose(t, f) != target) continue;
          tau.push_back(t);
          ladder.push_back(f);
          extend(f, comp);
          tau.pop_back();
          ladder.pop_back();
        }
      }
    };
    extend(cat.identity(x), cat.identity(x));
  }
  for (std::size_t s = 0; s < chains.size(); ++s) {
    std::vector<MorId> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(cat.identity(cat.src(chains[s][i])));
    builder.set_identity(static_cast<ObjId>(s), pending_index.at({s, s, ids}));
  }

  auto compose_pending = [&](MorId g, MorId f) {
    const Pending& pf = pending[f];
    const Pending& pg = pending[g];
    std::vector<MorId> ladder(n);
    for (std::size_t i = 0; i < n; ++i) ladder[i] = cat.compose(pg.ladder[i], pf.ladder[i]);
    return pending_index.at({pf.src, pg.dst, ladder});
  };
  auto built = builder.build(compose_pending, false);

  gs->category = built.category;
  const FinCategory& g = *gs->category;
  gs->chains.resize(g.object_count());
  gs->ladders.resize(g.morphism_count());
  for (std::size_t i = 0; i < chains.size(); ++i) {
    gs->chains[built.object[i]] = chains[i];
    gs->object_index[chains[i]] = built.object[i];
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    MorId m = built.morphism[i];
    gs->ladders[m] = pending[i].ladder;
    gs->morphism_index[{built.object[pending[i].src], built.object[pending[i].dst], pending[i].ladder}] = m;
  }

  std::vector<ObjId> values;
  std::vector<MorId> arrows;
  for (ObjId o = 0; o < static_cast<ObjId>(g.object_count()); ++o) values.push_back(gs->bottom(o));
  for (MorId m = 0; m < static_cast<MorId>(g.morphism_count()); ++m)
    arrows.push_back(n == 0 ? cat.identity(x) : gs->ladders[m].back());
  gs->diagram = make_if_object<CategoryWorld>(CategoryWorld{c}, gs->category, std::move(values), std::move(arrows));
  return gs;
}

FinFunctor forgetful_functor(const GeneralizedSieve& from, const GeneralizedSieve& to) {
  if (from.length() == 0) throw Error(ErrorKind::Mismatch, "the forgetful functor needs a nonempty chain");
  if (from.ambient != to.ambient || from.apex != to.apex)
    throw Error(ErrorKind::Mismatch, "generalized sieves over different apexes");
  require_same_sieves(std::vector<ExplicitSieve>(from.sieves.begin(), from.sieves.end() - 1), to.sieves,
                      "target is not the truncated generalized sieve");
  const FinCategory& c = *from.category;
  std::vector<ObjId> objects;
  std::vector<MorId> morphisms;
  for (ObjId o = 0; o < static_cast<ObjId>(c.object_count()); ++o)
    objects.push_back(to.object_of(drop_last(from.chains[o])));
  for (MorId m = 0; m < static_cast<MorId>(c.morphism_count()); ++m)
    morphisms.push_back(to.morphism_of(objects[c.src(m)], objects[c.dst(m)], drop_last(from.ladders[m])));
  return FinFunctor(from.category, to.category, std::move(objects), std::move(morphisms));
}

IFMorphism<CategoryWorld> forgetful_F(const CategoryWorld& w, const GeneralizedSieve& from,
                                      const GeneralizedSieve& to) {
  auto f = forgetful_functor(from, to);
  std::vector<MorId> eta;
  for (const auto& ch : from.chains) eta.push_back(ch.back());
  return make_if_morphism<CategoryWorld>(w, from.diagram, to.diagram, std::move(f), std::move(eta));
}

FinFunctor composition_functor(const GeneralizedSieve& from, const GeneralizedSieve& to) {
  if (from.length() < 2) throw Error(ErrorKind::Mismatch, "the composition functor needs two arrows");
  if (from.ambient != to.ambient || from.apex != to.apex)
    throw Error(ErrorKind::Mismatch, "generalized sieves over different apexes");
  require_same_sieves(std::vector<ExplicitSieve>(from.sieves.begin() + 1, from.sieves.end()), to.sieves,
                      "target is not the generalized sieve on the tail");
  const FinCategory& amb = *from.ambient;
  const FinCategory& c = *from.category;
  std::vector<ObjId> objects;
  std::vector<MorId> morphisms;
  for (ObjId o = 0; o < static_cast<ObjId>(c.object_count()); ++o) {
    const auto& ch = from.chains[o];
    std::vector<MorId> merged{amb.compose(ch[0], ch[1])};
    merged.insert(merged.end(), ch.begin() + 2, ch.end());
    objects.push_back(to.object_of(merged));
  }
  for (MorId m = 0; m < static_cast<MorId>(c.morphism_count()); ++m) {
    std::vector<MorId> tail(from.ladders[m].begin() + 1, from.ladders[m].end());
    morphisms.push_back(to.morphism_of(objects[c.src(m)], objects[c.dst(m)], tail));
  }
  return FinFunctor(from.category, to.category, std::move(objects), std::move(morphisms));
}

IFMorphism<CategoryWorld> composition_mu(const CategoryWorld& w, const GeneralizedSieve& from,
                                         const GeneralizedSieve& to) {
  auto f = composition_functor(from, to);
  std::vector<MorId> eta;
  for (ObjId o = 0; o < static_cast<ObjId>(from.chains.size()); ++o) eta.push_back(w.identity(from.bottom(o)));
  return make_if_morphism<CategoryWorld>(w, from.diagram, to.diagram, std::move(f), std::move(eta));
}

IFMorphism<CategoryWorld> chain_cocone_map(const CategoryWorld& w, const GeneralizedSieve& t,
                                           const IFObjectPtr<CategoryWorld>& cx) {
  std::vector<MorId> legs;
  for (ObjId o = 0; o < static_cast<ObjId>(t.chains.size()); ++o) legs.push_back(t.composite(o));
  return cocone_morphism(w, t.diagram, cx, std::move(legs));
}

DiagramOne diagram_one(const ExplicitSieve& r, const ExplicitSieve& s, const Guards& guards) {
  if (r.ambient != s.ambient || r.apex != s.apex) throw Error(ErrorKind::ApexMismatch, "R and S differ in apex");
  CategoryWorld w{r.ambient};
  ObjId x = r.apex;
  auto gr = build_generalized_sieve(w.ambient, x, {r}, guards);
  auto gs = build_generalized_sieve(w.ambient, x, {s}, guards);
  auto grs = build_generalized_sieve(w.ambient, x, {r, s}, guards);
  auto gsr = build_generalized_sieve(w.ambient, x, {s, r}, guards);
  auto grsr = build_generalized_sieve(w.ambient, x, {r, s, r}, guards);
  auto cx = constant_object(w, x);
  DiagramOne d{w,
               x,
               gr,
               gs,
               grs,
               gsr,
               grsr,
               cx,
               chain_cocone_map(w, *gr, cx),
               chain_cocone_map(w, *gs, cx),
               forgetful_F(w, *grs, *gr),
               forgetful_F(w, *grsr, *grs),
               forgetful_F(w, *gsr, *gs),
               composition_mu(w, *grsr, *gsr),
               composition_mu(w, *gsr, *gr)};
  if (!(compose_if(w, d.phi_s, d.f_sr) == compose_if(w, d.phi_r, d.mu_sr)))
    throw Error(ErrorKind::Mismatch, "upper right triangle of diagram (1) does not commute");
  return d;
}

ThetaTwoMorphism theta_two_morphism(const DiagramOne& d) {
  const auto& w = d.world;
  const FinCategory& amb = *w.ambient;
  auto mu_mu = compose_if(w, d.mu_sr, d.mu_rsr);
  auto ff = compose_if(w, d.f_rs, d.f_rsr);
  std::vector<MorId> components;
  const GeneralizedSieve& rsr = *d.rsr;
  for (ObjId o = 0; o < static_cast<ObjId>(rsr.chains.size()); ++o) {
    const auto& ch = rsr.chains[o];
    MorId tg = amb.compose(ch[1], ch[2]);
    components.push_back(d.r->morphism_of(mu_mu.g(o), ff.g(o), {tg}));
  }
  bool valid = is_two_morphism(w, mu_mu, ff, components);
  return ThetaTwoMorphism{std::move(mu_mu), std::move(ff), std::move(components), valid};
}

namespace {

std::vector<int> compose_maps(const std::vector<int>& second, const std::vector<int>& first) {
  std::vector<int> out;
  for (int i : first) out.push_back(second[i]);
  return out;
}

bool is_bijective_map(const std::vector<int>& m, std::size_t target_size) {
  if (m.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (int i : m) {
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

}  // namespace

DiagramTwoReport diagram_two(const DiagramOne& d, ObjId y, Budget& budget) {
  const auto& w = d.world;
  auto phi_r = induced_map_on_homs(w, d.phi_r, y, budget);
  auto phi_s = induced_map_on_homs(w, d.phi_s, y, budget);
  auto f_rs = induced_map_on_homs(w, d.f_rs, y, budget);
  auto f_rsr = induced_map_on_homs(w, d.f_rsr, y, budget);
  auto f_sr = induced_map_on_homs(w, d.f_sr, y, budget);
  auto mu_rsr = induced_map_on_homs(w, d.mu_rsr, y, budget);
  auto alpha = induced_map_on_homs(w, d.mu_sr, y, budget);

  DiagramTwoReport rep;
  rep.y = y;
  auto right_path = compose_maps(f_sr.map, phi_s.map);
  auto left_path = compose_maps(alpha.map, phi_r.map);
  rep.upper_right_commutes = right_path == left_path;
  auto down_path = compose_maps(f_rsr.map, f_rs.map);
  auto diagonal_path = compose_maps(mu_rsr.map, alpha.map);
  rep.lower_left_commutes = down_path == diagonal_path;

  rep.phi_s_bijective = phi_s.bijective();
  rep.f_rs_bijective = f_rs.bijective();
  rep.f_rsr_bijective = f_rsr.bijective();
  rep.f_sr_bijective = f_sr.bijective();

  // μ*∘α is the bijective vertical composite, so α is injective; α∘φR* is
  // the bijective right-hand composite, so α is surjective.
  if (rep.lower_left_commutes && is_bijective_map(down_path, f_rsr.to.size()))
    rep.alpha_injective_forced = true;
  if (rep.upper_right_commutes && is_bijective_map(right_path, f_sr.to.size()))
    rep.alpha_surjective_forced = true;
  rep.alpha_bijective = alpha.bijective();
  rep.phi_r_bijective = phi_r.bijective();
  return rep;
}

bool TransitivityReport::consistent() const {
  if (!theta_valid) return false;
  for (const auto& p : per_object)
    if (!p.upper_right_commutes || !p.lower_left_commutes) return false;
  if (!hypotheses_hold()) return true;
  for (const auto& p : per_object) {
    if (!p.phi_s_bijective || !p.f_rs_bijective || !p.f_rsr_bijective || !p.f_sr_bijective) return false;
    if (!p.alpha_injective_forced || !p.alpha_surjective_forced || !p.alpha_bijective) return false;
    if (!p.phi_r_bijective) return false;
  }
  return r_colim_direct && r_universal_direct;
}

TransitivityReport transitivity_instance(const ExplicitSieve& r, const ExplicitSieve& s, const Guards& guards) {
  TransitivityReport rep;
  rep.s_universal = is_universal_colim_sieve(s, guards).holds;
  rep.pullbacks_universal = true;
  for (MorId f : s.members)
    if (!is_universal_colim_sieve(pullback_sieve(r, f), guards).holds) {
      rep.pullbacks_universal = false;
      break;
    }
  auto d = diagram_one(r, s, guards);
  rep.theta_valid = theta_two_morphism(d).valid;
  Budget budget(guards.cocone_candidates, "cocone candidates");
  for (ObjId y = 0; y < static_cast<ObjId>(r.ambient->object_count()); ++y)
    rep.per_object.push_back(diagram_two(d, y, budget));
  rep.r_colim_direct = is_colim_sieve(r, guards).holds;
  rep.r_universal_direct = is_universal_colim_sieve(r, guards).holds;
  return rep;
}

bool verify_cor_4_8(const ExplicitSieve& v, const ExplicitSieve& w, const std::vector<ExplicitSieve>& ts,
                    std::optional<ObjId> y, const Guards& guards) {
  for (MorId f : v.members)
    if (!is_colim_sieve(pullback_sieve(w, f), guards).holds)
      throw Error(ErrorKind::HypothesisFails,
                  "pullback along " + v.ambient->morphism_name(f) + " is not a colim sieve");
  CategoryWorld world{v.ambient};
  auto shorter = ts;
  shorter.push_back(v);
  auto longer = shorter;
  longer.push_back(w);
  auto a = build_generalized_sieve(world.ambient, v.apex, shorter, guards);
  auto b = build_generalized_sieve(world.ambient, v.apex, longer, guards);
  auto f = forgetful_F(world, *b, *a);
  Budget budget(guards.cocone_candidates, "cocone candidates");
  std::vector<ObjId> targets;
  if (y) {
    targets.push_back(*y);
  } else {
    targets = world.test_objects();
  }
  for (ObjId t : targets)
    if (!induced_map_on_homs(world, f, t, budget).bijective()) return false;
  return true;
}

GrothendieckComparison compare_with_grothendieck(const CategoryPtr& c, ObjId x,
                                                 const std::vector<ExplicitSieve>& sieves, const Guards& guards) {
  if (sieves.empty()) throw Error(ErrorKind::Mismatch, "the comparison needs at least one sieve");
  const FinCategory& amb = *c;
  auto full = build_generalized_sieve(c, x, sieves, guards);
  auto base = build_generalized_sieve(c, x, std::vector<ExplicitSieve>(sieves.begin(), sieves.end() - 1), guards);
  const FinCategory& bc = *base->category;
  const ExplicitSieve& last = sieves.back();

  std::vector<SliceCategory> fibers;
  GrothendieckFunctor gf{base->category, {}, {}};
  for (ObjId a = 0; a < static_cast<ObjId>(bc.object_count()); ++a) {
    fibers.push_back(sieve_category(pullback_sieve(last, base->composite(a))));
    gf.fibers.push_back(fibers.back().category);
  }
  for (MorId m = 0; m < static_cast<MorId>(bc.morphism_count()); ++m) {
    const SliceCategory& from = fibers[bc.src(m)];
    const SliceCategory& to = fibers[bc.dst(m)];
    MorId step = base->length() == 0 ? amb.identity(x) : base->ladders[m].back();
    const FinCategory& fc = *from.category;
    std::vector<ObjId> objects;
    std::vector<MorId> morphisms;
    for (ObjId t = 0; t < static_cast<ObjId>(fc.object_count()); ++t)
      objects.push_back(to.object_of(amb.compose(step, from.object_arrow[t])));
    for (MorId g = 0; g < static_cast<MorId>(fc.morphism_count()); ++g) {
      ObjId s = objects[fc.src(g)], d = objects[fc.dst(g)];
      MorId found = -1;
      for (MorId h : to.category->arrows_from(s))
        if (to.category->dst(h) == d && to.morphism_arrow[h] == from.morphism_arrow[g]) found = h;
      if (found < 0) throw Error(ErrorKind::NotFunctor, "fiber transition lost a triangle");
      morphisms.push_back(found);
    }
    gf.transitions.emplace_back(from.category, to.category, std::move(objects), std::move(morphisms));
  }
  auto gr = groth_construction(gf);

  GrothendieckComparison out;
  const FinCategory& gc = *gr.category;
  std::vector<ObjId> objects;
  std::vector<MorId> morphisms;
  try {
    for (ObjId o = 0; o < static_cast<ObjId>(gc.object_count()); ++o) {
      auto [a, t] = gr.object_data[o];
      auto chain = base->chains[a];
      chain.push_back(fibers[a].object_arrow[t]);
      objects.push_back(full->object_of(chain));
    }
    for (MorId m = 0; m < static_cast<MorId>(gc.morphism_count()); ++m) {
      auto [f, g] = gr.morphism_data[m];
      auto ladder = base->ladders[f];
      ladder.push_back(fibers[bc.dst(f)].morphism_arrow[g]);
      morphisms.push_back(full->morphism_of(objects[gc.src(m)], objects[gc.dst(m)], ladder));
    }
  } catch (const Error& e) {
    out.witness = e.what();
    return out;
  }
  auto injective_onto = [](std::vector<int> v, std::size_t n) {
    std::sort(v.begin(), v.end());
    return v.size() == n && std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  out.objects_bijective = injective_onto(objects, full->category->object_count());
  out.morphisms_bijective = injective_onto(morphisms, full->category->morphism_count());
  try {
    FinFunctor phi(gr.category, full->category, objects, morphisms);
    out.functor = true;
    auto proj = forgetful_functor(*full, *base);
    out.projection_matches = compose(proj, phi) == gr.projection;
  } catch (const Error& e) {
    out.witness = e.what();
  }
  return out;
}

}  // namespace catsieve
