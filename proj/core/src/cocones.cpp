#include "catsieve/cocones.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace catsieve {

namespace {

std::string join_names(const FinCategory& c, const std::vector<MorId>& ms) {
  std::string out = "[";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ",";
    out += c.morphism_name(ms[i]);
  }
  return out + "]";
}

FinFunctor discrete_diagram(const CategoryPtr& c, const std::vector<ObjId>& parts) {
  auto shape = discrete_category(parts.size());
  std::vector<MorId> mors;
  for (ObjId p : parts) mors.push_back(c->identity(p));
  return FinFunctor(shape, c, parts, std::move(mors));
}

}  // namespace

void for_each_cocone(const FinFunctor& d, ObjId z, Budget& budget,
                     const std::function<bool(const std::vector<MorId>&)>& visit) {
  const FinCategory& shape = *d.source();
  const FinCategory& amb = *d.target();
  const auto n = static_cast<ObjId>(shape.object_count());

  // Objects with many incoming arrows first: fixing their leg forces the most.
  std::vector<ObjId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> indeg(n, 0);
  for (ObjId a = 0; a < n; ++a) indeg[a] = shape.arrows_into(a).size();
  std::stable_sort(order.begin(), order.end(), [&](ObjId a, ObjId b) { return indeg[a] > indeg[b]; });

  std::vector<MorId> legs(n, -1);
  std::vector<ObjId> trail;
  std::vector<std::pair<ObjId, MorId>> stack;

  auto propagate = [&](ObjId i, MorId leg) {
    stack.clear();
    stack.emplace_back(i, leg);
    while (!stack.empty()) {
      auto [j, m] = stack.back();
      stack.pop_back();
      if (legs[j] >= 0) {
        if (legs[j] != m) return false;
        continue;
      }
      legs[j] = m;
      trail.push_back(j);
      for (MorId sigma : shape.arrows_into(j)) {
        if (shape.is_identity(sigma)) continue;
        stack.emplace_back(shape.src(sigma), amb.compose(m, d.on_morphism(sigma)));
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      legs[trail.back()] = -1;
      trail.pop_back();
    }
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    while (pos < order.size() && legs[order[pos]] >= 0) ++pos;
    if (pos == order.size()) return visit(legs);
    ObjId i = order[pos];
    for (MorId l : amb.hom(d(i), z)) {
      budget.spend();
      std::size_t mark = trail.size();
      bool ok = propagate(i, l);
      bool keep_going = true;
      if (ok) keep_going = rec(pos + 1);
      undo(mark);
      if (!keep_going) return false;
    }
    return true;
  };
  rec(0);
}

std::vector<std::vector<MorId>> all_cocones(const FinFunctor& d, ObjId z, Budget& budget) {
  std::vector<std::vector<MorId>> out;
  for_each_cocone(d, z, budget, [&](const std::vector<MorId>& legs) {
    out.push_back(legs);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

CoconeTable::CoconeTable(FinFunctor d, const Guards& guards) : d_(std::move(d)) {
  Budget budget(guards.cocone_candidates, "cocone enumeration");
  const auto n = d_.target()->object_count();
  cocones_.resize(n);
  for (ObjId z = 0; z < static_cast<ObjId>(n); ++z) cocones_[z] = all_cocones(d_, z, budget);
}

UniversalityResult CoconeTable::check(ObjId nadir, const std::vector<MorId>& legs) const {
  const FinCategory& amb = *d_.target();
  UniversalityResult r;
  for (ObjId z = 0; z < static_cast<ObjId>(amb.object_count()); ++z) {
    std::map<std::vector<MorId>, std::vector<MorId>> mediated;
    for (MorId u : amb.hom(nadir, z)) {
      std::vector<MorId> image(legs.size());
      for (std::size_t i = 0; i < legs.size(); ++i) image[i] = amb.compose(u, legs[i]);
      mediated[image].push_back(u);
    }
    for (const auto& cocone : cocones_[z]) {
      auto it = mediated.find(cocone);
      std::size_t count = it == mediated.end() ? 0 : it->second.size();
      if (count == 1) continue;
      r.nadir = z;
      r.cocone = cocone;
      if (count == 0) {
        r.reason = "cocone " + join_names(amb, cocone) + " to " + amb.object_name(z) + " does not factor";
      } else {
        r.mediators = it->second;
        r.reason = "cocone " + join_names(amb, cocone) + " to " + amb.object_name(z) + " factors through " +
                   join_names(amb, it->second);
      }
      return r;
    }
  }
  r.universal = true;
  return r;
}

UniversalityResult check_universal_cocone(const Cocone& c, const Guards& guards) {
  if (!c.commutes()) {
    UniversalityResult r;
    r.reason = "legs do not form a cocone";
    return r;
  }
  return CoconeTable(c.diagram, guards).check(c.nadir, c.legs);
}

std::optional<Cocone> colim_by_universal_property(const FinFunctor& d, const Guards& guards) {
  CoconeTable table(d, guards);
  for (ObjId x = 0; x < static_cast<ObjId>(d.target()->object_count()); ++x)
    for (const auto& legs : table.cocones_to(x))
      if (table.check(x, legs).universal) return Cocone{d, x, legs};
  return std::nullopt;
}

std::optional<PullbackSquare> find_pullback(const FinCategory& c, MorId f, MorId g) {
  if (c.dst(f) != c.dst(g))
    throw Error(ErrorKind::CodomainMismatch, c.morphism_name(f) + " and " + c.morphism_name(g));
  ObjId a = c.src(f), b = c.src(g);
  const auto n = static_cast<ObjId>(c.object_count());
  std::vector<std::vector<std::pair<MorId, MorId>>> cones(n);
  for (ObjId q = 0; q < n; ++q)
    for (MorId q1 : c.hom(q, a))
      for (MorId q2 : c.hom(q, b))
        if (c.compose(f, q1) == c.compose(g, q2)) cones[q].emplace_back(q1, q2);

  for (ObjId p = 0; p < n; ++p) {
    for (auto [p1, p2] : cones[p]) {
      bool universal = true;
      for (ObjId q = 0; q < n && universal; ++q) {
        std::map<std::pair<MorId, MorId>, int> hits;
        for (MorId u : c.hom(q, p)) ++hits[{c.compose(p1, u), c.compose(p2, u)}];
        for (const auto& cone : cones[q]) {
          auto it = hits.find(cone);
          if (it == hits.end() || it->second != 1) {
            universal = false;
            break;
          }
        }
      }
      if (universal) return PullbackSquare{p, p1, p2};
    }
  }
  return std::nullopt;
}

CoproductReport check_coproduct_properties(const CategoryPtr& cp, const std::vector<DesignatedCoproduct>& coproducts,
                                           const Guards& guards) {
  const FinCategory& c = *cp;
  CoproductReport report;

  for (std::size_t k = 0; k < coproducts.size(); ++k) {
    const auto& cop = coproducts[k];
    const std::string tag = "coproduct #" + std::to_string(k) + " at " + c.object_name(cop.apex);
    if (cop.parts.size() != cop.inclusions.size()) {
      report.coproducts_valid = false;
      report.findings.push_back(tag + ": part and inclusion counts differ");
      continue;
    }
    Cocone cocone{discrete_diagram(cp, cop.parts), cop.apex, cop.inclusions};
    auto u = check_universal_cocone(cocone, guards);
    if (!u.universal) {
      report.coproducts_valid = false;
      report.findings.push_back(tag + ": not a coproduct, " + u.reason);
    }

    for (MorId i : cop.inclusions)
      if (!is_monic(c, i)) {
        report.disjoint = false;
        report.findings.push_back(tag + ": inclusion " + c.morphism_name(i) + " is not monic");
      }
    for (std::size_t x = 0; x < cop.inclusions.size(); ++x)
      for (std::size_t y = x + 1; y < cop.inclusions.size(); ++y) {
        auto pb = find_pullback(c, cop.inclusions[x], cop.inclusions[y]);
        if (!pb) {
          report.disjoint = false;
          report.findings.push_back(tag + ": missing pullback of " + c.morphism_name(cop.inclusions[x]) + " and " +
                                    c.morphism_name(cop.inclusions[y]));
        } else if (!is_initial(c, pb->apex)) {
          report.disjoint = false;
          report.findings.push_back(tag + ": intersection of " + c.morphism_name(cop.inclusions[x]) + " and " +
                                    c.morphism_name(cop.inclusions[y]) + " is " + c.object_name(pb->apex) +
                                    ", not initial");
        }
      }

    for (MorId f : c.arrows_into(cop.apex)) {
      std::vector<ObjId> parts;
      std::vector<MorId> legs;
      bool complete = true;
      for (MorId i : cop.inclusions) {
        auto pb = find_pullback(c, f, i);
        if (!pb) {
          complete = false;
          report.stable = false;
          report.findings.push_back(tag + ": missing pullback of " + c.morphism_name(i) + " along " +
                                    c.morphism_name(f));
          break;
        }
        parts.push_back(pb->apex);
        legs.push_back(pb->first);
      }
      if (!complete) continue;
      Cocone pulled{discrete_diagram(cp, parts), c.src(f), legs};
      auto pu = check_universal_cocone(pulled, guards);
      if (!pu.universal) {
        report.stable = false;
        report.findings.push_back(tag + ": pullback along " + c.morphism_name(f) + " is not a coproduct, " +
                                  pu.reason);
      }
    }
  }

  if (auto empty = initial_object(c)) {
    bool ok = true;
    for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x)
      if (!c.hom(x, *empty).empty() && !is_initial(c, x)) {
        ok = false;
        report.findings.push_back("object " + c.object_name(x) + " maps to the initial object but is not initial");
      }
    report.maps_into_initial_are_initial = ok;
  }
  return report;
}

}  // namespace catsieve
