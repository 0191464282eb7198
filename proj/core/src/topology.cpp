#include "catsieve/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace catsieve {

namespace {

bool sieve_less(const ExplicitSieve& a, const ExplicitSieve& b) {
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return a.members < b.members;
}

std::vector<std::string> member_names(const ExplicitSieve& s) {
  std::vector<std::string> out;
  for (MorId f : s.members) out.push_back(s.ambient->morphism_name(f));
  return out;
}

}  // namespace

bool TopologyAssignment::contains(const ExplicitSieve& s) const {
  const auto& list = covers.at(s.apex);
  return std::find(list.begin(), list.end(), s) != list.end();
}

std::vector<ExplicitSieve> enumerate_sieves(const CategoryPtr& c, ObjId x, const Guards& guards) {
  const FinCategory& cat = *c;
  auto into = cat.arrows_into(x);
  if (into.size() > guards.arrows_into_object)
    throw Error(ErrorKind::AmbientTooLarge, std::to_string(into.size()) + " arrows end at " + cat.object_name(x) +
                                                ", above the limit of " +
                                                std::to_string(guards.arrows_into_object));
  std::vector<MorId> arrows(into.begin(), into.end());
  std::sort(arrows.begin(), arrows.end());
  std::map<MorId, std::size_t> bit;
  for (std::size_t i = 0; i < arrows.size(); ++i) bit[arrows[i]] = i;

  // down[i]: the mask of arrows f∘g for g into dom f.
  std::vector<std::uint32_t> down(arrows.size(), 0);
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (MorId g : cat.arrows_into(cat.src(arrows[i]))) down[i] |= std::uint32_t{1} << bit.at(cat.compose(arrows[i], g));

  std::vector<ExplicitSieve> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << arrows.size()); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < arrows.size() && closed; ++i)
      if ((mask >> i & 1) && (down[i] & ~mask)) closed = false;
    if (!closed) continue;
    ExplicitSieve s{c, x, {}};
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (mask >> i & 1) s.members.push_back(arrows[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), sieve_less);
  return out;
}

TopologyReport verify_topology_axioms(const TopologyAssignment& j, const Guards& guards) {
  const FinCategory& c = *j.ambient;
  const auto n = static_cast<ObjId>(c.object_count());
  TopologyReport rep;
  for (ObjId x = 0; x < n; ++x) {
    auto top = maximal_sieve(j.ambient, x);
    if (!j.contains(top)) {
      rep.maximality = false;
      rep.witnesses.push_back({"maximality", c.object_name(x), member_names(top), "", "maximal sieve is not a cover"});
    }
  }
  for (ObjId x = 0; x < n; ++x)
    for (const auto& s : j.covers[x])
      for (ObjId y = 0; y < n; ++y)
        for (MorId f : c.hom(y, x)) {
          auto p = pullback_sieve(s, f);
          if (!j.contains(p)) {
            rep.stability = false;
            rep.witnesses.push_back({"stability", c.object_name(x), member_names(s), c.morphism_name(f),
                                     "pullback is not a cover"});
          }
        }
  for (ObjId x = 0; x < n; ++x) {
    auto all = enumerate_sieves(j.ambient, x, guards);
    for (const auto& r : all) {
      if (j.contains(r)) continue;
      for (const auto& s : j.covers[x]) {
        bool locally = std::all_of(s.members.begin(), s.members.end(),
                                   [&](MorId f) { return j.contains(pullback_sieve(r, f)); });
        if (locally) {
          rep.transitivity = false;
          rep.witnesses.push_back({"transitivity", c.object_name(x), member_names(r), "",
                                   "locally covered by a cover but not itself a cover"});
          break;
        }
      }
    }
  }
  return rep;
}

TopologyAssignment canonical_topology(const CategoryPtr& c, const Guards& guards) {
  TopologyAssignment j{c, {}};
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
    std::vector<ExplicitSieve> covers;
    for (auto& s : enumerate_sieves(c, x, guards))
      if (is_universal_colim_sieve(s, guards).holds) covers.push_back(std::move(s));
    j.covers.push_back(std::move(covers));
  }
  return j;
}

TopologyAssignment maximal_topology(const CategoryPtr& c) {
  TopologyAssignment j{c, {}};
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) j.covers.push_back({maximal_sieve(c, x)});
  return j;
}

void Presheaf::validate() const {
  const FinCategory& c = *ambient;
  if (sets.size() != c.object_count() || maps.size() != c.morphism_count())
    throw Error(ErrorKind::NotFunctor, "presheaf sizes do not match the category");
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
    if (!(maps[f].dom() == sets[c.dst(f)]) || !(maps[f].cod() == sets[c.src(f)]))
      throw Error(ErrorKind::NotFunctor, "value at " + c.morphism_name(f) + " has wrong endpoints");
    if (c.is_identity(f) && !(maps[f] == identity(sets[c.src(f)])))
      throw Error(ErrorKind::NotFunctor, "identity " + c.morphism_name(f) + " not preserved");
    for (MorId g : c.arrows_into(c.src(f)))
      if (!(maps[c.compose(f, g)] == compose(maps[g], maps[f])))
        throw Error(ErrorKind::NotFunctor, "composite " + c.morphism_name(f) + "," + c.morphism_name(g));
  }
}

Presheaf representable_presheaf(const CategoryPtr& c, ObjId m) {
  const FinCategory& cat = *c;
  if (m < 0 || m >= static_cast<ObjId>(cat.object_count())) throw Error(ErrorKind::UnknownObject, "no such object");
  Presheaf p{c, {}, {}};
  std::vector<std::vector<MorId>> homs;
  for (ObjId k = 0; k < static_cast<ObjId>(cat.object_count()); ++k) {
    auto h = cat.hom(k, m);
    homs.emplace_back(h.begin(), h.end());
    std::vector<std::string> labels;
    for (MorId f : h) labels.push_back(cat.morphism_name(f));
    p.sets.emplace_back(std::move(labels));
  }
  for (MorId f = 0; f < static_cast<MorId>(cat.morphism_count()); ++f) {
    const auto& from = homs[cat.dst(f)];
    const auto& to = homs[cat.src(f)];
    std::vector<int> map;
    for (MorId h : from) map.push_back(static_cast<int>(std::find(to.begin(), to.end(), cat.compose(h, f)) - to.begin()));
    p.maps.emplace_back(p.sets[cat.dst(f)], p.sets[cat.src(f)], std::move(map));
  }
  return p;
}

Presheaf constant_presheaf(const CategoryPtr& c, const FinSet& value) {
  Presheaf p{c, std::vector<FinSet>(c->object_count(), value), {}};
  for (std::size_t f = 0; f < c->morphism_count(); ++f) p.maps.push_back(identity(value));
  return p;
}

SheafEqualizer sheaf_equalizer(const Presheaf& presheaf, const ExplicitSieve& s, const Guards& guards) {
  const FinCategory& c = *presheaf.ambient;
  const auto& members = s.members;
  const std::size_t n = members.size();
  std::map<MorId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[members[i]] = i;

  Budget budget(guards.cocone_candidates, "matching families");
  std::vector<std::optional<int>> x(n);
  std::vector<std::size_t> trail;
  std::vector<std::vector<int>> families;

  // x_(f∘g) = F(g)(x_f) for every g into dom f.
  auto propagate = [&](std::size_t start, int value) {
    std::vector<std::pair<std::size_t, int>> stack{{start, value}};
    while (!stack.empty()) {
      auto [i, v] = stack.back();
      stack.pop_back();
      if (x[i]) {
        if (*x[i] != v) return false;
        continue;
      }
      x[i] = v;
      trail.push_back(i);
      for (MorId g : c.arrows_into(c.src(members[i]))) {
        if (c.is_identity(g)) continue;
        stack.emplace_back(pos.at(c.compose(members[i], g)), presheaf.maps[g](v));
      }
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    while (i < n && x[i]) ++i;
    if (i == n) {
      std::vector<int> fam;
      for (auto& v : x) fam.push_back(*v);
      families.push_back(std::move(fam));
      return;
    }
    for (int v = 0; v < static_cast<int>(presheaf.sets[c.src(members[i])].size()); ++v) {
      budget.spend();
      std::size_t mark = trail.size();
      if (propagate(i, v)) rec(i + 1);
      while (trail.size() > mark) {
        x[trail.back()].reset();
        trail.pop_back();
      }
    }
  };
  rec(0);
  std::sort(families.begin(), families.end());

  std::vector<std::string> labels;
  for (const auto& fam : families) {
    std::string l = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) l += ",";
      l += presheaf.sets[c.src(members[i])].label(fam[i]);
    }
    labels.push_back(l + ")");
  }
  FinSet eq(std::move(labels));
  const FinSet& fx = presheaf.sets[s.apex];
  std::vector<int> map;
  for (int v = 0; v < static_cast<int>(fx.size()); ++v) {
    std::vector<int> fam;
    for (MorId f : members) fam.push_back(presheaf.maps[f](v));
    map.push_back(static_cast<int>(std::lower_bound(families.begin(), families.end(), fam) - families.begin()));
  }
  return SheafEqualizer{eq, std::move(families), SetFunction(fx, eq, std::move(map))};
}

SheafDecision is_sheaf(const Presheaf& f, const TopologyAssignment& j, const Guards& guards) {
  const FinCategory& c = *j.ambient;
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x)
    for (const auto& s : j.covers[x])
      if (!is_bijection(sheaf_equalizer(f, s, guards).comparison)) {
        std::string names;
        for (const auto& n : member_names(s)) names += (names.empty() ? "" : ",") + n;
        return {false, "cover {" + names + "} of " + c.object_name(x)};
      }
  return {};
}

Decision colim_sieve_via_representables(const ExplicitSieve& s, const Guards& guards) {
  Decision d;
  d.method = "representables";
  d.holds = true;
  const FinCategory& c = *s.ambient;
  for (ObjId m = 0; m < static_cast<ObjId>(c.object_count()); ++m)
    if (!is_bijection(sheaf_equalizer(representable_presheaf(s.ambient, m), s, guards).comparison)) {
      d.holds = false;
      d.witness = c.object_name(m);
      break;
    }
  return d;
}

SubcanonicalReport check_largest_subcanonical(const TopologyAssignment& j, const Guards& guards) {
  SubcanonicalReport rep;
  const FinCategory& c = *j.ambient;
  const auto n = static_cast<ObjId>(c.object_count());
  for (ObjId m = 0; m < n; ++m) {
    auto sheaf = is_sheaf(representable_presheaf(j.ambient, m), j, guards);
    if (!sheaf.holds) {
      rep.representables_are_sheaves = false;
      rep.witnesses.push_back("r" + c.object_name(m) + " fails at " + sheaf.witness);
    }
  }
  for (ObjId x = 0; x < n; ++x)
    for (const auto& s : enumerate_sieves(j.ambient, x, guards)) {
      if (j.contains(s)) continue;
      bool found = false;
      for (ObjId y = 0; y < n && !found; ++y)
        for (MorId f : c.hom(y, x)) {
          auto d = colim_sieve_via_representables(pullback_sieve(s, f), guards);
          if (!d.holds) {
            found = true;
            break;
          }
        }
      if (!found) {
        rep.non_covers_witnessed = false;
        std::string names;
        for (const auto& nm : member_names(s)) names += (names.empty() ? "" : ",") + nm;
        rep.witnesses.push_back("no failing representable for {" + names + "} on " + c.object_name(x));
      }
    }
  return rep;
}

}  // namespace catsieve
