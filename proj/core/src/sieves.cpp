#include "catsieve/sieves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catsieve {

namespace {

void check_generators(const FinSet& apex, const std::vector<SetFunction>& gens) {
  for (const auto& g : gens)
    if (!(g.cod() == apex)) throw Error(ErrorKind::ApexMismatch, "generator does not land in the apex");
}

std::string describe_element(const FinSet& s, int x) { return "'" + s.label(x) + "'"; }

// Witness for a failing comparison map q : Q -> X.
std::string comparison_witness(const SetFunction& c, const char* source) {
  std::vector<int> pre(c.cod().size(), -1);
  for (int q = 0; q < static_cast<int>(c.dom().size()); ++q) {
    if (pre[c(q)] >= 0)
      return std::string(source) + " classes " + describe_element(c.dom(), pre[c(q)]) + " and " +
             describe_element(c.dom(), q) + " both map to " + describe_element(c.cod(), c(q));
    pre[c(q)] = q;
  }
  for (int x = 0; x < static_cast<int>(c.cod().size()); ++x)
    if (pre[x] < 0) return "element " + describe_element(c.cod(), x) + " is not covered";
  return {};
}

}  // namespace

bool ExplicitSieve::contains(MorId f) const { return std::binary_search(members.begin(), members.end(), f); }

void ExplicitSieve::validate() const {
  const FinCategory& c = *ambient;
  if (!std::is_sorted(members.begin(), members.end()) ||
      std::adjacent_find(members.begin(), members.end()) != members.end())
    throw Error(ErrorKind::Malformed, "sieve members must be sorted and distinct");
  for (MorId f : members) {
    if (c.dst(f) != apex)
      throw Error(ErrorKind::ApexMismatch, c.morphism_name(f) + " does not end at " + c.object_name(apex));
    for (MorId g : c.arrows_into(c.src(f)))
      if (!contains(c.compose(f, g)))
        throw Error(ErrorKind::Malformed, "sieve is not closed: " + c.morphism_name(f) + "," + c.morphism_name(g));
  }
}

bool ExplicitSieve::operator==(const ExplicitSieve& other) const {
  return ambient == other.ambient && apex == other.apex && members == other.members;
}

bool GeneratedSieve::contains(const SetFunction& h) const {
  if (!(h.cod() == apex)) throw Error(ErrorKind::ApexMismatch, "probe map does not land in the apex");
  for (const auto& g : generators) {
    std::vector<bool> covered(apex.size(), false);
    for (int y : g.map()) covered[y] = true;
    bool ok = true;
    for (int y : h.map()) ok = ok && covered[y];
    if (ok) return true;
  }
  return false;
}

ExplicitSieve generate_sieve(const CategoryPtr& c, ObjId x, const std::vector<MorId>& seeds) {
  std::set<MorId> members;
  for (MorId s : seeds) {
    if (s < 0 || s >= static_cast<MorId>(c->morphism_count()))
      throw Error(ErrorKind::UnknownMorphism, "seed index out of range");
    if (c->dst(s) != x)
      throw Error(ErrorKind::ApexMismatch, c->morphism_name(s) + " does not end at " + c->object_name(x));
    for (MorId g : c->arrows_into(c->src(s))) members.insert(c->compose(s, g));
  }
  return ExplicitSieve{c, x, {members.begin(), members.end()}};
}

ExplicitSieve maximal_sieve(const CategoryPtr& c, ObjId x) {
  auto into = c->arrows_into(x);
  return ExplicitSieve{c, x, {into.begin(), into.end()}};
}

ExplicitSieve empty_sieve(const CategoryPtr& c, ObjId x) { return ExplicitSieve{c, x, {}}; }

ExplicitSieve pullback_sieve(const ExplicitSieve& s, MorId f) {
  const FinCategory& c = *s.ambient;
  if (c.dst(f) != s.apex)
    throw Error(ErrorKind::ApexMismatch, c.morphism_name(f) + " does not end at " + c.object_name(s.apex));
  ExplicitSieve out{s.ambient, c.src(f), {}};
  for (MorId g : c.arrows_into(c.src(f)))
    if (s.contains(c.compose(f, g))) out.members.push_back(g);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::optional<ExplicitSieve> pullback_sieve_by_generators(const CategoryPtr& c, const std::vector<MorId>& generators,
                                                          MorId f) {
  std::vector<MorId> seeds;
  for (MorId g : generators) {
    auto pb = find_pullback(*c, g, f);
    if (!pb) return std::nullopt;
    seeds.push_back(pb->second);
  }
  return generate_sieve(c, c->src(f), seeds);
}

GeneratedSieve pullback_sieve(const GeneratedSieve& s, const SetFunction& f) {
  if (!(f.cod() == s.apex)) throw Error(ErrorKind::ApexMismatch, "pullback along a map into another set");
  GeneratedSieve out{f.dom(), {}};
  for (const auto& g : s.generators) out.generators.push_back(pullback(g, f).second);
  return out;
}

SliceCategory sieve_category(const ExplicitSieve& s) { return slice_category(s.ambient, s.apex, s.members); }

Decision is_colim_sieve(const ExplicitSieve& s, const Guards& guards) {
  auto slice = sieve_category(s);
  Cocone canonical{slice.forget, s.apex, slice.object_arrow};
  auto u = check_universal_cocone(canonical, guards);
  Decision d;
  d.holds = u.universal;
  d.method = "universal-property";
  if (!u.universal) d.witness = u.reason;
  return d;
}

SetFunction family_map(const FinSet& apex, const std::vector<SetFunction>& family) {
  check_generators(apex, family);
  std::vector<FinSet> doms;
  for (const auto& g : family) doms.push_back(g.dom());
  auto cop = coproduct(doms);
  std::vector<int> m(cop.object.size());
  for (std::size_t a = 0; a < family.size(); ++a)
    for (int x = 0; x < static_cast<int>(family[a].dom().size()); ++x) m[cop.inclusions[a](x)] = family[a](x);
  return SetFunction(cop.object, apex, std::move(m));
}

namespace {

// ⨿ A_a -> Coeq(⨿ A_a ×_X A_b ⇉ ⨿ A_a)
SetFunction coequalizer_quotient(const GeneratedSieve& s) {
  check_generators(s.apex, s.generators);
  const auto& gens = s.generators;
  std::vector<FinSet> doms, pairs;
  std::vector<Pullback> pbs;
  for (const auto& g : gens) doms.push_back(g.dom());
  for (const auto& ga : gens)
    for (const auto& gb : gens) {
      pbs.push_back(pullback(ga, gb));
      pairs.push_back(pbs.back().object);
    }
  auto total = coproduct(doms);
  auto pair_total = coproduct(pairs);
  std::vector<int> left(pair_total.object.size()), right(pair_total.object.size());
  std::size_t n = gens.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& pb = pbs[a * n + b];
      for (int p = 0; p < static_cast<int>(pb.object.size()); ++p) {
        int at = pair_total.inclusions[a * n + b](p);
        left[at] = total.inclusions[a](pb.first(p));
        right[at] = total.inclusions[b](pb.second(p));
      }
    }
  return coequalizer(SetFunction(pair_total.object, total.object, std::move(left)),
                     SetFunction(pair_total.object, total.object, std::move(right)))
      .map;
}

// ⨿ A_a -> colimit of the diagram A_a <- A_a ×_X A_b -> A_b, together with
// a check that every colimit element comes from some A_a.
SetFunction diagram_quotient(const GeneratedSieve& s, bool* singles_cover) {
  check_generators(s.apex, s.generators);
  const auto& gens = s.generators;
  const std::size_t n = gens.size();
  FinCategory::Builder b;
  std::vector<ObjId> single(n);
  std::vector<std::vector<ObjId>> pair(n, std::vector<ObjId>(n));
  for (std::size_t a = 0; a < n; ++a) single[a] = b.add_object("a" + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) pair[a][c] = b.add_object("p" + std::to_string(a) + "_" + std::to_string(c));
  std::vector<MorId> ident(b.object_count());
  for (std::size_t o = 0; o < b.object_count(); ++o) {
    ident[o] = b.add_morphism("id" + std::to_string(o), static_cast<ObjId>(o), static_cast<ObjId>(o));
    b.set_identity(static_cast<ObjId>(o), ident[o]);
  }
  std::vector<std::vector<MorId>> lproj(n, std::vector<MorId>(n)), rproj(n, std::vector<MorId>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      std::string tag = std::to_string(a) + "_" + std::to_string(c);
      lproj[a][c] = b.add_morphism("l" + tag, pair[a][c], single[a]);
      rproj[a][c] = b.add_morphism("r" + tag, pair[a][c], single[c]);
    }
  const auto nid = static_cast<MorId>(ident.size());
  // The only composable pairs involve an identity.
  auto built = b.build([&](MorId g, MorId f) { return g < nid ? f : g; }, false);

  FinSetDiagram d{built.category, std::vector<FinSet>(b.object_count()), {}};
  std::vector<std::optional<SetFunction>> values(b.morphism_count());
  for (std::size_t a = 0; a < n; ++a) {
    d.objects[built.object[single[a]]] = gens[a].dom();
    values[ident[single[a]]] = identity(gens[a].dom());
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      auto pb = pullback(gens[a], gens[c]);
      d.objects[built.object[pair[a][c]]] = pb.object;
      values[ident[pair[a][c]]] = identity(pb.object);
      values[lproj[a][c]] = pb.first;
      values[rproj[a][c]] = pb.second;
    }
  std::vector<std::optional<SetFunction>> sorted(b.morphism_count());
  for (std::size_t m = 0; m < values.size(); ++m) sorted[built.morphism[m]] = values[m];
  for (auto& v : sorted) d.morphisms.push_back(*v);
  d.validate();

  auto colim = colim_finite_diagram(d);
  std::vector<FinSet> doms;
  for (const auto& g : gens) doms.push_back(g.dom());
  auto total = coproduct(doms);
  std::vector<int> q(total.object.size());
  std::vector<bool> hit(colim.nadir.size(), false);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& leg = colim.legs[built.object[single[a]]];
    for (int x = 0; x < static_cast<int>(gens[a].dom().size()); ++x) {
      q[total.inclusions[a](x)] = leg(x);
      hit[leg(x)] = true;
    }
  }
  if (singles_cover) *singles_cover = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  return SetFunction(total.object, colim.nadir, std::move(q));
}

}  // namespace

SetFunction coequalizer_comparison(const GeneratedSieve& s) {
  return *factor_through(coequalizer_quotient(s), family_map(s.apex, s.generators));
}

SetFunction pairwise_diagram_comparison(const GeneratedSieve& s) {
  bool cover = false;
  auto q = diagram_quotient(s, &cover);
  auto h = factor_through(q, family_map(s.apex, s.generators));
  if (!cover || !h) throw Error(ErrorKind::Mismatch, "diagram colimit has elements outside the generators");
  return *h;
}

bool coequalizer_matches_diagram_colimit(const GeneratedSieve& s) {
  auto q1 = coequalizer_quotient(s);
  bool cover = false;
  auto q2 = diagram_quotient(s, &cover);
  if (!cover || q1.cod().size() != q2.cod().size()) return false;
  // Same partition of ⨿ A_a: the class maps determine each other.
  std::vector<int> across(q1.cod().size(), -1);
  for (int x = 0; x < static_cast<int>(q1.dom().size()); ++x) {
    int& slot = across[q1(x)];
    if (slot >= 0 && slot != q2(x)) return false;
    slot = q2(x);
  }
  return is_bijection(SetFunction(q1.cod(), q2.cod(), across));
}

Decision is_colim_sieve(const GeneratedSieve& s) {
  auto c = coequalizer_comparison(s);
  Decision d;
  d.holds = is_bijection(c);
  d.method = "coequalizer";
  if (!d.holds) d.witness = comparison_witness(c, "coequalizer");
  return d;
}

Decision is_universal_colim_sieve(const ExplicitSieve& s, const Guards& guards) {
  const FinCategory& c = *s.ambient;
  Decision d;
  d.method = "exhaustive-pullbacks";
  for (MorId f : c.arrows_into(s.apex)) {
    auto pulled = pullback_sieve(s, f);
    auto inner = is_colim_sieve(pulled, guards);
    if (!inner.holds) {
      d.witness = "pullback along " + c.morphism_name(f) + " is not a colim sieve: " + inner.witness;
      return d;
    }
  }
  d.holds = true;
  return d;
}

bool is_universal_colim_sieve_by_probe(const GeneratedSieve& s, std::size_t k, std::string* witness) {
  for (std::size_t z = 0; z <= k; ++z) {
    bool ok = true;
    for_each_function(FinSet::range(z), s.apex, [&](const SetFunction& f) {
      auto inner = is_colim_sieve(pullback_sieve(s, f));
      if (!inner.holds) {
        ok = false;
        if (witness) {
          std::string img;
          for (int y : f.map()) img += (img.empty() ? "" : ",") + s.apex.label(y);
          *witness = "pullback along the map with image [" + img + "] fails: " + inner.witness;
        }
      }
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

Decision is_universal_colim_sieve(const GeneratedSieve& s, std::size_t k) {
  auto total = family_map(s.apex, s.generators);
  Decision d;
  d.method = "joint-surjectivity";
  d.probe = k;
  d.holds = is_epi(total);
  if (!d.holds) {
    std::vector<bool> hit(s.apex.size(), false);
    for (int y : total.map()) hit[y] = true;
    for (int x = 0; x < static_cast<int>(hit.size()); ++x)
      if (!hit[x]) {
        d.witness = "element " + describe_element(s.apex, x) + " is not covered";
        break;
      }
  }
  std::string probe_witness;
  d.cross_check = is_universal_colim_sieve_by_probe(s, k, &probe_witness);
  if (!d.holds && d.witness.empty()) d.witness = probe_witness;
  return d;
}

GeneratedSieve reduce_to_monogenic(const GeneratedSieve& s) { return GeneratedSieve{s.apex, {family_map(s.apex, s.generators)}}; }

Decision basis_cover_check(const FinSet& apex, const std::vector<SetFunction>& family, std::size_t k) {
  auto total = family_map(apex, family);
  Decision d;
  d.method = "universal-effective-epi";
  d.probe = k;
  d.holds = is_universal_effective_epi(total, k);
  if (!d.holds) d.witness = comparison_witness(total, "family");
  return d;
}

bool basis_isomorphism_axiom(const SetFunction& f, std::size_t k) {
  return !is_bijection(f) || basis_cover_check(f.cod(), {f}, k).holds;
}

bool basis_stability_axiom(const FinSet& apex, const std::vector<SetFunction>& family, const SetFunction& g,
                           std::size_t k) {
  if (!basis_cover_check(apex, family, k).holds) return true;
  std::vector<SetFunction> pulled;
  for (const auto& f : family) pulled.push_back(pullback(f, g).second);
  return basis_cover_check(g.dom(), pulled, k).holds;
}

bool basis_transitivity_axiom(const FinSet& apex, const std::vector<SetFunction>& family,
                              const std::vector<std::vector<SetFunction>>& refinements, std::size_t k) {
  if (refinements.size() != family.size()) throw Error(ErrorKind::Mismatch, "one refinement per family member");
  if (!basis_cover_check(apex, family, k).holds) return true;
  std::vector<SetFunction> composite;
  for (std::size_t a = 0; a < family.size(); ++a) {
    if (!basis_cover_check(family[a].dom(), refinements[a], k).holds) return true;
    for (const auto& g : refinements[a]) composite.push_back(compose(family[a], g));
  }
  return basis_cover_check(apex, composite, k).holds;
}

}  // namespace catsieve
