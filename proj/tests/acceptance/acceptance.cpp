#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "catsieve/catalog.hpp"
#include "catsieve/cech.hpp"
#include "catsieve/cylinder.hpp"
#include "catsieve/gensieve.hpp"
#include "catsieve/homology.hpp"
#include "catsieve/smith.hpp"
#include "catsieve/topology.hpp"
#include "instances.hpp"

using namespace catsieve;
using testkit::share;

namespace {

using Clock = std::chrono::steady_clock;

std::vector<SSetPtr> produced;

SSetPtr keep(SSetPtr x) {
  produced.push_back(x);
  return x;
}

bool surjective_oracle(const SetFunction& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (int v : f.map()) hit[v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

bool jointly_surjective_oracle(const GeneratedSieve& s) {
  std::vector<bool> hit(s.apex.size(), false);
  for (const auto& g : s.generators)
    for (int v : g.map()) hit[v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

bool homology_iso(const SimplicialMap& f) {
  auto through = cone_acyclic_through(f);
  return through && *through + 1 >= std::min(f.source->dim(), f.target->dim());
}

struct Check {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

bool criterion_canonical_topology(Check& out) {
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (const auto& [name, c] : standard_catalog()) {
    auto j = canonical_topology(c);
    out.require(verify_topology_axioms(j).holds(), name + ": axioms fail");
    ++checked;
  }
  out.require(checked >= 5, "fewer than five categories");
  out.require(Clock::now() - start < std::chrono::seconds(60), "over 60 s");
  out.note = out.ok ? std::to_string(checked) + " categories" : out.note;
  return out.ok;
}

bool criterion_representables(Check& out) {
  std::size_t sieves = 0;
  for (const auto& [name, c] : standard_catalog()) {
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
      for (const auto& s : enumerate_sieves(c, x)) {
        out.require(colim_sieve_via_representables(s).holds == is_colim_sieve(s, Guards{}).holds,
                    name + ": decisions differ at " + c->object_name(x));
        ++sieves;
      }
    auto j = canonical_topology(c);
    for (ObjId m = 0; m < static_cast<ObjId>(c->object_count()); ++m)
      out.require(is_sheaf(representable_presheaf(c, m), j).holds, name + ": representable is not a sheaf");
  }
  if (out.ok) out.note = std::to_string(sieves) + " sieves";
  return out.ok;
}

bool criterion_epis(Check& out) {
  const auto start = Clock::now();
  std::size_t functions = 0;
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; b <= 4; ++b)
      for_each_function(FinSet::range(a), FinSet::range(b), [&](const SetFunction& f) {
        const bool surj = surjective_oracle(f);
        out.require(is_epi(f) == surj, "epi");
        out.require(is_effective_epi(f) == surj, "effective epi");
        out.require(is_strict_epi(f, 4) == surj, "strict epi");
        GeneratedSieve s{f.cod(), {f}};
        out.require(is_colim_sieve(s).holds == surj, "monogenic colim sieve");
        out.require(is_universal_colim_sieve(s, 3).holds == surj, "monogenic universal colim sieve");
        ++functions;
        return true;
      });

  std::vector<SetFunction> small;
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : all_functions(FinSet::range(a), FinSet::range(b)))
        if (surjective_oracle(f)) small.push_back(f);
  for (const auto& f : small)
    for (const auto& g : small) {
      if (f.cod().size() == g.dom().size()) {
        auto gf = compose(SetFunction(g.dom(), g.cod(), g.map()), SetFunction(f.dom(), g.dom(), f.map()));
        out.require(is_effective_epi(gf), "composite of effective epis");
      }
      auto sum = coproduct_of_effective_epis({f, g}, 6);
      out.require(is_effective_epi(sum), "coproduct of effective epis");
      out.require(is_bijection(kernel_pair_comparison({f, g})), "kernel pair of a coproduct");
    }
  out.require(Clock::now() - start < std::chrono::seconds(120), "over 120 s");
  if (out.ok) out.note = std::to_string(functions) + " functions";
  return out.ok;
}

void for_each_generated(std::size_t apex, const std::function<void(const GeneratedSieve&)>& visit) {
  auto x = FinSet::range(apex);
  for (std::size_t count = 0; count <= 3; ++count) {
    const std::size_t max_dom = count == 3 ? 2 : 3;
    std::vector<SetFunction> pool;
    for (std::size_t d = 0; d <= max_dom; ++d)
      for (const auto& f : all_functions(FinSet::range(d), x)) pool.push_back(f);
    std::vector<std::size_t> pick(count, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
      if (depth == count) {
        GeneratedSieve s{x, {}};
        for (auto i : pick) s.generators.push_back(pool[i]);
        visit(s);
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        pick[depth] = i;
        rec(depth + 1, i);
      }
    };
    rec(0, 0);
  }
}

bool criterion_generated_sieves(Check& out) {
  std::size_t sieves = 0;
  for (std::size_t apex = 0; apex <= 4; ++apex)
    for_each_generated(apex, [&](const GeneratedSieve& s) {
      out.require(coequalizer_matches_diagram_colimit(s), "coequalizer and diagram colimit differ");
      const bool oracle = jointly_surjective_oracle(s);
      auto mono = reduce_to_monogenic(s);
      out.require(mono.generators.size() == 1, "reduction is not monogenic");
      out.require(is_colim_sieve(s).holds == oracle, "colim sieve decision");
      out.require(is_colim_sieve(mono).holds == oracle, "reduction changes colim decision");
      out.require(is_universal_colim_sieve(mono, 2).holds == is_universal_colim_sieve(s, 2).holds,
                  "reduction changes universal decision");
      ++sieves;
    });
  if (out.ok) out.note = std::to_string(sieves) + " sieves";
  return out.ok;
}

bool criterion_gensieve(Check& out) {
  std::size_t instances = 0;
  for (const auto& [name, c] : standard_catalog())
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
      auto ss = enumerate_sieves(c, x);
      for (const auto& r : ss)
        for (const auto& s : ss) {
          auto rep = transitivity_instance(r, s);
          out.require(rep.consistent(), name + ": transitivity argument inconsistent");
          if (!rep.hypotheses_hold()) continue;
          out.require(compare_with_grothendieck(c, x, {r, s}).holds(), name + ": not a Grothendieck construction");
          out.require(compare_with_grothendieck(c, x, {r, s, r}).holds(), name + ": not a Grothendieck construction");
          out.require(rep.per_object.size() == c->object_count(), name + ": missing objects");
          for (const auto& y : rep.per_object) {
            out.require(y.upper_right_commutes && y.lower_left_commutes, name + ": square does not commute");
            out.require(y.phi_r_bijective, name + ": phi_R* is not bijective");
          }
          out.require(verify_cor_4_8(s, r, {}), name + ": forgetful map is not a bijection");
          out.require(verify_cor_4_8(s, r, {r}), name + ": forgetful map is not a bijection");
          ++instances;
        }
    }
  out.require(instances >= 3, "fewer than three instances");
  if (out.ok) out.note = std::to_string(instances) + " instances";
  return out.ok;
}

bool criterion_cylinder(Check& out) {
  std::size_t count = 0;
  for (const auto& inst : testkit::instances(3)) {
    for (const auto& x : inst.f.values) keep(x);
    keep(hocolim(inst.f).space);
    auto r = check_cylinder(inst.f, inst.theta, 1);
    out.require(r.simplicial, inst.name + ": not simplicial");
    out.require(r.h0_is_alpha_sharp, inst.name + ": H0");
    out.require(r.h1_is_beta_sharp_theta, inst.name + ": H1");
    out.require(r.homology_proxy.value_or(false), inst.name + ": homology proxy");
    out.require(r.holds(), inst.name + ": pushout");
    ++count;
  }
  out.require(count >= 3, "fewer than three instances");
  if (out.ok) out.note = std::to_string(count) + " instances";
  return out.ok;
}

bool criterion_cech(Check& out) {
  const auto start = Clock::now();
  {
    auto x = keep(share(boundary_simplex(2, 4)));
    auto cover = cech_cover(x, {generated_subobject(x, {"01", "12"}), generated_subobject(x, {"02"})});
    keep(cover.hocolim.space);
    keep(cover.nerve_diagonal);
    auto h = homology(*cover.hocolim.space);
    out.require(h.groups[0].betti == 1 && h.groups[1].betti == 1 && h.groups[1].torsion.empty(), "circle");
    out.require(homology_iso(cover.to_space) && homology_iso(cover.nerve_to_space), "circle comparison");
  }
  {
    auto x = keep(share(boundary_simplex(3, 4)));
    std::vector<SubSSet> parts;
    for (const char* face : {"123", "023", "013", "012"}) parts.push_back(generated_subobject(x, {face}));
    auto cover = cech_cover(x, parts);
    keep(cover.hocolim.space);
    keep(cover.nerve_diagonal);
    auto h = homology(*cover.hocolim.space);
    out.require(h.groups[0].betti == 1 && h.groups[1].betti == 0 && h.groups[1].torsion.empty() &&
                    h.groups[2].betti == 1,
                "sphere");
    out.require(homology_iso(cover.to_space), "sphere comparison");
    out.require(homology_equal(*cover.nerve_diagonal, *x).equal, "sphere nerve");
  }
  std::size_t complexes = 0;
  for (const auto& x : {share(point_sset(4)), share(two_cell_circle(4)), share(boundary_simplex(2, 4)),
                        share(standard_simplex(2, 4))}) {
    keep(x);
    auto s = simplex_category(x);
    auto h = hocolim(s.diagram);
    keep(h.space);
    out.require(homology_equal(*h.space, *x).equal, "simplex category homology");
    out.require(homology_iso(simplex_category_to_space(s, h, x)), "simplex category comparison");
    ++complexes;
  }
  out.require(complexes >= 3, "fewer than three complexes");
  {
    auto x = keep(share(two_cell_circle(4)));
    auto y = keep(share(coproduct({x, x})));
    SimplicialMap fold{y, x, {}};
    for (std::size_t n = 0; n <= 4; ++n) {
      std::vector<int> level;
      for (int k = 0; k < static_cast<int>(y->size(n)); ++k) level.push_back(k % static_cast<int>(x->size(n)));
      fold.levels.push_back(level);
    }
    auto c = cech_map(fold);
    keep(c.diagonal);
    out.require(homology_equal(*c.diagonal, *x).equal, "split epi");
    out.require(homology_iso(c.augmentation), "split epi augmentation");
  }
  out.require(Clock::now() - start < std::chrono::seconds(120), "over 120 s");
  if (out.ok) out.note = "N=4";
  return out.ok;
}

bool criterion_chain_complexes(Check& out) {
  for (const auto& x : produced) {
    try {
      normalized_chains(*x).check_boundary_squares();
    } catch (const Error&) {
      out.require(false, "nonzero boundary composite");
    }
  }
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    std::vector<std::int64_t> entries(r * c);
    for (auto& e : entries) e = entry(rng);
    IntMatrix m(r, c, entries);
    auto snf = smith_normal_form(m);
    out.require(snf.u * m * snf.v == snf.d, "D != UMV");
    out.require(is_unimodular(snf.u) && is_unimodular(snf.v), "not unimodular");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) out.require(snf.d(i, j) == 0, "off-diagonal entry");
    for (std::size_t i = 0; i + 1 < snf.invariants.size(); ++i)
      out.require(snf.invariants[i + 1] % snf.invariants[i] == 0, "divisibility");
  }
  if (out.ok) out.note = std::to_string(produced.size()) + " complexes, 100 matrices";
  return out.ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(Check&);
  };
  const Criterion criteria[] = {
      {"canonical topology axioms", criterion_canonical_topology},
      {"colim sieves via representables", criterion_representables},
      {"epimorphism taxonomy", criterion_epis},
      {"generated sieves", criterion_generated_sieves},
      {"generalized sieves", criterion_gensieve},
      {"cylinder homotopy", criterion_cylinder},
      {"Čech and simplex category", criterion_cech},
      {"chain complexes and Smith form", criterion_chain_complexes},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s %d %s (%.2fs) %s\n", check.ok ? "PASS" : "FAIL", index++, c.name, secs, check.note.c_str());
    failures += !check.ok;
  }
  return failures == 0 ? 0 : 1;
}
