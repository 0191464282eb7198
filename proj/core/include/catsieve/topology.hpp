#pragma once

#include <string>
#include <vector>

#include "catsieve/errors.hpp"
#include "catsieve/fincat.hpp"
#include "catsieve/finset.hpp"
#include "catsieve/sieves.hpp"

namespace catsieve {

// J(X) for every object X.
struct TopologyAssignment {
  CategoryPtr ambient;
  std::vector<std::vector<ExplicitSieve>> covers;

  bool contains(const ExplicitSieve& s) const;
};

// All sieves on x, ordered by size and then by members. Throws
// AmbientTooLarge when more than guards.arrows_into_object arrows end at x.
std::vector<ExplicitSieve> enumerate_sieves(const CategoryPtr& c, ObjId x, const Guards& guards = {});

struct AxiomWitness {
  std::string axiom;
  std::string object;
  std::vector<std::string> sieve;
  std::string arrow;
  std::string detail;
};

struct TopologyReport {
  bool maximality = true;
  bool stability = true;
  bool transitivity = true;
  std::vector<AxiomWitness> witnesses;

  bool holds() const { return maximality && stability && transitivity; }
};

// Transitivity is checked against every sieve R on every object.
TopologyReport verify_topology_axioms(const TopologyAssignment& j, const Guards& guards = {});

TopologyAssignment canonical_topology(const CategoryPtr& c, const Guards& guards = {});
TopologyAssignment maximal_topology(const CategoryPtr& c);

// A contravariant functor into finite sets: maps[f] : F(dst f) -> F(src f).
struct Presheaf {
  CategoryPtr ambient;
  std::vector<FinSet> sets;
  std::vector<SetFunction> maps;

  // Throws NotFunctor.
  void validate() const;
};

// rM(K) = C(K, M), acting by precomposition; elements are labelled by
// morphism names.
Presheaf representable_presheaf(const CategoryPtr& c, ObjId m);
Presheaf constant_presheaf(const CategoryPtr& c, const FinSet& value);

// Eq(∏_{f∈S} F(dom f) ⇉ ∏_{f,g} F(dom g)) with its comparison map from F(X).
struct SheafEqualizer {
  FinSet equalizer;
  // families[e][i] is the component at s.members[i].
  std::vector<std::vector<int>> families;
  SetFunction comparison;
};

SheafEqualizer sheaf_equalizer(const Presheaf& f, const ExplicitSieve& s, const Guards& guards = {});

struct SheafDecision {
  bool holds = true;
  std::string witness;
};

SheafDecision is_sheaf(const Presheaf& f, const TopologyAssignment& j, const Guards& guards = {});

// S is a colim sieve iff every representable sees X as the limit over S.
Decision colim_sieve_via_representables(const ExplicitSieve& s, const Guards& guards = {});

// Maximality of the canonical topology checked pointwise: every representable
// is a sheaf, and every sieve outside J has a pullback and a representable
// witnessing the failure.
struct SubcanonicalReport {
  bool representables_are_sheaves = true;
  bool non_covers_witnessed = true;
  std::vector<std::string> witnesses;

  bool holds() const { return representables_are_sheaves && non_covers_witnessed; }
};

SubcanonicalReport check_largest_subcanonical(const TopologyAssignment& j, const Guards& guards = {});

}  // namespace catsieve
