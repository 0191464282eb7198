#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catsieve/cocones.hpp"
#include "catsieve/fincat.hpp"
#include "catsieve/finset.hpp"

namespace catsieve {

// A precomposition-closed set of arrows into `apex`, stored sorted.
struct ExplicitSieve {
  CategoryPtr ambient;
  ObjId apex = -1;
  std::vector<MorId> members;

  bool contains(MorId f) const;
  // Throws ApexMismatch or Malformed when the invariants fail.
  void validate() const;
  bool operator==(const ExplicitSieve& other) const;
};

// A sieve on a finite set presented by generators; membership of h means h
// factors through some generator.
struct GeneratedSieve {
  FinSet apex;
  std::vector<SetFunction> generators;

  bool contains(const SetFunction& h) const;
};

// The outcome of a decision procedure together with how it was reached.
struct Decision {
  bool holds = false;
  std::string method;
  std::optional<std::size_t> probe;
  // Result of a secondary path, when one was run.
  std::optional<bool> cross_check;
  std::string witness;
};

ExplicitSieve generate_sieve(const CategoryPtr& c, ObjId x, const std::vector<MorId>& seeds);
ExplicitSieve maximal_sieve(const CategoryPtr& c, ObjId x);
ExplicitSieve empty_sieve(const CategoryPtr& c, ObjId x);

// f*S for f : Y -> apex(S). Throws ApexMismatch.
ExplicitSieve pullback_sieve(const ExplicitSieve& s, MorId f);
// The generator form: the sieve generated by pullbacks of `generators`
// along f, or nullopt when some pullback does not exist in the ambient.
std::optional<ExplicitSieve> pullback_sieve_by_generators(const CategoryPtr& c, const std::vector<MorId>& generators,
                                                          MorId f);
GeneratedSieve pullback_sieve(const GeneratedSieve& s, const SetFunction& f);

// The full subcategory of the overcategory on the members, with U.
SliceCategory sieve_category(const ExplicitSieve& s);

Decision is_colim_sieve(const ExplicitSieve& s, const Guards& guards);
Decision is_colim_sieve(const GeneratedSieve& s);

// Colimit of the pairwise-pullback diagram over the shape with objects a and
// (a,b); its comparison map to the apex.
SetFunction pairwise_diagram_comparison(const GeneratedSieve& s);
// The coequalizer of ⨿ A_a ×_X A_b ⇉ ⨿ A_a with its comparison map to the apex.
SetFunction coequalizer_comparison(const GeneratedSieve& s);
// True when both constructions give the same quotient of ⨿ A_a.
bool coequalizer_matches_diagram_colimit(const GeneratedSieve& s);

Decision is_universal_colim_sieve(const ExplicitSieve& s, const Guards& guards);
// Decided by joint surjectivity; the bounded probe over sets of size <= k
// is reported as the cross-check.
Decision is_universal_colim_sieve(const GeneratedSieve& s, std::size_t k);
bool is_universal_colim_sieve_by_probe(const GeneratedSieve& s, std::size_t k, std::string* witness = nullptr);

GeneratedSieve reduce_to_monogenic(const GeneratedSieve& s);
// The induced map ⨿ A_a -> X.
SetFunction family_map(const FinSet& apex, const std::vector<SetFunction>& family);

Decision basis_cover_check(const FinSet& apex, const std::vector<SetFunction>& family, std::size_t k);
// Isomorphisms are covers.
bool basis_isomorphism_axiom(const SetFunction& f, std::size_t k);
// Covers pull back to covers along g.
bool basis_stability_axiom(const FinSet& apex, const std::vector<SetFunction>& family, const SetFunction& g,
                           std::size_t k);
// Covers of covers compose to covers; refinements[a] is a family on dom family[a].
bool basis_transitivity_axiom(const FinSet& apex, const std::vector<SetFunction>& family,
                              const std::vector<std::vector<SetFunction>>& refinements, std::size_t k);

}  // namespace catsieve
