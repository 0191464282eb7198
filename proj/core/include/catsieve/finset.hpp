#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catsieve/errors.hpp"
#include "catsieve/fincat.hpp"

namespace catsieve {

// A finite set of distinct labels. Copies share storage.
class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<std::string> labels);

  // {"0", "1", ..., "n-1"}
  static FinSet range(std::size_t n);

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return size() == 0; }
  const std::string& label(int i) const { return data_->labels[i]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::optional<int> find(const std::string& label) const;
  int index(const std::string& label) const;

  bool operator==(const FinSet& other) const;

 private:
  struct Data {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
  };
  std::shared_ptr<const Data> data_;
};

class SetFunction {
 public:
  SetFunction(FinSet dom, FinSet cod, std::vector<int> map);
  static SetFunction from_labels(FinSet dom, FinSet cod, const std::map<std::string, std::string>& map);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  int operator()(int x) const { return map_[x]; }
  const std::vector<int>& map() const { return map_; }

  bool operator==(const SetFunction& other) const;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<int> map_;
};

SetFunction identity(const FinSet& s);
// g∘f; throws CodomainMismatch.
SetFunction compose(const SetFunction& g, const SetFunction& f);

// Calls `visit` for every function dom -> cod in lexicographic order of the
// image vector. Returning false stops.
void for_each_function(const FinSet& dom, const FinSet& cod, const std::function<bool(const SetFunction&)>& visit);
std::vector<SetFunction> all_functions(const FinSet& dom, const FinSet& cod);

struct Coproduct {
  FinSet object;
  std::vector<SetFunction> inclusions;
};
Coproduct coproduct(const std::vector<FinSet>& parts);

struct Pullback {
  FinSet object;
  SetFunction first;
  SetFunction second;
};
Pullback pullback(const SetFunction& f, const SetFunction& g);

struct Quotient {
  FinSet object;
  SetFunction map;
};
// Quotient of `s` by the equivalence generated by `pairs`; each class is
// named by its least label.
Quotient quotient(const FinSet& s, const std::vector<std::pair<int, int>>& pairs);
Quotient coequalizer(const SetFunction& f, const SetFunction& g);

// The unique h with h∘q = f, when f is constant on the fibres of q.
std::optional<SetFunction> factor_through(const SetFunction& q, const SetFunction& f);

struct FinSetDiagram {
  CategoryPtr shape;
  std::vector<FinSet> objects;
  std::vector<SetFunction> morphisms;

  // Throws NotFunctor.
  void validate() const;
};

struct SetCocone {
  FinSet nadir;
  std::vector<SetFunction> legs;
};

SetCocone colim_finite_diagram(const FinSetDiagram& d);
bool is_set_cocone(const FinSetDiagram& d, const SetCocone& c);
// Exact: the comparison map from the computed colimit is a bijection.
bool is_colimit_cocone(const FinSetDiagram& d, const SetCocone& c);

bool is_epi(const SetFunction& f);
bool is_mono(const SetFunction& f);
bool is_bijection(const SetFunction& f);

bool is_effective_epi(const SetFunction& f);
// Throws Malformed when k is smaller than the domain.
bool is_strict_epi(const SetFunction& f, std::size_t k);
bool is_universal_effective_epi(const SetFunction& f, std::size_t k);

SetFunction coproduct_map(const std::vector<SetFunction>& fs);
// The coproduct map, with the effective-epi and universal closure
// postconditions asserted under probe bound k (Mismatch if violated).
SetFunction coproduct_of_effective_epis(const std::vector<SetFunction>& fs, std::size_t k);

// Canonical map ⨿(B_a ×_E D) -> (⨿B_a) ×_E D.
SetFunction coproduct_pullback_comparison(const std::vector<SetFunction>& bs, const SetFunction& d);
// Canonical map ⨿(A_a ×_{B_a} A_a) -> (⨿A) ×_{⨿B} (⨿A).
SetFunction kernel_pair_comparison(const std::vector<SetFunction>& fs);

}  // namespace catsieve
