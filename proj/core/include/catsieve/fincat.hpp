#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catsieve/errors.hpp"

namespace catsieve {

using ObjId = int;
using MorId = int;

struct RawMorphism {
  std::string id;
  std::string src;
  std::string dst;
};

// Tables as they appear in a category document. `compose` maps (g, f) to g∘f.
// Entries whose left or right factor is an identity may be omitted; they are
// then filled in by the identity laws.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::map<std::string, std::string> identities;
  std::map<std::pair<std::string, std::string>, std::string> compose;
};

// A finite category held as explicit tables. Objects and morphisms are
// indexed in lexicographic order of their identifiers, so every enumeration
// over a category is deterministic.
class FinCategory {
 public:
  class Builder;

  static FinCategory validate(const RawCategory& raw);

  std::size_t object_count() const { return obj_names_.size(); }
  std::size_t morphism_count() const { return mor_names_.size(); }

  const std::string& object_name(ObjId a) const { return obj_names_[a]; }
  const std::string& morphism_name(MorId f) const { return mor_names_[f]; }

  ObjId object(std::string_view name) const;
  MorId morphism(std::string_view name) const;
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  ObjId src(MorId f) const { return mor_src_[f]; }
  ObjId dst(MorId f) const { return mor_dst_[f]; }
  MorId identity(ObjId a) const { return identity_[a]; }
  bool is_identity(MorId f) const { return identity_[mor_src_[f]] == f; }

  // g∘f; throws Mismatch when dst(f) != src(g).
  MorId compose(MorId g, MorId f) const;

  std::span<const MorId> hom(ObjId a, ObjId b) const;
  std::span<const MorId> arrows_from(ObjId a) const { return from_[a]; }
  std::span<const MorId> arrows_into(ObjId b) const { return into_[b]; }

  // Exhaustive identity-law and associativity check.
  void check_laws() const;

  RawCategory to_raw() const;

 private:
  FinCategory() = default;

  std::vector<std::string> obj_names_;
  std::unordered_map<std::string, ObjId> obj_index_;
  std::vector<std::string> mor_names_;
  std::unordered_map<std::string, MorId> mor_index_;
  std::vector<ObjId> mor_src_;
  std::vector<ObjId> mor_dst_;
  std::vector<MorId> identity_;
  std::vector<std::vector<MorId>> from_;
  std::vector<std::vector<MorId>> into_;
  std::vector<int> pos_in_from_;
  // comp_[f][pos_in_from_[g]] == g∘f
  std::vector<std::vector<MorId>> comp_;
  std::unordered_map<std::uint64_t, std::vector<MorId>> hom_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

// Assembles a category from generated data. Indices handed out by the
// builder are provisional; build() reports where each one landed after
// canonical sorting.
class FinCategory::Builder {
 public:
  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId src, ObjId dst);
  void set_identity(ObjId a, MorId f);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  struct Result {
    CategoryPtr category;
    std::vector<ObjId> object;    // builder index -> category index
    std::vector<MorId> morphism;  // builder index -> category index
  };

  // `compose(g, f)` is called on builder indices for every composable pair
  // and must return the builder index of g∘f.
  Result build(const std::function<MorId(MorId, MorId)>& compose, bool check_laws) const;

 private:
  struct PendingMorphism {
    std::string name;
    ObjId src;
    ObjId dst;
  };
  std::vector<std::string> objects_;
  std::vector<PendingMorphism> morphisms_;
  std::vector<MorId> identities_;
};

class FinFunctor {
 public:
  FinFunctor(CategoryPtr source, CategoryPtr target, std::vector<ObjId> objects,
             std::vector<MorId> morphisms);

  const CategoryPtr& source() const { return source_; }
  const CategoryPtr& target() const { return target_; }
  ObjId operator()(ObjId a) const { return objects_[a]; }
  MorId on_morphism(MorId f) const { return morphisms_[f]; }
  const std::vector<ObjId>& object_map() const { return objects_; }
  const std::vector<MorId>& morphism_map() const { return morphisms_; }

  bool operator==(const FinFunctor& other) const;

 private:
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<ObjId> objects_;
  std::vector<MorId> morphisms_;
};

FinFunctor identity_functor(const CategoryPtr& c);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

class NatTrans {
 public:
  // components[a] : F(a) -> G(a); throws NotNatural.
  NatTrans(FinFunctor from, FinFunctor to, std::vector<MorId> components);

  const FinFunctor& from() const { return from_; }
  const FinFunctor& to() const { return to_; }
  MorId operator[](ObjId a) const { return components_[a]; }
  const std::vector<MorId>& components() const { return components_; }

 private:
  FinFunctor from_;
  FinFunctor to_;
  std::vector<MorId> components_;
};

struct Cocone {
  FinFunctor diagram;
  ObjId nadir;
  std::vector<MorId> legs;  // indexed by diagram-source objects

  bool commutes() const;
};

std::vector<MorId> hom_set(const FinCategory& c, std::string_view a, std::string_view b);

CategoryPtr point_category();
CategoryPtr discrete_category(std::size_t n);
CategoryPtr opposite(const FinCategory& c);
// Same object and morphism indices, reversed in the opposite categories.
FinFunctor opposite(const FinFunctor& f, const CategoryPtr& source_op, const CategoryPtr& target_op);

struct ProductCategory {
  CategoryPtr category;
  std::vector<std::vector<ObjId>> object;  // [a][b]
  std::vector<std::vector<MorId>> morphism;  // [f][g]
  FinFunctor first;
  FinFunctor second;
};
ProductCategory product(const CategoryPtr& c, const CategoryPtr& d);

FinFunctor constant_functor(const CategoryPtr& source, const CategoryPtr& target, ObjId value);

// Full subcategory of (C↓X) on a set of arrows into X, with the forgetful
// functor U back to C. `object_arrow[o]` is the C-arrow an object stands for.
struct SliceCategory {
  CategoryPtr category;
  FinFunctor forget;
  std::vector<MorId> object_arrow;
  std::vector<MorId> morphism_arrow;  // the C-arrow g of a triangle
  std::vector<ObjId> object_index;    // C-arrow -> object, or -1

  ObjId object_of(MorId arrow) const;
};

SliceCategory slice_category(const CategoryPtr& c, ObjId x, std::span<const MorId> arrows);
SliceCategory overcategory(const CategoryPtr& c, ObjId x);

// Comma category (f↓F) for an object f of F's target.
struct CommaCategory {
  CategoryPtr category;
  FinFunctor project;                       // (i,h) |-> i
  std::vector<std::pair<ObjId, MorId>> object_data;  // (i, h : f -> F i)
};
CommaCategory undercategory(const FinFunctor& functor, ObjId f);

bool is_connected(const FinCategory& c);
bool is_final_functor(const FinFunctor& functor);

std::optional<ObjId> terminal_object(const FinCategory& c);
std::optional<ObjId> initial_object(const FinCategory& c);
bool is_initial(const FinCategory& c, ObjId a);
bool is_terminal(const FinCategory& c, ObjId a);
bool is_monic(const FinCategory& c, MorId f);
bool is_isomorphism(const FinCategory& c, MorId f);

}  // namespace catsieve
