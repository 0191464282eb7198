#include "catsieve/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace catsieve {

namespace {

std::uint64_t hom_key(ObjId a, ObjId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::vector<int> sorted_order(const std::vector<std::string>& names, const char* what) {
  std::vector<int> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return names[a] < names[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (names[order[i]] == names[order[i - 1]])
      throw Error(ErrorKind::Malformed, std::string("duplicate ") + what + " id '" + names[order[i]] + "'");
  return order;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ObjId FinCategory::object(std::string_view name) const {
  auto it = obj_index_.find(std::string(name));
  if (it == obj_index_.end()) throw Error(ErrorKind::UnknownObject, "'" + std::string(name) + "'");
  return it->second;
}

MorId FinCategory::morphism(std::string_view name) const {
  auto it = mor_index_.find(std::string(name));
  if (it == mor_index_.end()) throw Error(ErrorKind::UnknownMorphism, "'" + std::string(name) + "'");
  return it->second;
}

std::optional<ObjId> FinCategory::find_object(std::string_view name) const {
  auto it = obj_index_.find(std::string(name));
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCategory::find_morphism(std::string_view name) const {
  auto it = mor_index_.find(std::string(name));
  if (it == mor_index_.end()) return std::nullopt;
  return it->second;
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (mor_dst_[f] != mor_src_[g])
    throw Error(ErrorKind::Mismatch, "cannot compose " + mor_names_[g] + " after " + mor_names_[f]);
  return comp_[f][pos_in_from_[g]];
}

std::span<const MorId> FinCategory::hom(ObjId a, ObjId b) const {
  auto it = hom_.find(hom_key(a, b));
  if (it == hom_.end()) return {};
  return it->second;
}

void FinCategory::check_laws() const {
  for (MorId f = 0; f < static_cast<MorId>(morphism_count()); ++f) {
    MorId left = compose(identity_[mor_dst_[f]], f);
    if (left != f)
      throw Error(ErrorKind::IdentityLawViolation,
                  mor_names_[identity_[mor_dst_[f]]] + "," + mor_names_[f] + " gives " + mor_names_[left]);
    MorId right = compose(f, identity_[mor_src_[f]]);
    if (right != f)
      throw Error(ErrorKind::IdentityLawViolation,
                  mor_names_[f] + "," + mor_names_[identity_[mor_src_[f]]] + " gives " + mor_names_[right]);
  }
  for (MorId f = 0; f < static_cast<MorId>(morphism_count()); ++f) {
    for (MorId g : from_[mor_dst_[f]]) {
      MorId gf = compose(g, f);
      for (MorId h : from_[mor_dst_[g]]) {
        if (compose(h, gf) != compose(compose(h, g), f))
          throw Error(ErrorKind::NonAssociative, mor_names_[h] + "," + mor_names_[g] + "," + mor_names_[f]);
      }
    }
  }
}

RawCategory FinCategory::to_raw() const {
  RawCategory raw;
  raw.objects = obj_names_;
  for (MorId f = 0; f < static_cast<MorId>(morphism_count()); ++f)
    raw.morphisms.push_back({mor_names_[f], obj_names_[mor_src_[f]], obj_names_[mor_dst_[f]]});
  for (ObjId a = 0; a < static_cast<ObjId>(object_count()); ++a)
    raw.identities[obj_names_[a]] = mor_names_[identity_[a]];
  for (MorId f = 0; f < static_cast<MorId>(morphism_count()); ++f)
    for (MorId g : from_[mor_dst_[f]]) raw.compose[{mor_names_[g], mor_names_[f]}] = mor_names_[compose(g, f)];
  return raw;
}

FinCategory FinCategory::validate(const RawCategory& raw) {
  Builder b;
  std::unordered_map<std::string, ObjId> objs;
  for (const auto& o : raw.objects) {
    if (objs.count(o)) throw Error(ErrorKind::Malformed, "duplicate object id '" + o + "'");
    objs[o] = b.add_object(o);
  }
  auto obj = [&](const std::string& name) {
    auto it = objs.find(name);
    if (it == objs.end()) throw Error(ErrorKind::UnknownObject, "'" + name + "'");
    return it->second;
  };
  std::unordered_map<std::string, MorId> mors;
  for (const auto& m : raw.morphisms) {
    if (mors.count(m.id)) throw Error(ErrorKind::Malformed, "duplicate morphism id '" + m.id + "'");
    mors[m.id] = b.add_morphism(m.id, obj(m.src), obj(m.dst));
  }
  auto mor = [&](const std::string& name) {
    auto it = mors.find(name);
    if (it == mors.end()) throw Error(ErrorKind::UnknownMorphism, "'" + name + "'");
    return it->second;
  };
  std::vector<MorId> ident(raw.objects.size(), -1);
  for (const auto& [o, m] : raw.identities) {
    ObjId a = obj(o);
    MorId f = mor(m);
    const auto& rm = raw.morphisms[f];
    if (rm.src != o || rm.dst != o)
      throw Error(ErrorKind::Malformed, "identity '" + m + "' is not an endomorphism of '" + o + "'");
    ident[a] = f;
    b.set_identity(a, f);
  }
  for (std::size_t a = 0; a < ident.size(); ++a)
    if (ident[a] < 0) throw Error(ErrorKind::Malformed, "object '" + raw.objects[a] + "' has no identity");
  std::vector<bool> is_id(raw.morphisms.size(), false);
  for (MorId f : ident) is_id[f] = true;

  std::map<std::pair<MorId, MorId>, MorId> table;
  for (const auto& [key, value] : raw.compose) {
    MorId g = mor(key.first);
    MorId f = mor(key.second);
    MorId h = mor(value);
    const auto& rg = raw.morphisms[g];
    const auto& rf = raw.morphisms[f];
    const auto& rh = raw.morphisms[h];
    if (rf.dst != rg.src)
      throw Error(ErrorKind::Malformed, "composite entry " + key.first + "," + key.second + " is not composable");
    if (rh.src != rf.src || rh.dst != rg.dst)
      throw Error(ErrorKind::Malformed, "composite " + key.first + "," + key.second + " = " + value +
                                            " has wrong source or target");
    table[{g, f}] = h;
  }
  auto result = b.build(
      [&](MorId g, MorId f) {
        auto it = table.find({g, f});
        if (it != table.end()) return it->second;
        if (is_id[f]) return g;
        if (is_id[g]) return f;
        throw Error(ErrorKind::MissingComposite, raw.morphisms[g].id + "," + raw.morphisms[f].id);
      },
      true);
  return *result.category;
}

ObjId FinCategory::Builder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.push_back(-1);
  return static_cast<ObjId>(objects_.size() - 1);
}

MorId FinCategory::Builder::add_morphism(std::string name, ObjId src, ObjId dst) {
  morphisms_.push_back({std::move(name), src, dst});
  return static_cast<MorId>(morphisms_.size() - 1);
}

void FinCategory::Builder::set_identity(ObjId a, MorId f) { identities_[a] = f; }

FinCategory::Builder::Result FinCategory::Builder::build(const std::function<MorId(MorId, MorId)>& compose,
                                                         bool check_laws) const {
  auto cat = std::shared_ptr<FinCategory>(new FinCategory());
  FinCategory& c = *cat;
  Result result;

  auto obj_order = sorted_order(objects_, "object");
  result.object.assign(objects_.size(), -1);
  for (std::size_t i = 0; i < obj_order.size(); ++i) {
    result.object[obj_order[i]] = static_cast<ObjId>(i);
    c.obj_names_.push_back(objects_[obj_order[i]]);
    c.obj_index_[objects_[obj_order[i]]] = static_cast<ObjId>(i);
  }

  std::vector<std::string> mnames;
  mnames.reserve(morphisms_.size());
  for (const auto& m : morphisms_) mnames.push_back(m.name);
  auto mor_order = sorted_order(mnames, "morphism");
  mnames.clear();
  mnames.shrink_to_fit();
  result.morphism.assign(morphisms_.size(), -1);
  std::size_t n = morphisms_.size();
  c.mor_names_.reserve(n);
  c.mor_src_.reserve(n);
  c.mor_dst_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = morphisms_[mor_order[i]];
    result.morphism[mor_order[i]] = static_cast<MorId>(i);
    c.mor_names_.push_back(m.name);
    c.mor_index_[m.name] = static_cast<MorId>(i);
    c.mor_src_.push_back(result.object[m.src]);
    c.mor_dst_.push_back(result.object[m.dst]);
  }

  c.identity_.assign(objects_.size(), -1);
  for (std::size_t a = 0; a < objects_.size(); ++a) {
    if (identities_[a] < 0) throw Error(ErrorKind::Malformed, "object '" + objects_[a] + "' has no identity");
    MorId id = result.morphism[identities_[a]];
    ObjId ca = result.object[a];
    if (c.mor_src_[id] != ca || c.mor_dst_[id] != ca)
      throw Error(ErrorKind::Malformed, "identity '" + c.mor_names_[id] + "' is not an endomorphism");
    c.identity_[ca] = id;
  }

  c.from_.assign(objects_.size(), {});
  c.into_.assign(objects_.size(), {});
  c.pos_in_from_.assign(n, -1);
  for (MorId f = 0; f < static_cast<MorId>(n); ++f) {
    c.pos_in_from_[f] = static_cast<int>(c.from_[c.mor_src_[f]].size());
    c.from_[c.mor_src_[f]].push_back(f);
    c.into_[c.mor_dst_[f]].push_back(f);
    c.hom_[hom_key(c.mor_src_[f], c.mor_dst_[f])].push_back(f);
  }

  c.comp_.assign(n, {});
  for (std::size_t bf = 0; bf < n; ++bf) {
    MorId f = result.morphism[bf];
    const auto& out = c.from_[c.mor_dst_[f]];
    c.comp_[f].assign(out.size(), -1);
    for (std::size_t k = 0; k < out.size(); ++k) {
      MorId g = out[k];
      MorId bg = mor_order[g];
      MorId bh = compose(bg, static_cast<MorId>(bf));
      if (bh < 0 || static_cast<std::size_t>(bh) >= n)
        throw Error(ErrorKind::MissingComposite, c.mor_names_[g] + "," + c.mor_names_[f]);
      MorId h = result.morphism[bh];
      if (c.mor_src_[h] != c.mor_src_[f] || c.mor_dst_[h] != c.mor_dst_[g])
        throw Error(ErrorKind::Malformed, "composite " + c.mor_names_[g] + "," + c.mor_names_[f] + " = " +
                                              c.mor_names_[h] + " has wrong source or target");
      c.comp_[f][k] = h;
    }
  }
  if (check_laws) c.check_laws();
  result.category = cat;
  return result;
}

FinFunctor::FinFunctor(CategoryPtr source, CategoryPtr target, std::vector<ObjId> objects,
                       std::vector<MorId> morphisms)
    : source_(std::move(source)), target_(std::move(target)), objects_(std::move(objects)),
      morphisms_(std::move(morphisms)) {
  const FinCategory& s = *source_;
  const FinCategory& t = *target_;
  if (objects_.size() != s.object_count() || morphisms_.size() != s.morphism_count())
    throw Error(ErrorKind::NotFunctor, "assignment sizes do not match the source category");
  for (ObjId o : objects_)
    if (o < 0 || o >= static_cast<ObjId>(t.object_count()))
      throw Error(ErrorKind::NotFunctor, "object image out of range");
  for (MorId f = 0; f < static_cast<MorId>(s.morphism_count()); ++f) {
    MorId m = morphisms_[f];
    if (m < 0 || m >= static_cast<MorId>(t.morphism_count()))
      throw Error(ErrorKind::NotFunctor, "image of " + s.morphism_name(f) + " out of range");
    if (t.src(m) != objects_[s.src(f)] || t.dst(m) != objects_[s.dst(f)])
      throw Error(ErrorKind::NotFunctor, "image of " + s.morphism_name(f) + " has wrong endpoints");
  }
  for (ObjId a = 0; a < static_cast<ObjId>(s.object_count()); ++a)
    if (morphisms_[s.identity(a)] != t.identity(objects_[a]))
      throw Error(ErrorKind::NotFunctor, "identity of " + s.object_name(a) + " not preserved");
  for (MorId f = 0; f < static_cast<MorId>(s.morphism_count()); ++f)
    for (MorId g : s.arrows_from(s.dst(f)))
      if (morphisms_[s.compose(g, f)] != t.compose(morphisms_[g], morphisms_[f]))
        throw Error(ErrorKind::NotFunctor,
                    "composite " + s.morphism_name(g) + "," + s.morphism_name(f) + " not preserved");
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  return source_ == other.source_ && target_ == other.target_ && objects_ == other.objects_ &&
         morphisms_ == other.morphisms_;
}

FinFunctor identity_functor(const CategoryPtr& c) {
  std::vector<ObjId> objs(c->object_count());
  std::iota(objs.begin(), objs.end(), 0);
  std::vector<MorId> mors(c->morphism_count());
  std::iota(mors.begin(), mors.end(), 0);
  return FinFunctor(c, c, std::move(objs), std::move(mors));
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (f.target() != g.source()) throw Error(ErrorKind::Mismatch, "functors are not composable");
  std::vector<ObjId> objs;
  for (ObjId o : f.object_map()) objs.push_back(g(o));
  std::vector<MorId> mors;
  for (MorId m : f.morphism_map()) mors.push_back(g.on_morphism(m));
  return FinFunctor(f.source(), g.target(), std::move(objs), std::move(mors));
}

NatTrans::NatTrans(FinFunctor from, FinFunctor to, std::vector<MorId> components)
    : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
  if (from_.source() != to_.source() || from_.target() != to_.target())
    throw Error(ErrorKind::NotParallel, "natural transformation between non-parallel functors");
  const FinCategory& s = *from_.source();
  const FinCategory& t = *from_.target();
  if (components_.size() != s.object_count())
    throw Error(ErrorKind::NotNatural, "component count does not match the source category");
  for (ObjId a = 0; a < static_cast<ObjId>(s.object_count()); ++a) {
    MorId c = components_[a];
    if (c < 0 || c >= static_cast<MorId>(t.morphism_count()) || t.src(c) != from_(a) || t.dst(c) != to_(a))
      throw Error(ErrorKind::NotNatural, "component at " + s.object_name(a) + " has wrong endpoints");
  }
  for (MorId f = 0; f < static_cast<MorId>(s.morphism_count()); ++f) {
    MorId lhs = t.compose(to_.on_morphism(f), components_[s.src(f)]);
    MorId rhs = t.compose(components_[s.dst(f)], from_.on_morphism(f));
    if (lhs != rhs) throw Error(ErrorKind::NotNatural, "naturality square fails at " + s.morphism_name(f));
  }
}

bool Cocone::commutes() const {
  const FinCategory& s = *diagram.source();
  const FinCategory& t = *diagram.target();
  if (legs.size() != s.object_count()) return false;
  for (ObjId a = 0; a < static_cast<ObjId>(s.object_count()); ++a)
    if (t.src(legs[a]) != diagram(a) || t.dst(legs[a]) != nadir) return false;
  for (MorId f = 0; f < static_cast<MorId>(s.morphism_count()); ++f)
    if (t.compose(legs[s.dst(f)], diagram.on_morphism(f)) != legs[s.src(f)]) return false;
  return true;
}

std::vector<MorId> hom_set(const FinCategory& c, std::string_view a, std::string_view b) {
  auto h = c.hom(c.object(a), c.object(b));
  return {h.begin(), h.end()};
}

CategoryPtr point_category() {
  static const CategoryPtr point = [] {
    FinCategory::Builder b;
    ObjId o = b.add_object("*");
    b.set_identity(o, b.add_morphism("id_*", o, o));
    return b.build([](MorId, MorId) { return 0; }, true).category;
  }();
  return point;
}

CategoryPtr discrete_category(std::size_t n) {
  FinCategory::Builder b;
  std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = std::to_string(i);
    name.insert(0, width - name.size(), '0');
    ObjId o = b.add_object(name);
    b.set_identity(o, b.add_morphism("id_" + name, o, o));
  }
  return b.build([](MorId g, MorId) { return g; }, false).category;
}

CategoryPtr opposite(const FinCategory& c) {
  FinCategory::Builder b;
  for (ObjId a = 0; a < static_cast<ObjId>(c.object_count()); ++a) b.add_object(c.object_name(a));
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
    b.add_morphism(c.morphism_name(f), c.dst(f), c.src(f));
  for (ObjId a = 0; a < static_cast<ObjId>(c.object_count()); ++a) b.set_identity(a, c.identity(a));
  return b.build([&](MorId g, MorId f) { return c.compose(f, g); }, false).category;
}

FinFunctor opposite(const FinFunctor& f, const CategoryPtr& source_op, const CategoryPtr& target_op) {
  return FinFunctor(source_op, target_op, f.object_map(), f.morphism_map());
}

ProductCategory product(const CategoryPtr& c, const CategoryPtr& d) {
  FinCategory::Builder b;
  std::size_t nc = c->object_count(), nd = d->object_count();
  std::size_t mc = c->morphism_count(), md = d->morphism_count();
  std::vector<std::vector<ObjId>> bo(nc, std::vector<ObjId>(nd));
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t x = 0; x < nd; ++x)
      bo[a][x] = b.add_object("(" + c->object_name(a) + "," + d->object_name(x) + ")");
  std::vector<std::vector<MorId>> bm(mc, std::vector<MorId>(md));
  for (std::size_t f = 0; f < mc; ++f)
    for (std::size_t g = 0; g < md; ++g)
      bm[f][g] = b.add_morphism("(" + c->morphism_name(f) + "," + d->morphism_name(g) + ")",
                                bo[c->src(f)][d->src(g)], bo[c->dst(f)][d->dst(g)]);
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t x = 0; x < nd; ++x) b.set_identity(bo[a][x], bm[c->identity(a)][d->identity(x)]);
  auto r = b.build(
      [&](MorId g, MorId f) {
        auto gc = static_cast<MorId>(g / md), gd = static_cast<MorId>(g % md);
        auto fc = static_cast<MorId>(f / md), fd = static_cast<MorId>(f % md);
        return bm[c->compose(gc, fc)][d->compose(gd, fd)];
      },
      false);
  ProductCategory p{r.category, {}, {}, identity_functor(c), identity_functor(d)};
  p.object.assign(nc, std::vector<ObjId>(nd));
  p.morphism.assign(mc, std::vector<MorId>(md));
  std::vector<ObjId> first_o(nc * nd), second_o(nc * nd);
  std::vector<MorId> first_m(mc * md), second_m(mc * md);
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t x = 0; x < nd; ++x) {
      ObjId o = r.object[bo[a][x]];
      p.object[a][x] = o;
      first_o[o] = static_cast<ObjId>(a);
      second_o[o] = static_cast<ObjId>(x);
    }
  for (std::size_t f = 0; f < mc; ++f)
    for (std::size_t g = 0; g < md; ++g) {
      MorId m = r.morphism[bm[f][g]];
      p.morphism[f][g] = m;
      first_m[m] = static_cast<MorId>(f);
      second_m[m] = static_cast<MorId>(g);
    }
  p.first = FinFunctor(r.category, c, std::move(first_o), std::move(first_m));
  p.second = FinFunctor(r.category, d, std::move(second_o), std::move(second_m));
  return p;
}

FinFunctor constant_functor(const CategoryPtr& source, const CategoryPtr& target, ObjId value) {
  return FinFunctor(source, target, std::vector<ObjId>(source->object_count(), value),
                    std::vector<MorId>(source->morphism_count(), target->identity(value)));
}

ObjId SliceCategory::object_of(MorId arrow) const {
  ObjId o = arrow >= 0 && arrow < static_cast<MorId>(object_index.size()) ? object_index[arrow] : -1;
  if (o < 0) throw Error(ErrorKind::UnknownObject, "arrow is not an object of the slice");
  return o;
}

SliceCategory slice_category(const CategoryPtr& c, ObjId x, std::span<const MorId> arrows) {
  std::vector<MorId> members(arrows.begin(), arrows.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (MorId u : members)
    if (c->dst(u) != x)
      throw Error(ErrorKind::ApexMismatch, c->morphism_name(u) + " does not end at " + c->object_name(x));

  FinCategory::Builder b;
  std::vector<ObjId> bobj(c->morphism_count(), -1);
  for (MorId u : members) bobj[u] = b.add_object(c->morphism_name(u));

  struct Tri {
    MorId g;
    MorId v;
  };
  std::vector<Tri> tris;
  std::map<std::pair<MorId, MorId>, MorId> by_pair;
  for (MorId u : members)
    for (MorId v : members)
      for (MorId g : c->hom(c->src(u), c->src(v))) {
        if (c->compose(v, g) != u) continue;
        MorId id = b.add_morphism("(" + c->morphism_name(g) + "," + c->morphism_name(v) + ")", bobj[u], bobj[v]);
        tris.push_back({g, v});
        by_pair[{g, v}] = id;
      }
  for (MorId u : members) b.set_identity(bobj[u], by_pair.at({c->identity(c->src(u)), u}));

  auto r = b.build(
      [&](MorId second, MorId first) { return by_pair.at({c->compose(tris[second].g, tris[first].g), tris[second].v}); },
      false);

  SliceCategory s{r.category, identity_functor(c), {}, {}, {}};
  s.object_arrow.assign(members.size(), -1);
  s.object_index.assign(c->morphism_count(), -1);
  for (MorId u : members) {
    ObjId o = r.object[bobj[u]];
    s.object_arrow[o] = u;
    s.object_index[u] = o;
  }
  s.morphism_arrow.assign(tris.size(), -1);
  for (std::size_t i = 0; i < tris.size(); ++i) s.morphism_arrow[r.morphism[i]] = tris[i].g;
  std::vector<ObjId> fo;
  for (MorId u : s.object_arrow) fo.push_back(c->src(u));
  s.forget = FinFunctor(r.category, c, std::move(fo), s.morphism_arrow);
  return s;
}

SliceCategory overcategory(const CategoryPtr& c, ObjId x) { return slice_category(c, x, c->arrows_into(x)); }

CommaCategory undercategory(const FinFunctor& functor, ObjId f) {
  const FinCategory& i = *functor.source();
  const FinCategory& t = *functor.target();
  if (f < 0 || f >= static_cast<ObjId>(t.object_count())) throw Error(ErrorKind::UnknownObject, "comma base");

  FinCategory::Builder b;
  std::vector<std::pair<ObjId, MorId>> data;
  std::map<std::pair<ObjId, MorId>, ObjId> bobj;
  for (ObjId a = 0; a < static_cast<ObjId>(i.object_count()); ++a)
    for (MorId h : t.hom(f, functor(a))) {
      bobj[{a, h}] = b.add_object("(" + i.object_name(a) + "," + t.morphism_name(h) + ")");
      data.emplace_back(a, h);
    }
  struct Arrow {
    MorId sigma;
    MorId h;
  };
  std::vector<Arrow> arrows;
  std::map<std::pair<MorId, MorId>, MorId> by_pair;
  for (std::size_t k = 0; k < data.size(); ++k) {
    auto [a, h] = data[k];
    for (MorId sigma : i.arrows_from(a)) {
      MorId h2 = t.compose(functor.on_morphism(sigma), h);
      MorId id = b.add_morphism("(" + i.morphism_name(sigma) + "," + t.morphism_name(h) + ")",
                                static_cast<ObjId>(k), bobj.at({i.dst(sigma), h2}));
      arrows.push_back({sigma, h});
      by_pair[{sigma, h}] = id;
    }
  }
  for (std::size_t k = 0; k < data.size(); ++k)
    b.set_identity(static_cast<ObjId>(k), by_pair.at({i.identity(data[k].first), data[k].second}));
  auto r = b.build(
      [&](MorId second, MorId first) {
        return by_pair.at({i.compose(arrows[second].sigma, arrows[first].sigma), arrows[first].h});
      },
      false);

  CommaCategory cc{r.category, identity_functor(functor.source()), {}};
  cc.object_data.assign(data.size(), {});
  std::vector<ObjId> po(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    cc.object_data[r.object[k]] = data[k];
    po[r.object[k]] = data[k].first;
  }
  std::vector<MorId> pm(arrows.size());
  for (std::size_t k = 0; k < arrows.size(); ++k) pm[r.morphism[k]] = arrows[k].sigma;
  cc.project = FinFunctor(r.category, functor.source(), std::move(po), std::move(pm));
  return cc;
}

bool is_connected(const FinCategory& c) {
  if (c.object_count() == 0) return false;
  UnionFind uf(c.object_count());
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) uf.unite(c.src(f), c.dst(f));
  int root = uf.find(0);
  for (ObjId a = 1; a < static_cast<ObjId>(c.object_count()); ++a)
    if (uf.find(a) != root) return false;
  return true;
}

bool is_final_functor(const FinFunctor& functor) {
  for (ObjId f = 0; f < static_cast<ObjId>(functor.target()->object_count()); ++f)
    if (!is_connected(*undercategory(functor, f).category)) return false;
  return true;
}

bool is_initial(const FinCategory& c, ObjId a) {
  for (ObjId b = 0; b < static_cast<ObjId>(c.object_count()); ++b)
    if (c.hom(a, b).size() != 1) return false;
  return true;
}

bool is_terminal(const FinCategory& c, ObjId a) {
  for (ObjId b = 0; b < static_cast<ObjId>(c.object_count()); ++b)
    if (c.hom(b, a).size() != 1) return false;
  return true;
}

std::optional<ObjId> initial_object(const FinCategory& c) {
  for (ObjId a = 0; a < static_cast<ObjId>(c.object_count()); ++a)
    if (is_initial(c, a)) return a;
  return std::nullopt;
}

std::optional<ObjId> terminal_object(const FinCategory& c) {
  for (ObjId a = 0; a < static_cast<ObjId>(c.object_count()); ++a)
    if (is_terminal(c, a)) return a;
  return std::nullopt;
}

bool is_monic(const FinCategory& c, MorId f) {
  for (ObjId z = 0; z < static_cast<ObjId>(c.object_count()); ++z) {
    std::set<MorId> seen;
    for (MorId u : c.hom(z, c.src(f)))
      if (!seen.insert(c.compose(f, u)).second) return false;
  }
  return true;
}

bool is_isomorphism(const FinCategory& c, MorId f) {
  for (MorId g : c.hom(c.dst(f), c.src(f)))
    if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.dst(f))) return true;
  return false;
}

}  // namespace catsieve
