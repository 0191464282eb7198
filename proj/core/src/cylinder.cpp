#include "catsieve/cylinder.hpp"

#include <algorithm>

#include "catsieve/catalog.hpp"
#include "catsieve/homology.hpp"

namespace catsieve {

namespace {

// Position of the interval coordinate t inside a cylinder cell.
struct CylinderIndex {
  std::size_t n;
  int width() const { return static_cast<int>(n) + 2; }
  int base(int k) const { return k / width(); }
  int t(int k) const { return k % width(); }
};

BiSSetMap endpoint(const BiSSetPtr& x, const BiSSetPtr& cyl, bool one) {
  BiSSetMap f{x, cyl, {}};
  f.levels.resize(x->dim + 1);
  for (std::size_t n = 0; n <= x->dim; ++n)
    for (std::size_t m = 0; m <= x->dim; ++m) {
      std::vector<int> level;
      const int w = static_cast<int>(n) + 2;
      for (int a = 0; a < static_cast<int>(x->size(n, m)); ++a) level.push_back(a * w + (one ? w - 1 : 0));
      f.levels[n].push_back(std::move(level));
    }
  return f;
}

}  // namespace

CylinderHomotopy cylinder_homotopy(const SSetDiagram& f, const NatTrans& theta, const Guards& guards) {
  const FinFunctor& alpha = theta.from();
  const FinFunctor& beta = theta.to();
  if (alpha.target()->object_count() != f.shape->object_count() ||
      alpha.target()->morphism_count() != f.shape->morphism_count())
    throw Error(ErrorKind::Mismatch, "functors do not land in the diagram's shape");
  require_chain_bounded(*alpha.source());
  const FinCategory& c = *alpha.source();
  const FinCategory& d = *f.shape;

  Replacement target = srep(f, guards);
  Replacement source = srep(precompose(f, alpha), guards);
  Replacement beta_source = srep(precompose(f, beta), guards);
  auto cyl = std::make_shared<BiSSet>(product_with_interval(*source.object));

  std::vector<SimplicialMap> components;
  for (ObjId j = 0; j < static_cast<ObjId>(c.object_count()); ++j) components.push_back(f.maps[theta[j]]);

  CylinderHomotopy out{source, beta_source, target, cyl, {}, endpoint(source.object, cyl, false),
                       endpoint(source.object, cyl, true), {}, alpha_sharp(alpha, source, target),
                       alpha_sharp(beta, beta_source, target), eta_hat(components, source, beta_source)};

  const std::size_t dim = source.object->dim;
  out.h = BiSSetMap{cyl, target.object, {}};
  out.projection = BiSSetMap{cyl, source.object, {}};
  out.h.levels.resize(dim + 1);
  out.projection.levels.resize(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) {
    const CylinderIndex ix{n};
    // Output chain for every (source chain, t).
    std::vector<std::vector<int>> chain_image(source.chains.size(n), std::vector<int>(n + 2));
    for (int ch = 0; ch < static_cast<int>(source.chains.size(n)); ++ch) {
      const auto& sig = source.chains.chains[n][ch];
      for (int t = 0; t < ix.width(); ++t) {
        std::vector<int> mapped;
        if (n == 0) {
          mapped = {t == 0 ? alpha(sig[0]) : beta(sig[0])};
        } else {
          for (int k = 1; k <= static_cast<int>(n); ++k) {
            MorId s = sig[k - 1];
            if (k < t)
              mapped.push_back(beta.on_morphism(s));
            else if (k > t)
              mapped.push_back(alpha.on_morphism(s));
            else
              mapped.push_back(d.compose(theta[c.dst(s)], alpha.on_morphism(s)));
          }
        }
        chain_image[ch][t] = target.chains.find(n, mapped);
      }
    }
    for (std::size_t m = 0; m <= dim; ++m) {
      std::vector<int> level, proj;
      for (int k = 0; k < static_cast<int>(cyl->size(n, m)); ++k) {
        const int a = ix.base(k);
        const int t = ix.t(k);
        auto [ch, x] = source.locate(n, m, a);
        int value = x;
        if (t == ix.width() - 1) value = components[source.chains.last(n, ch)](m, x);
        level.push_back(target.index(n, m, chain_image[ch][t], value));
        proj.push_back(a);
      }
      out.h.levels[n].push_back(std::move(level));
      out.projection.levels[n].push_back(std::move(proj));
    }
  }
  return out;
}

CylinderPushout cylinder_pushout(const CylinderHomotopy& h, const SSetDiagram& f, const NatTrans& theta,
                                 const Guards& guards) {
  const FinFunctor& alpha = theta.from();
  const FinFunctor& beta = theta.to();
  const CategoryPtr& c = alpha.source();
  const FinCategory& d = *f.shape;
  auto arrow = walking_arrow();
  const ObjId zero = arrow->object("0");
  const ObjId one = arrow->object("1");
  const MorId up = arrow->morphism("f");
  ProductCategory prod = product(c, arrow);
  const FinCategory& p = *prod.category;

  std::vector<ObjId> objs(p.object_count());
  std::vector<MorId> mors(p.morphism_count());
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
    objs[prod.object[x][zero]] = alpha(x);
    objs[prod.object[x][one]] = beta(x);
  }
  for (MorId s = 0; s < static_cast<MorId>(c->morphism_count()); ++s)
    for (MorId u = 0; u < static_cast<MorId>(arrow->morphism_count()); ++u) {
      MorId image;
      if (u == up)
        image = d.compose(theta[c->dst(s)], alpha.on_morphism(s));
      else if (arrow->src(u) == zero)
        image = alpha.on_morphism(s);
      else
        image = beta.on_morphism(s);
      mors[prod.morphism[s][u]] = image;
    }
  FinFunctor theta_bar(prod.category, f.shape, objs, mors);
  Replacement glued = srep(precompose(f, theta_bar), guards);

  std::vector<ObjId> top_objs;
  std::vector<MorId> top_mors;
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) top_objs.push_back(prod.object[x][one]);
  for (MorId s = 0; s < static_cast<MorId>(c->morphism_count()); ++s)
    top_mors.push_back(prod.morphism[s][arrow->identity(one)]);
  FinFunctor iota(c, prod.category, top_objs, top_mors);

  CylinderPushout out{prod.category, theta_bar, glued, {}, alpha_sharp(iota, h.beta_source, glued), {}, false, false};

  const Replacement& src = h.source;
  const std::size_t dim = src.object->dim;
  out.phi = BiSSetMap{h.cylinder, glued.object, {}};
  out.phi.levels.resize(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) {
    const int w = static_cast<int>(n) + 2;
    for (std::size_t m = 0; m <= dim; ++m) {
      std::vector<int> level;
      for (int k = 0; k < static_cast<int>(h.cylinder->size(n, m)); ++k) {
        const int t = k % w;
        auto [ch, x] = src.locate(n, m, k / w);
        const auto& sig = src.chains.chains[n][ch];
        auto height = [&](int i) { return i < t ? one : zero; };
        std::vector<int> mapped;
        if (n == 0) {
          mapped = {prod.object[sig[0]][height(0)]};
        } else {
          for (int i = 1; i <= static_cast<int>(n); ++i) {
            ObjId lo = height(i);
            ObjId hi = height(i - 1);
            MorId u = lo == hi ? arrow->identity(lo) : up;
            mapped.push_back(prod.morphism[sig[i - 1]][u]);
          }
        }
        int value = x;
        if (t == w - 1) value = f.maps[theta[src.chains.last(n, ch)]](m, x);
        level.push_back(glued.index(n, m, glued.chains.find(n, mapped), value));
      }
      out.phi.levels[n].push_back(std::move(level));
    }
  }
  out.composite = compose(alpha_sharp(theta_bar, glued, h.target), out.phi);

  out.square_commutes = compose(out.phi, h.i1) == compose(out.inclusion, h.f_theta);
  bool pushout = true;
  for (std::size_t n = 0; n <= dim && pushout; ++n) {
    const int w = static_cast<int>(n) + 2;
    for (std::size_t m = 0; m <= dim && pushout; ++m) {
      std::vector<int> hits(glued.object->size(n, m), 0);
      const auto& ph = out.phi.levels[n][m];
      for (int k = 0; k < static_cast<int>(ph.size()); ++k)
        if (k % w != w - 1) ++hits[ph[k]];
      for (int v : out.inclusion.levels[n][m]) ++hits[v];
      pushout = std::all_of(hits.begin(), hits.end(), [](int v) { return v == 1; });
    }
  }
  out.is_pushout = pushout && out.square_commutes;
  return out;
}

CylinderReport check_cylinder(const SSetDiagram& f, const NatTrans& theta, int proxy_degree, const Guards& guards) {
  CylinderReport r;
  CylinderHomotopy h = cylinder_homotopy(f, theta, guards);
  try {
    h.h.validate();
    r.simplicial = true;
  } catch (const Error& e) {
    r.witness = e.what();
  }
  BiSSetMap h0 = compose(h.h, h.i0);
  BiSSetMap h1 = compose(h.h, h.i1);
  r.h0_is_alpha_sharp = h0 == h.alpha_sharp;
  r.h1_is_beta_sharp_theta = h1 == compose(h.beta_sharp, h.f_theta);
  if (!r.h0_is_alpha_sharp && r.witness.empty()) r.witness = "H0 differs from the relabelling map";
  if (!r.h1_is_beta_sharp_theta && r.witness.empty()) r.witness = "H1 differs from the transported relabelling";
  CylinderPushout p = cylinder_pushout(h, f, theta, guards);
  r.factors_through_pushout = p.composite == h.h;
  r.pushout_square = p.is_pushout;
  if (proxy_degree >= 0) {
    auto src = std::make_shared<SSet>(diag(*h.source.object));
    auto dst = std::make_shared<SSet>(diag(*h.target.object));
    r.proxy_range = static_cast<std::size_t>(proxy_degree);
    r.homology_proxy = induced_maps_equal(diag(h0, src, dst), diag(h1, src, dst), r.proxy_range);
  }
  return r;
}

}  // namespace catsieve
