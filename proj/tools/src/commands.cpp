#include "commands.hpp"

#include <sstream>

#include "catsieve/cech.hpp"
#include "catsieve/cylinder.hpp"
#include "catsieve/gensieve.hpp"

namespace catsieve::cli {

namespace {

json decision_json(const Decision& d) {
  json j{{"holds", d.holds}, {"method", d.method}};
  if (d.probe) j["probe"] = *d.probe;
  if (d.cross_check) j["cross_check"] = *d.cross_check;
  if (!d.witness.empty()) j["witness"] = d.witness;
  return j;
}

Outcome finish(json report, bool holds) {
  report["holds"] = holds;
  return {std::move(report), holds ? Holds : Fails};
}

SSet truncate(const SSet& x, std::size_t dim) {
  SSet out;
  out.levels.assign(x.levels.begin(), x.levels.begin() + static_cast<std::ptrdiff_t>(dim + 1));
  out.levels.back().degeneracies.clear();
  return out;
}

// A simplicial set document, truncated at --dim when one was given.
SSetPtr sset_with_dim(const Config& cfg, Document d) {
  if (cfg.dim_set && d.value.contains("facets")) d.value["dim"] = cfg.dim;
  SSetPtr x = parse_sset(d);
  if (!cfg.dim_set || x->dim() == cfg.dim) return x;
  if (cfg.dim > x->dim())
    throw Error(ErrorKind::RangeExceedsValidity, "--dim " + std::to_string(cfg.dim) + " exceeds the document's dimension " +
                                                     std::to_string(x->dim()));
  return std::make_shared<SSet>(truncate(*x, cfg.dim));
}

json comparison_json(const SimplicialMap& f) {
  const std::size_t top = std::min(f.source->dim(), f.target->dim());
  if (top < 2) throw Error(ErrorKind::RangeExceedsValidity, "comparing maps on homology needs --dim of at least 2");
  const std::size_t range = top - 2;
  const auto through = cone_acyclic_through(f);
  json j{{"method", "homology-proxy"}, {"iso_range", {0, range}}};
  j["cone_acyclic_through"] = through ? json(*through) : json(nullptr);
  j["isomorphism"] = through && *through >= range + 1;
  return j;
}

}  // namespace

json Config::to_json() const {
  json g{{"cocone_candidates", guards.cocone_candidates},
         {"arrows_into_object", guards.arrows_into_object},
         {"gensieve_objects", guards.gensieve_objects},
         {"simplices_per_level", guards.simplices_per_level}};
  return {{"inputs", inputs}, {"probe", probe}, {"dim", dim}, {"guards", g}, {"format", pretty ? "text" : "json"}};
}

void apply_guard(Guards& g, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw InputError("--guard expects name=value, got '" + assignment + "'");
  const std::string name = assignment.substr(0, eq);
  std::size_t value = 0;
  try {
    value = std::stoull(assignment.substr(eq + 1));
  } catch (const std::exception&) {
    throw InputError("--guard value for " + name + " is not a number");
  }
  if (value == 0) throw InputError("--guard " + name + " must be positive");
  if (name == "cocone_candidates")
    g.cocone_candidates = value;
  else if (name == "arrows_into_object")
    g.arrows_into_object = value;
  else if (name == "gensieve_objects")
    g.gensieve_objects = value;
  else if (name == "simplices_per_level")
    g.simplices_per_level = value;
  else
    throw InputError("unknown guard '" + name + "'");
}

Outcome category_command(const Config&, const std::string& path) {
  Document d = load(path);
  try {
    CategoryPtr c = parse_category(d);
    return finish({{"objects", c->object_count()}, {"morphisms", c->morphism_count()}}, true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonAssociative && e.kind() != ErrorKind::IdentityLawViolation &&
        e.kind() != ErrorKind::MissingComposite)
      throw;
    return finish({{"failure", {{"kind", std::string(to_string(e.kind()))}, {"location", e.what()}}}}, false);
  }
}

Outcome sieve_command(const Config& cfg, const std::string& sieve, const std::string& category, bool universal) {
  Document d = load(sieve);
  json report;
  bool holds = true;
  if (d.has("generators")) {
    GeneratedSieve s = parse_generated_sieve(d.value);
    const Decision colim = is_colim_sieve(s);
    report["colim_sieve"] = decision_json(colim);
    holds = colim.holds;
    if (universal) {
      const Decision u = is_universal_colim_sieve(s, cfg.probe);
      report["universal_colim_sieve"] = decision_json(u);
      report["basis_criterion"] = decision_json(basis_cover_check(s.apex, s.generators, cfg.probe));
      holds = holds && u.holds;
    }
  } else {
    Document cd = !category.empty() ? load(category) : d.at("category");
    CategoryPtr c = parse_category(cd);
    ExplicitSieve s = parse_explicit_sieve(d.value, c);
    const Decision colim = is_colim_sieve(s, cfg.guards);
    report["colim_sieve"] = decision_json(colim);
    holds = colim.holds;
    if (universal) {
      const Decision u = is_universal_colim_sieve(s, cfg.guards);
      report["universal_colim_sieve"] = decision_json(u);
      holds = holds && u.holds;
    }
  }
  return finish(std::move(report), holds);
}

Outcome topology_command(const Config& cfg, const std::string& category, bool canonical, const std::string& verify) {
  CategoryPtr c = parse_category(load(category));
  TopologyAssignment j = canonical ? canonical_topology(c, cfg.guards) : parse_topology(load(verify).value, c);
  const TopologyReport r = verify_topology_axioms(j, cfg.guards);
  json report{{"maximality", r.maximality}, {"stability", r.stability}, {"transitivity", r.transitivity}};
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"axiom", w.axiom}, {"object", w.object}, {"sieve", w.sieve}, {"arrow", w.arrow}, {"detail", w.detail}});
  report["witnesses"] = witnesses;
  if (canonical) report["topology"] = topology_to_json(j);
  return finish(std::move(report), r.holds());
}

Outcome sheaf_command(const Config& cfg, const std::string& category, const std::string& presheaf,
                      const std::string& representable, const std::string& topology) {
  CategoryPtr c = parse_category(load(category));
  auto representing = [&] {
    auto m = c->find_object(representable);
    if (!m) throw Error(ErrorKind::UnknownObject, "unknown object '" + representable + "'");
    return *m;
  };
  Presheaf p = !presheaf.empty() ? parse_presheaf(load(presheaf).value, c) : representable_presheaf(c, representing());
  TopologyAssignment j = topology.empty() ? canonical_topology(c, cfg.guards) : parse_topology(load(topology).value, c);
  const SheafDecision s = is_sheaf(p, j, cfg.guards);
  json report{{"presheaf", presheaf.empty() ? "representable " + representable : presheaf},
              {"topology", topology.empty() ? "canonical" : topology}};
  if (!s.witness.empty()) report["witness"] = s.witness;
  return finish(std::move(report), s.holds);
}

Outcome hocolim_command(const Config& cfg, const std::string& diagram, const std::string& cech,
                        const std::string& simplices, const std::string& cech_map_path) {
  json report;
  bool holds = true;
  if (!cech.empty()) {
    Document d = load(cech);
    SSetPtr x = sset_with_dim(cfg, d.at("space"));
    CechCover cover = cech_cover(x, parse_cover(d.value.at("parts"), x), cfg.guards);
    report["construction"] = "cover";
    report["homology"] = homology_to_json(homology(*cover.hocolim.space));
    report["space_homology"] = homology_to_json(homology(*x));
    report["nerve_homology"] = homology_to_json(homology(*cover.nerve_diagonal));
    report["comparison"] = comparison_json(cover.to_space);
    report["nerve_comparison"] = comparison_json(cover.nerve_to_space);
    holds = report["comparison"]["isomorphism"].get<bool>() && report["nerve_comparison"]["isomorphism"].get<bool>();
  } else if (!simplices.empty()) {
    SSetPtr x = sset_with_dim(cfg, load(simplices));
    SimplexCategory s = simplex_category(x);
    Hocolim h = hocolim(s.diagram, cfg.guards);
    report["construction"] = "simplex category";
    report["objects"] = s.diagram.shape->object_count();
    report["morphisms"] = s.diagram.shape->morphism_count();
    report["homology"] = homology_to_json(homology(*h.space));
    report["space_homology"] = homology_to_json(homology(*x));
    report["comparison"] = comparison_json(simplex_category_to_space(s, h, x));
    holds = report["comparison"]["isomorphism"].get<bool>();
  } else if (!cech_map_path.empty()) {
    Document d = load(cech_map_path);
    SSetPtr y = sset_with_dim(cfg, d.at("source"));
    SSetPtr x = sset_with_dim(cfg, d.at("target"));
    CechMap c = cech_map(parse_simplicial_map(d.value.at("map"), y, x), cfg.guards);
    report["construction"] = "map";
    report["homology"] = homology_to_json(homology(*c.diagonal));
    report["base_homology"] = homology_to_json(homology(*x));
    report["comparison"] = comparison_json(c.augmentation);
    holds = report["comparison"]["isomorphism"].get<bool>();
  } else {
    SSetDiagram d = parse_diagram(load(diagram));
    Hocolim h = hocolim(d, cfg.guards);
    report["construction"] = "diagram";
    report["homology"] = homology_to_json(homology(*h.space));
  }
  report["method"] = "homology-proxy";
  return finish(std::move(report), holds);
}

Outcome cylinder_command(const Config& cfg, const std::string& path) {
  Document d = load(path);
  SSetDiagram f = parse_diagram(d.at("diagram"));
  CategoryPtr c = parse_category(d.at("source"));
  FinFunctor alpha = parse_functor(d.value.at("alpha"), c, f.shape);
  FinFunctor beta = parse_functor(d.value.at("beta"), c, f.shape);
  std::vector<MorId> components;
  const json& theta = d.value.at("theta");
  for (ObjId o = 0; o < static_cast<ObjId>(c->object_count()); ++o) {
    const std::string name = c->object_name(o);
    if (!theta.contains(name)) throw Error(ErrorKind::Malformed, "theta has no component at '" + name + "'");
    auto m = f.shape->find_morphism(theta.at(name).get<std::string>());
    if (!m) throw Error(ErrorKind::UnknownMorphism, "unknown morphism in theta at '" + name + "'");
    components.push_back(*m);
  }
  NatTrans nat(alpha, beta, components);
  const int proxy = f.dim() >= 1 ? static_cast<int>(f.dim()) - 1 : -1;
  CylinderReport r = check_cylinder(f, nat, proxy, cfg.guards);
  json report{{"simplicial", r.simplicial},
              {"h0_is_alpha_sharp", r.h0_is_alpha_sharp},
              {"h1_is_beta_sharp_theta", r.h1_is_beta_sharp_theta},
              {"factors_through_pushout", r.factors_through_pushout},
              {"pushout_square", r.pushout_square},
              {"method", r.method}};
  report["homology_proxy"] = r.homology_proxy ? json(*r.homology_proxy) : json(nullptr);
  report["proxy_range"] = {0, r.proxy_range};
  if (!r.witness.empty()) report["witness"] = r.witness;
  return finish(std::move(report), r.holds());
}

Outcome gensieve_command(const Config& cfg, const std::string& category, const std::string& r_path,
                         const std::string& s_path) {
  CategoryPtr c = parse_category(load(category));
  ExplicitSieve r = parse_explicit_sieve(load(r_path).value, c);
  ExplicitSieve s = parse_explicit_sieve(load(s_path).value, c);
  if (r.apex != s.apex) throw Error(ErrorKind::ApexMismatch, "R and S must sit on the same object");
  json report;
  GrothendieckComparison g = compare_with_grothendieck(c, r.apex, {r, s}, cfg.guards);
  report["grothendieck"] = {{"functor", g.functor},
                            {"objects_bijective", g.objects_bijective},
                            {"morphisms_bijective", g.morphisms_bijective},
                            {"projection_matches", g.projection_matches}};
  if (!g.witness.empty()) report["grothendieck"]["witness"] = g.witness;

  TransitivityReport t = transitivity_instance(r, s, cfg.guards);
  json per_object = json::array();
  for (const auto& p : t.per_object)
    per_object.push_back({{"object", c->object_name(p.y)},
                          {"upper_right_commutes", p.upper_right_commutes},
                          {"lower_left_commutes", p.lower_left_commutes},
                          {"alpha_bijective", p.alpha_bijective},
                          {"phi_r_bijective", p.phi_r_bijective}});
  report["transitivity"] = {{"s_universal", t.s_universal},
                            {"pullbacks_universal", t.pullbacks_universal},
                            {"theta_valid", t.theta_valid},
                            {"r_colim_direct", t.r_colim_direct},
                            {"r_universal_direct", t.r_universal_direct},
                            {"consistent", t.consistent()},
                            {"per_object", per_object}};
  try {
    report["forgetful_bijection"] = verify_cor_4_8(r, s, {}, std::nullopt, cfg.guards);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisFails) throw;
    report["forgetful_bijection"] = "hypothesis fails";
  }
  return finish(std::move(report), g.holds() && t.consistent());
}

namespace {

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render(out, v, indent + 1);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        render(out, v, indent + 1);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace catsieve::cli
