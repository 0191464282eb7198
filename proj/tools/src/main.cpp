#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace catsieve;
using namespace catsieve::cli;

namespace {

int exit_for(ErrorKind kind) { return kind == ErrorKind::AmbientTooLarge ? GuardTripped : InputFailure; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for sieves, topologies and homotopy colimits on finite categories"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::size_t dim = 4;
  app.add_option("--probe", cfg.probe, "Size bound for probing finite sets")->check(CLI::PositiveNumber);
  auto* dim_opt = app.add_option("--dim", dim, "Truncation dimension for simplicial sets")->check(CLI::PositiveNumber);
  app.add_option("--guard", cfg.guard_overrides, "Enumeration guard as name=value (repeatable)");
  app.add_flag("--pretty", cfg.pretty, "Print an indented text report instead of JSON");
  app.add_option("--output", cfg.output, "Write the report to this file");

  std::string path, sieve, category, verify, presheaf, representable, topology, cech, simplices, cech_map, r, s;
  bool universal = false, canonical = false;

  auto* cat_cmd = app.add_subcommand("category", "Validate a category document");
  cat_cmd->add_option("file", path)->required();

  auto* sieve_cmd = app.add_subcommand("sieve", "Decide whether a sieve is a colim sieve");
  sieve_cmd->add_option("sieve", sieve)->required();
  sieve_cmd->add_option("--category", category, "Ambient category for explicit sieves");
  sieve_cmd->add_flag("--universal", universal, "Also decide universality");

  auto* top_cmd = app.add_subcommand("topology", "Compute or verify a Grothendieck topology");
  top_cmd->add_option("category", category)->required();
  auto* canon = top_cmd->add_flag("--canonical", canonical, "Compute the canonical topology");
  auto* ver = top_cmd->add_option("--verify", verify, "Verify the axioms for a topology document");
  canon->excludes(ver);
  top_cmd->callback([&] {
    if (!canonical && verify.empty()) throw CLI::ValidationError("topology", "one of --canonical or --verify is required");
  });

  auto* sheaf_cmd = app.add_subcommand("sheaf", "Check the sheaf condition");
  sheaf_cmd->add_option("category", category)->required();
  auto* pre = sheaf_cmd->add_option("--presheaf", presheaf, "Presheaf document");
  auto* rep = sheaf_cmd->add_option("--representable", representable, "Use the presheaf represented by this object");
  pre->excludes(rep);
  sheaf_cmd->add_option("--topology", topology, "Topology document (default: canonical)");
  sheaf_cmd->callback([&] {
    if (presheaf.empty() && representable.empty())
      throw CLI::ValidationError("sheaf", "one of --presheaf or --representable is required");
  });

  auto* hoc_cmd = app.add_subcommand("hocolim", "Homology of a homotopy colimit");
  auto* diag_opt = hoc_cmd->add_option("diagram", path, "Diagram of simplicial sets");
  auto* cech_opt = hoc_cmd->add_option("--cech", cech, "Cover document {space, parts}");
  auto* simp_opt = hoc_cmd->add_option("--simplices", simplices, "Simplicial set for the simplex category");
  auto* map_opt = hoc_cmd->add_option("--cech-map", cech_map, "Map document {source, target, map}");
  for (auto* a : {diag_opt, cech_opt, simp_opt, map_opt})
    for (auto* b : {diag_opt, cech_opt, simp_opt, map_opt})
      if (a != b) a->excludes(b);
  hoc_cmd->callback([&] {
    if (path.empty() && cech.empty() && simplices.empty() && cech_map.empty())
      throw CLI::ValidationError("hocolim", "a diagram, --cech, --simplices or --cech-map is required");
  });

  auto* cyl_cmd = app.add_subcommand("cylinder", "Check the cylinder homotopy for a natural transformation");
  cyl_cmd->add_option("file", path)->required();

  auto* gs_cmd = app.add_subcommand("gensieve", "Generalized-sieve checks for a pair of sieves");
  gs_cmd->add_option("category", category)->required();
  gs_cmd->add_option("--r", r, "First sieve")->required();
  gs_cmd->add_option("--s", s, "Second sieve")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : InputFailure;
  }
  cfg.dim = dim;
  cfg.dim_set = dim_opt->count() > 0;
  for (const std::string* in : {&path, &sieve, &category, &verify, &presheaf, &topology, &cech, &simplices, &cech_map, &r, &s})
    if (!in->empty()) cfg.inputs.push_back(*in);

  Outcome out;
  try {
    for (const auto& g : cfg.guard_overrides) apply_guard(cfg.guards, g);
    if (*cat_cmd)
      out = category_command(cfg, path);
    else if (*sieve_cmd)
      out = sieve_command(cfg, sieve, category, universal);
    else if (*top_cmd)
      out = topology_command(cfg, category, canonical, verify);
    else if (*sheaf_cmd)
      out = sheaf_command(cfg, category, presheaf, representable, topology);
    else if (*hoc_cmd)
      out = hocolim_command(cfg, path, cech, simplices, cech_map);
    else if (*cyl_cmd)
      out = cylinder_command(cfg, path);
    else
      out = gensieve_command(cfg, category, r, s);
  } catch (const Error& e) {
    out = {{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}, exit_for(e.kind())};
  } catch (const InputError& e) {
    out = {{{"error", {{"kind", "InputError"}, {"message", e.what()}}}}, InputFailure};
  } catch (const nlohmann::json::exception& e) {
    out = {{{"error", {{"kind", "Malformed"}, {"message", e.what()}}}}, InputFailure};
  }
  out.report["command"] = app.get_subcommands().front()->get_name();
  out.report["config"] = cfg.to_json();
  out.report["exit_code"] = out.code;

  const std::string rendered = cfg.pretty ? render_text(out.report) : out.report.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      std::cerr << "cannot write " << cfg.output << "\n";
      return InputFailure;
    }
    file << rendered;
  }
  return out.code;
}
