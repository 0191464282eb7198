#pragma once

#include <optional>
#include <string>

#include "documents.hpp"

namespace catsieve::cli {

struct Config {
  std::size_t probe = 3;
  std::size_t dim = 4;
  bool dim_set = false;
  Guards guards;
  std::vector<std::string> guard_overrides;
  bool pretty = false;
  std::string output;
  std::vector<std::string> inputs;

  json to_json() const;
};

enum Exit { Holds = 0, Fails = 1, InputFailure = 2, GuardTripped = 3 };

struct Outcome {
  json report;
  int code = Holds;
};

Outcome category_command(const Config& cfg, const std::string& path);
Outcome sieve_command(const Config& cfg, const std::string& sieve, const std::string& category, bool universal);
Outcome topology_command(const Config& cfg, const std::string& category, bool canonical, const std::string& verify);
Outcome sheaf_command(const Config& cfg, const std::string& category, const std::string& presheaf,
                      const std::string& representable, const std::string& topology);
Outcome hocolim_command(const Config& cfg, const std::string& diagram, const std::string& cech,
                        const std::string& simplices, const std::string& cech_map);
Outcome cylinder_command(const Config& cfg, const std::string& path);
Outcome gensieve_command(const Config& cfg, const std::string& category, const std::string& r, const std::string& s);

// Sets a Guards field from "name=value"; throws InputError on unknown names.
void apply_guard(Guards& g, const std::string& assignment);

// Indented key: value rendering of a report.
std::string render_text(const json& report);

}  // namespace catsieve::cli
