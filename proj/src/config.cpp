#include "bohrkit/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "bohrkit/errors.hpp"

namespace bohrkit {

namespace {

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ValidationError(where + ": unknown key \"" + key + "\"");
  }
}

template <typename T>
void take(const Json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  const Json& v = j[key];
  if constexpr (std::is_same_v<T, double>) {
    if (!v.is_number()) throw ValidationError(where + "." + key + ": expected a number");
  } else {
    if (!v.is_number_unsigned()) {
      throw ValidationError(where + "." + key + ": expected a non-negative integer");
    }
  }
  out = v.get<T>();
}

}  // namespace

void RunConfig::validate() const {
  if (!(tolerances.fixedpoint > 0 && tolerances.norm_rel_gap > 0 && tolerances.exact_slack > 0)) {
    throw ValidationError("config: all tolerances must be positive");
  }
  if (budgets.matrix_cells == 0 || budgets.grid_points == 0 || budgets.orbit_steps == 0) {
    throw ValidationError("config: all budgets must be positive");
  }
  if (prime_table_limit < 2) throw ValidationError("config: primeTableLimit must be >= 2");
}

void RunConfig::merge(const Json& j) {
  check_keys(j, {"seed", "primeTableLimit", "tolerances", "budgets"}, "config");
  take(j, "seed", seed, "config");
  take(j, "primeTableLimit", prime_table_limit, "config");
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    check_keys(t, {"fixedpoint", "normRelGap", "exactSlack"}, "config.tolerances");
    take(t, "fixedpoint", tolerances.fixedpoint, "config.tolerances");
    take(t, "normRelGap", tolerances.norm_rel_gap, "config.tolerances");
    take(t, "exactSlack", tolerances.exact_slack, "config.tolerances");
  }
  if (j.contains("budgets")) {
    const Json& b = j["budgets"];
    check_keys(b, {"matrixCells", "gridPoints", "orbitSteps"}, "config.budgets");
    take(b, "matrixCells", budgets.matrix_cells, "config.budgets");
    take(b, "gridPoints", budgets.grid_points, "config.budgets");
    take(b, "orbitSteps", budgets.orbit_steps, "config.budgets");
  }
  validate();
}

Json RunConfig::to_json() const {
  Json j;
  j["seed"] = seed;
  j["primeTableLimit"] = prime_table_limit;
  j["tolerances"] = {{"fixedpoint", tolerances.fixedpoint},
                     {"normRelGap", tolerances.norm_rel_gap},
                     {"exactSlack", tolerances.exact_slack}};
  j["budgets"] = {{"matrixCells", budgets.matrix_cells},
                  {"gridPoints", budgets.grid_points},
                  {"orbitSteps", budgets.orbit_steps}};
  return j;
}

RunConfig load_config(const std::optional<std::string>& path) {
  RunConfig config;
  std::optional<std::string> file = path;
  if (!file) {
    if (const char* env = std::getenv("BOHRKIT_CONFIG"); env != nullptr && *env != '\0') {
      file = env;
    }
  }
  if (file) {
    std::ifstream in(*file);
    if (!in) throw ValidationError("cannot read config file " + *file);
    std::stringstream ss;
    ss << in.rdbuf();
    config.merge(parse_json_text(ss.str(), *file));
  }
  config.validate();
  return config;
}

}  // namespace bohrkit
