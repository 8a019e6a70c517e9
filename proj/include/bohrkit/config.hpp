#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bohrkit/serialize.hpp"

namespace bohrkit {

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t prime_table_limit = 1'000'000;

  struct Tolerances {
    double fixedpoint = 1e-8;
    double norm_rel_gap = 5e-2;
    double exact_slack = 1e-12;
  } tolerances;

  struct Budgets {
    std::uint64_t matrix_cells = 4'000'000;
    std::uint64_t grid_points = std::uint64_t{1} << 26;
    std::uint64_t orbit_steps = 50'000'000;
  } budgets;

  // Throws ValidationError unless every tolerance and budget is positive.
  void validate() const;

  // Overlays the keys present in j onto *this:
  //   {"seed":1,"primeTableLimit":1000000,
  //    "tolerances":{"fixedpoint":1e-8,"normRelGap":0.05,"exactSlack":1e-12},
  //    "budgets":{"matrixCells":4000000,"gridPoints":67108864,"orbitSteps":50000000}}
  // Unknown keys are rejected and the result is validated.
  void merge(const Json& j);

  Json to_json() const;
};

// Defaults, overlaid with the file at `path` if given, else the file named
// by BOHRKIT_CONFIG if set.
RunConfig load_config(const std::optional<std::string>& path);

}  // namespace bohrkit
