#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bohrkit/dirichlet.hpp"
#include "bohrkit/multipoly.hpp"

namespace bohrkit {

enum class NormKind { LowerBoundSample, L1UpperBound };

std::string to_string(NormKind kind);

// A sup-norm estimate. Sampled estimates are lower bounds; the l1 bound is
// an upper bound. argmax is the sample point: {s} on the Dirichlet side,
// torus coordinates on the polydisk side, empty for l1.
struct NormEstimate {
  double value = 0.0;
  NormKind kind = NormKind::LowerBoundSample;
  std::uint64_t samples = 0;
  std::vector<std::complex<double>> argmax;
};

enum class TorusStrategy { Grid, Random, Kronecker };

std::string to_string(TorusStrategy strategy);
// Throws ValidationError on an unknown name.
TorusStrategy parse_torus_strategy(const std::string& name);

struct TorusOptions {
  // Largest grid (points) the grid strategy may visit.
  std::uint64_t grid_budget = std::uint64_t{1} << 26;
  // Spacing of consecutive t values along the Kronecker orbit.
  double kronecker_step = 0.25;
};

// Point of T^m; each coordinate unimodular within 1e-12.
class TorusPoint {
 public:
  static constexpr double kTolerance = 1e-12;
  // Throws ValidationError if some |coord| differs from 1 by more than kTolerance.
  explicit TorusPoint(std::vector<std::complex<double>> coords);
  std::span<const std::complex<double>> coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }

 private:
  std::vector<std::complex<double>> coords_;
};

NormEstimate norm_upper_l1(const DirichletPolynomial& f);
NormEstimate norm_upper_l1(const MultiPoly& F);

// Lower bound for sup_{Re s > 0} |f(s)| from samples s = sigma + i t.
// sigma runs over 1, 1/2, 1/4, ... down to sigma_min (three quarters of the
// samples sit on sigma_min); t follows a dyadic van der Corput grid on
// [-t_max, t_max] with seeded jitter inside each cell. The first k samples
// do not depend on the total, so more samples never lower the estimate.
NormEstimate norm_est_vertical(const DirichletPolynomial& f, double sigma_min, double t_max,
                               std::uint64_t samples, std::uint64_t seed);

// Lower bound for sup |F| over the closed polydisk, sampled on T^m where
// m = F.max_var() >= 1. Throws ValidationError for constant F and
// BudgetError when the grid would exceed options.grid_budget.
NormEstimate norm_est_torus(const MultiPoly& F, TorusStrategy strategy, std::uint64_t count,
                            std::uint64_t seed, const TorusOptions& options = {});

// (2^{-it}, 3^{-it}, ..., p_m^{-it}) for each t.
std::vector<TorusPoint> kronecker_orbit(std::uint32_t m, std::span<const double> t_values);

// max_j |p_j^{-it} - target_j|.
double orbit_distance(std::span<const double> log_primes, const TorusPoint& target, double t);

// Smallest-found t in (0, t_max] with orbit_distance < epsilon: coarse scan
// at spacing 0.05 / ln p_m, then golden-section refinement of each sampled
// local minimum that could hide a hit. nullopt when t_max or step_budget
// coarse steps are exhausted; that is a budget outcome, not a proof that no
// such t exists.
std::optional<double> kronecker_hit(std::uint32_t m, const TorusPoint& target, double epsilon,
                                    double t_max, std::uint64_t step_budget);

// Covering radius of a point set on T^m against a reference grid of
// ref_per_dim cell centres per axis: max over grid nodes of the distance to
// the nearest sample, in the max-norm on angles (radians). A cheap proxy for
// discrepancy.
double covering_radius(std::span<const TorusPoint> points, std::uint32_t ref_per_dim);

}  // namespace bohrkit
