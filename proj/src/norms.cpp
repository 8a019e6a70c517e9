#include "bohrkit/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bohrkit/errors.hpp"
#include "bohrkit/primes.hpp"

namespace bohrkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Base-2 van der Corput point: the bits of i mirrored behind the binary point.
double radical_inverse2(std::uint64_t i) {
  i = (i << 32) | (i >> 32);
  i = ((i & 0x0000FFFF0000FFFFULL) << 16) | ((i >> 16) & 0x0000FFFF0000FFFFULL);
  i = ((i & 0x00FF00FF00FF00FFULL) << 8) | ((i >> 8) & 0x00FF00FF00FF00FFULL);
  i = ((i & 0x0F0F0F0F0F0F0F0FULL) << 4) | ((i >> 4) & 0x0F0F0F0F0F0F0F0FULL);
  i = ((i & 0x3333333333333333ULL) << 2) | ((i >> 2) & 0x3333333333333333ULL);
  i = ((i & 0x5555555555555555ULL) << 1) | ((i >> 1) & 0x5555555555555555ULL);
  return static_cast<double>(i >> 11) * 0x1p-53;
}

std::vector<double> log_primes(std::uint32_t m) {
  std::vector<double> logs;
  for (const auto p : first_primes(m)) logs.push_back(std::log(static_cast<double>(p)));
  return logs;
}

}  // namespace

std::string to_string(NormKind kind) {
  return kind == NormKind::L1UpperBound ? "l1-upper-bound" : "lower-bound-sample";
}

std::string to_string(TorusStrategy strategy) {
  switch (strategy) {
    case TorusStrategy::Grid: return "grid";
    case TorusStrategy::Random: return "random";
    case TorusStrategy::Kronecker: return "kronecker";
  }
  return "unknown";
}

TorusStrategy parse_torus_strategy(const std::string& name) {
  if (name == "grid") return TorusStrategy::Grid;
  if (name == "random") return TorusStrategy::Random;
  if (name == "kronecker") return TorusStrategy::Kronecker;
  throw ValidationError("unknown torus strategy \"" + name + "\"");
}

TorusPoint::TorusPoint(std::vector<std::complex<double>> coords) : coords_(std::move(coords)) {
  for (const auto& z : coords_) {
    if (!(std::abs(std::abs(z) - 1.0) <= kTolerance)) {
      throw ValidationError("torus coordinate is not unimodular");
    }
  }
}

NormEstimate norm_upper_l1(const DirichletPolynomial& f) {
  return {l1_norm(f), NormKind::L1UpperBound, 0, {}};
}

NormEstimate norm_upper_l1(const MultiPoly& F) {
  return {l1_norm(F), NormKind::L1UpperBound, 0, {}};
}

NormEstimate norm_est_vertical(const DirichletPolynomial& f, double sigma_min, double t_max,
                               std::uint64_t samples, std::uint64_t seed) {
  if (!(sigma_min > 0.0)) throw ValidationError("sigmaMin must be positive");
  if (!(t_max > 0.0)) throw ValidationError("tMax must be positive");
  if (samples < 1) throw ValidationError("vertical estimate needs at least one sample");

  std::vector<double> sigmas;
  for (double s = 1.0; s > sigma_min; s *= 0.5) sigmas.push_back(s);
  sigmas.push_back(sigma_min);
  const std::size_t coarse_levels = sigmas.size() - 1;

  std::vector<double> logs;
  std::vector<std::complex<double>> coeffs;
  for (const auto& [n, c] : f.terms()) {
    logs.push_back(log_of(n));
    coeffs.push_back(c.to_complex());
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  NormEstimate best{-1.0, NormKind::LowerBoundSample, samples, {}};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double u_level = unit(rng);
    const double u_jitter = unit(rng);
    double sigma = sigma_min;
    if (coarse_levels > 0 && u_level >= 0.75) {
      const auto k = static_cast<std::size_t>((u_level - 0.75) * 4.0 * coarse_levels);
      sigma = sigmas[std::min(k, coarse_levels - 1)];
    }
    const double cell = i == 0 ? 1.0 : std::ldexp(1.0, -(std::bit_width(i)));
    double u = radical_inverse2(i) + u_jitter * cell;
    u -= std::floor(u);
    const double t = -t_max + 2.0 * t_max * u;

    std::complex<double> sum{};
    for (std::size_t k = 0; k < logs.size(); ++k) {
      sum += coeffs[k] * std::polar(std::exp(-sigma * logs[k]), -t * logs[k]);
    }
    const double value = std::abs(sum);
    if (value > best.value) {
      best.value = value;
      best.argmax = {{sigma, t}};
    }
  }
  return best;
}

NormEstimate norm_est_torus(const MultiPoly& F, TorusStrategy strategy, std::uint64_t count,
                            std::uint64_t seed, const TorusOptions& options) {
  if (count < 1) throw ValidationError("torus estimate needs count >= 1");
  const std::uint32_t m = F.max_var();
  if (m < 1) throw ValidationError("torus estimate needs a non-constant polynomial");

  NormEstimate best{-1.0, NormKind::LowerBoundSample, 0, {}};
  std::vector<std::complex<double>> z(m);
  auto consider = [&] {
    const double value = std::abs(evaluate_unchecked(F, z));
    ++best.samples;
    if (value > best.value) {
      best.value = value;
      best.argmax = z;
    }
  };

  switch (strategy) {
    case TorusStrategy::Grid: {
      // Smallest per-axis count c with c^m >= count, capped by the budget.
      std::uint64_t per_axis = 1;
      auto total_for = [m](std::uint64_t c, std::uint64_t cap) {
        std::uint64_t total = 1;
        for (std::uint32_t j = 0; j < m; ++j) {
          if (total > cap / c) return cap + 1;
          total *= c;
        }
        return total;
      };
      while (total_for(per_axis, count) < count) ++per_axis;
      const std::uint64_t total = total_for(per_axis, options.grid_budget);
      if (total > options.grid_budget) {
        throw BudgetError("torus grid of " + std::to_string(per_axis) + "^" + std::to_string(m) +
                          " points exceeds the grid budget");
      }
      std::vector<std::complex<double>> roots(per_axis);
      for (std::uint64_t r = 0; r < per_axis; ++r) {
        roots[r] = std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(per_axis));
      }
      std::vector<std::uint64_t> idx(m, 0);
      for (std::uint64_t p = 0; p < total; ++p) {
        for (std::uint32_t j = 0; j < m; ++j) z[j] = roots[idx[j]];
        consider();
        for (std::uint32_t j = 0; j < m; ++j) {
          if (++idx[j] < per_axis) break;
          idx[j] = 0;
        }
      }
      break;
    }
    case TorusStrategy::Random: {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> angle(0.0, kTwoPi);
      for (std::uint64_t i = 0; i < count; ++i) {
        for (auto& zj : z) zj = std::polar(1.0, angle(rng));
        consider();
      }
      break;
    }
    case TorusStrategy::Kronecker: {
      std::mt19937_64 rng(seed);
      const double offset = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const auto logs = log_primes(m);
      for (std::uint64_t i = 0; i < count; ++i) {
        const double t = (static_cast<double>(i) + offset) * options.kronecker_step;
        for (std::uint32_t j = 0; j < m; ++j) z[j] = std::polar(1.0, -t * logs[j]);
        consider();
      }
      break;
    }
  }
  return best;
}

std::vector<TorusPoint> kronecker_orbit(std::uint32_t m, std::span<const double> t_values) {
  if (m < 1) throw ValidationError("Kronecker orbit needs m >= 1");
  const auto logs = log_primes(m);
  std::vector<TorusPoint> out;
  out.reserve(t_values.size());
  std::vector<std::complex<double>> z(m);
  for (const double t : t_values) {
    for (std::uint32_t j = 0; j < m; ++j) z[j] = std::polar(1.0, -t * logs[j]);
    out.emplace_back(z);
  }
  return out;
}

double orbit_distance(std::span<const double> log_primes, const TorusPoint& target, double t) {
  double d = 0.0;
  for (std::size_t j = 0; j < log_primes.size(); ++j) {
    d = std::max(d, std::abs(std::polar(1.0, -t * log_primes[j]) - target.coords()[j]));
  }
  return d;
}

std::optional<double> kronecker_hit(std::uint32_t m, const TorusPoint& target, double epsilon,
                                    double t_max, std::uint64_t step_budget) {
  if (m < 1) throw ValidationError("Kronecker search needs m >= 1");
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  if (target.dimension() != m) throw ValidationError("target dimension differs from m");
  const auto logs = log_primes(m);
  const double lipschitz = logs.back();
  const double step = 0.05 / lipschitz;
  const double slack = lipschitz * step;
  auto dist = [&](double t) { return orbit_distance(logs, target, t); };

  auto refine = [&](double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = dist(c);
    double fd = dist(d);
    while (b - a > 1e-14 * std::max(1.0, b)) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = dist(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = dist(d);
      }
    }
    return 0.5 * (a + b);
  };

  double prev_t = 0.0;
  double prev_d = dist(0.0);
  if (prev_d < epsilon) {
    // The orbit starts inside the ball; halve toward 0+ until a t passes.
    for (double t = std::min(step, t_max); t > 0.0; t *= 0.5) {
      if (dist(t) < epsilon) return t;
    }
  }
  double cur_t = step;
  double cur_d = dist(cur_t);
  for (std::uint64_t k = 1; k <= step_budget && cur_t <= t_max; ++k) {
    const double next_t = cur_t + step;
    const double next_d = dist(next_t);
    const bool local_min = cur_d <= prev_d && cur_d <= next_d;
    if (local_min && cur_d < epsilon + slack) {
      const double lo = std::max(prev_t, 0.5 * step);
      const double hi = std::min(next_t, t_max);
      const double t = refine(lo, hi);
      const double best_t = dist(t) <= cur_d ? t : cur_t;
      if (dist(best_t) < epsilon) return best_t;
    } else if (cur_d < epsilon) {
      return cur_t;
    }
    prev_t = cur_t;
    prev_d = cur_d;
    cur_t = next_t;
    cur_d = next_d;
  }
  return std::nullopt;
}

double covering_radius(std::span<const TorusPoint> points, std::uint32_t ref_per_dim) {
  if (points.empty()) return std::numbers::pi;
  if (ref_per_dim < 1) throw ValidationError("reference grid needs at least one node per axis");
  const std::size_t m = points.front().dimension();
  std::vector<std::vector<double>> angles;
  angles.reserve(points.size());
  for (const auto& p : points) {
    if (p.dimension() != m) throw ValidationError("mixed torus dimensions");
    std::vector<double> a(m);
    for (std::size_t j = 0; j < m; ++j) a[j] = std::arg(p.coords()[j]);
    angles.push_back(std::move(a));
  }
  auto wrapped = [](double x) {
    x = std::fmod(std::abs(x), kTwoPi);
    return std::min(x, kTwoPi - x);
  };

  std::uint64_t nodes = 1;
  for (std::size_t j = 0; j < m; ++j) nodes *= ref_per_dim;
  std::vector<std::uint32_t> idx(m, 0);
  std::vector<double> node(m);
  double radius = 0.0;
  for (std::uint64_t q = 0; q < nodes; ++q) {
    for (std::size_t j = 0; j < m; ++j) {
      node[j] = -std::numbers::pi + kTwoPi * (idx[j] + 0.5) / ref_per_dim;
    }
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& a : angles) {
      double d = 0.0;
      for (std::size_t j = 0; j < m && d < nearest; ++j) d = std::max(d, wrapped(a[j] - node[j]));
      nearest = std::min(nearest, d);
    }
    radius = std::max(radius, nearest);
    for (std::size_t j = 0; j < m; ++j) {
      if (++idx[j] < ref_per_dim) break;
      idx[j] = 0;
    }
  }
  return radius;
}

}  // namespace bohrkit
