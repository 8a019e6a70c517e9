#include <doctest.h>

#include <cmath>
#include <random>

#include "bohrkit/bohr.hpp"
#include "bohrkit/errors.hpp"
#include "bohrkit/witness.hpp"
#include "generators.hpp"
#include "helpers.hpp"

using namespace bohrkit;
using th::dp;
using th::z;

namespace {

const PrimeTable& table() {
  static const PrimeTable pt;
  return pt;
}

MultiPoly half() { return MultiPoly::constant(CoefficientQ(mpq_class(1, 2))); }

// Random h_j in variables 1..2n, total degree <= 2 and coefficients in [-1, 1].
std::vector<MultiPoly> random_h(std::mt19937_64& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::vector<MultiPoly> h(n);
  const auto monos = monomials_up_to(2 * n, 2);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (auto& hj : h) {
    for (int t = 0; t < 3; ++t) hj.add_term(monos[pick(rng)], CoefficientQ(mpq_class(num(rng), 8)));
  }
  return h;
}

}  // namespace

TEST_SUITE("witness") {
  TEST_CASE("tuples") {
    const auto w1 = make_witness_tuple(table(), 1);
    REQUIRE(w1.entries.size() == 2);
    CHECK(w1.entries[0] == dp({{2, 1}}));
    CHECK(w1.g() == dp({{1, 1}, {6, -1}}));
    const auto w2 = make_witness_tuple(table(), 2);
    REQUIRE(w2.entries.size() == 3);
    CHECK(w2.entries[1] == dp({{3, 1}}));
    CHECK(w2.g() == dp({{1, 1}, {10, -1}, {21, -1}, {210, 1}}));
    CHECK(w2.g().size() == 4);
    CHECK_THROWS_AS(make_witness_tuple(table(), 0), ValidationError);
  }

  TEST_CASE("g expands to 2^n terms with unit coefficients") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const auto g = make_witness_tuple(table(), n).g();
      CHECK(g.size() == (std::size_t{1} << n));
      for (const auto& [m, c] : g.terms()) CHECK((c == CoefficientQ(1) || c == CoefficientQ(-1)));
    }
  }

  TEST_CASE("cofactor examples") {
    const auto c1 = expand_cofactors(table(), 1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == dp({{3, -1}}));
    const auto c2 = expand_cofactors(table(), 2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == dp({{5, -1}, {105, 1}}));
    CHECK(c2[1] == dp({{7, -1}}));
  }

  TEST_CASE("expansion identity and certificates for n = 1..6") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      CAPTURE(n);
      const auto w = make_witness_tuple(table(), n);
      const auto gs = expand_cofactors(table(), n);
      auto sum = DirichletPolynomial::one();
      for (std::uint32_t j = 0; j < n; ++j) sum += w.entries[j] * gs[j];
      CHECK(sum == w.g());
      const auto cert = witness_certificate(table(), n);
      CHECK(cert.residual.is_zero());
      CHECK(verify_bezout(cert));
    }
  }

  TEST_CASE("verify_bezout") {
    const auto w = make_witness_tuple(table(), 1);
    CHECK(verify_bezout(make_certificate(w.entries, {dp({{3, 1}}), dp({{1, 1}})})));
    const auto zero = make_certificate(w.entries, {DirichletPolynomial(), DirichletPolynomial()});
    CHECK_FALSE(verify_bezout(zero));
    CHECK(zero.residual == dp({{1, -1}}));
    // a tampered stored residual does not fool the check
    auto forged = zero;
    forged.residual = DirichletPolynomial();
    CHECK_FALSE(verify_bezout(forged));
    CHECK_THROWS_AS(make_certificate(w.entries, {dp({{1, 1}})}), ValidationError);
  }

  TEST_CASE("phi examples") {
    const std::vector<MultiPoly> zero_h(2);
    const std::vector<std::complex<double>> pt{{0.3, 0.1}, {-0.2, 0.5}};
    for (const auto& v : phi_map(zero_h, pt)) CHECK(v == std::complex<double>(0, 0));

    const std::vector<MultiPoly> h{half()};
    const std::vector<std::complex<double>> origin{0.0};
    CHECK(std::abs(phi_map(h, origin)[0] + 0.5) < 1e-15);
    const std::vector<std::complex<double>> outside{1.5};
    CHECK(phi_map(h, outside)[0] == std::complex<double>(0, 0));
    const std::vector<MultiPoly> wide{z(3)};
    CHECK_THROWS_AS(phi_map(wide, origin), ValidationError);
  }

  TEST_CASE("phi vanishes continuously at the boundary") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 20; ++trial) {
      const auto h = random_h(rng, 2);
      const double theta0 = angle(rng), theta1 = angle(rng);
      for (double r : {0.999, 0.99999, 0.9999999}) {
        const std::vector<std::complex<double>> zz{std::polar(r, theta0), std::polar(0.5, theta1)};
        const auto v = phi_map(h, zz);
        const double factor = (1 - r * r) * (1 - 0.25);
        // |h| <= l1(h) on the closed polydisk
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(v[j]) <= factor * l1_norm(h[j]) + 1e-6);
      }
    }
  }

  TEST_CASE("fixed point examples") {
    const std::vector<MultiPoly> zero_h(1);
    const auto r0 = find_fixed_point(zero_h, {});
    CHECK(std::abs(r0.z_star[0]) < 1e-12);
    CHECK(r0.phi_residual < 1e-12);

    const std::vector<MultiPoly> h{half()};
    const auto r = find_fixed_point(h, {});
    CHECK(std::abs(r.z_star[0] - (1.0 - std::sqrt(2.0))) < 1e-10);
    CHECK(r.in_open_polydisk);

    const std::vector<MultiPoly> hz{z(1)};
    CHECK(std::abs(find_fixed_point(hz, {}).z_star[0]) < 1e-8);
  }

  TEST_CASE("negating a constant h reflects the fixed point") {
    for (int c : {1, 3, 5, 7}) {
      const std::vector<MultiPoly> pos{MultiPoly::constant(CoefficientQ(mpq_class(c, 8)))};
      const std::vector<MultiPoly> neg{MultiPoly::constant(CoefficientQ(mpq_class(-c, 8)))};
      const auto a = find_fixed_point(pos, {}).z_star[0];
      const auto b = find_fixed_point(neg, {}).z_star[0];
      CHECK(std::abs(a + b) < 1e-10);
    }
  }

  TEST_CASE("unreachable tolerance raises") {
    FixedPointOptions opts;
    opts.tol = 1e-30;
    opts.max_iter = 200;
    opts.starts = 2;
    // the residual floor sits near machine epsilon, far above 1e-30
    const std::vector<MultiPoly> h{MultiPoly::constant(CoefficientQ(mpq_class(1, 3)))};
    CHECK_THROWS_AS(find_fixed_point(h, opts), ConvergenceError);
  }

  TEST_CASE("obstruction examples") {
    const std::vector<MultiPoly> h{half()};
    const auto r = obstruction_report(table(), 1, h, {});
    CHECK(r.eq_residuals.at(0) <= 1e-10);
    CHECK(obstruction_certified(r));
    const std::vector<MultiPoly> zero_h(1);
    const auto r0 = obstruction_report(table(), 1, zero_h, {});
    CHECK(r0.eq_residuals.at(0) < 1e-12);
    CHECK_THROWS_AS(obstruction_report(table(), 2, h, {}), ValidationError);
  }

  TEST_CASE("property: residual families agree coordinate-wise") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 15; ++trial) {
      const std::uint32_t n = 1 + trial % 3;
      const auto h = random_h(rng, n);
      FixedPointOptions opts;
      opts.seed = trial;
      const auto r = obstruction_report(table(), n, h, opts);
      CHECK(r.phi_residual <= 1e-8);
      CHECK(r.in_open_polydisk);
      for (std::uint32_t j = 0; j < n; ++j) {
        CHECK(std::abs(r.eq_residuals[j] - r.phi_residuals[j]) <= 1e-10);
        CHECK(r.eq_residuals[j] <= r.eq_bound);
      }
      CHECK(obstruction_certified(r));
    }
  }

  TEST_CASE("solver is deterministic for a fixed seed") {
    std::mt19937_64 rng(73);
    const auto h = random_h(rng, 2);
    FixedPointOptions opts;
    opts.seed = 5;
    const auto a = find_fixed_point(h, opts);
    const auto b = find_fixed_point(h, opts);
    CHECK(a.z_star == b.z_star);
    CHECK(a.start_index == b.start_index);
  }
}
