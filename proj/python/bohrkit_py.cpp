#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bohrkit/bohr.hpp"
#include "bohrkit/errors.hpp"
#include "bohrkit/norms.hpp"
#include "bohrkit/serialize.hpp"
#include "bohrkit/syzygy.hpp"
#include "bohrkit/witness.hpp"

namespace py = pybind11;
using namespace bohrkit;

namespace {

const PrimeTable& primes() {
  static const PrimeTable table;
  return table;
}

py::dict report_dict(const FixedPointReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["z_star"] = r.z_star;
  d["phi_residual"] = r.phi_residual;
  d["phi_residuals"] = r.phi_residuals;
  d["eq_residuals"] = r.eq_residuals;
  d["eq_bound"] = r.eq_bound;
  d["in_open_polydisk"] = r.in_open_polydisk;
  d["start_index"] = r.start_index;
  d["iterations"] = r.iterations;
  d["method"] = r.method;
  return d;
}

py::dict estimate_dict(const NormEstimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["kind"] = to_string(e.kind);
  d["samples"] = e.samples;
  d["argmax"] = e.argmax;
  return d;
}

FixedPointOptions fp_options(double tol, std::uint64_t seed) {
  FixedPointOptions o;
  o.tol = tol;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_bohrkit, m) {
  m.doc() = "Exact Dirichlet polynomials, the Bohr lift, and witness computations";

  // ValidationError derives from std::invalid_argument and surfaces as ValueError.
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<DirichletPolynomial>(m, "DirichletPolynomial")
      .def(py::init<>())
      .def_static("from_json", &parse_dp, py::arg("text"))
      .def("to_json", &emit_dp)
      .def("__call__", [](const DirichletPolynomial& f, std::complex<double> s) { return evaluate(f, s); })
      .def("l1_norm", [](const DirichletPolynomial& f) { return l1_norm(f); })
      .def("__len__", &DirichletPolynomial::size)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const DirichletPolynomial& f) { return "DirichletPolynomial(" + emit_dp(f) + ")"; });

  py::class_<MultiPoly>(m, "MultiPoly")
      .def(py::init<>())
      .def_static("from_json", &parse_mp, py::arg("text"))
      .def_static("variable", &MultiPoly::variable, py::arg("j"))
      .def("to_json", &emit_mp)
      .def("__call__", [](const MultiPoly& F, std::vector<std::complex<double>> z) {
        return evaluate(F, EvalPoint(std::move(z)));
      })
      .def("max_var", &MultiPoly::max_var)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const MultiPoly& F) { return "MultiPoly(" + emit_mp(F) + ")"; });

  m.def("lift", [](const DirichletPolynomial& f) { return lift(primes(), f); });
  m.def("unlift", [](const MultiPoly& F) { return unlift(primes(), F); });
  m.def("section", &section, py::arg("F"), py::arg("m"));
  m.def("section_gap_check",
        [](const DirichletPolynomial& f, std::uint32_t mm, std::uint32_t ell, std::uint64_t count,
           std::uint64_t seed) {
          const auto r = section_gap_check(primes(), f, mm, ell, count, seed);
          py::dict d;
          d["samples"] = r.samples;
          d["violations"] = r.violations;
          d["worst_margin"] = r.worst_margin;
          return d;
        },
        py::arg("f"), py::arg("m"), py::arg("ell"), py::arg("samples") = 1000, py::arg("seed") = 0);

  m.def("witness_tuple", [](std::uint32_t n) { return make_witness_tuple(primes(), n).entries; });
  m.def("expand_cofactors", [](std::uint32_t n) { return expand_cofactors(primes(), n); });
  m.def("verify_bezout",
        [](std::vector<DirichletPolynomial> tuple, std::vector<DirichletPolynomial> cofactors) {
          return verify_bezout(make_certificate(std::move(tuple), std::move(cofactors)));
        });
  m.def("witness_certified", [](std::uint32_t n) { return verify_bezout(witness_certificate(primes(), n)); });

  m.def("find_fixed_point",
        [](const std::vector<MultiPoly>& h, double tol, std::uint64_t seed) {
          return report_dict(find_fixed_point(h, fp_options(tol, seed)));
        },
        py::arg("h"), py::arg("tol") = 1e-8, py::arg("seed") = 0);
  m.def("obstruction_report",
        [](std::uint32_t n, const std::vector<MultiPoly>& h, double tol, std::uint64_t seed) {
          const auto r = obstruction_report(primes(), n, h, fp_options(tol, seed));
          py::dict d = report_dict(r);
          d["certified"] = obstruction_certified(r);
          return d;
        },
        py::arg("n"), py::arg("h"), py::arg("tol") = 1e-8, py::arg("seed") = 0);

  m.def("norm_upper_l1", [](const DirichletPolynomial& f) { return estimate_dict(norm_upper_l1(f)); });
  m.def("norm_est_vertical",
        [](const DirichletPolynomial& f, double sigma_min, double t_max, std::uint64_t samples,
           std::uint64_t seed) { return estimate_dict(norm_est_vertical(f, sigma_min, t_max, samples, seed)); },
        py::arg("f"), py::arg("sigma_min") = 1e-3, py::arg("t_max") = 1e4, py::arg("samples") = 4096,
        py::arg("seed") = 0);
  m.def("norm_est_torus",
        [](const MultiPoly& F, const std::string& strategy, std::uint64_t count, std::uint64_t seed) {
          return estimate_dict(norm_est_torus(F, parse_torus_strategy(strategy), count, seed));
        },
        py::arg("F"), py::arg("strategy") = "grid", py::arg("count") = 4096, py::arg("seed") = 0);
  m.def("kronecker_hit",
        [](std::vector<std::complex<double>> target, double eps, double t_max,
           std::uint64_t budget) -> std::optional<double> {
          const auto mm = static_cast<std::uint32_t>(target.size());
          return kronecker_hit(mm, TorusPoint(std::move(target)), eps, t_max, budget);
        },
        py::arg("target"), py::arg("eps") = 1e-2, py::arg("t_max") = 1e6, py::arg("budget") = 50'000'000);

  m.def("relation_kernel",
        [](const std::vector<MultiPoly>& f, std::uint32_t d, std::uint32_t num_vars) {
          const auto b = relation_kernel(f, d, num_vars);
          std::vector<std::vector<MultiPoly>> basis;
          for (const auto& v : b.basis) basis.push_back(v.components);
          return basis;
        },
        py::arg("f"), py::arg("d"), py::arg("num_vars") = 0);
  m.def("is_member",
        [](const std::vector<MultiPoly>& candidate, const std::vector<std::vector<MultiPoly>>& gens,
           std::uint32_t cap) {
          std::vector<RelationVector> g;
          for (const auto& v : gens) g.push_back({v});
          return membership_test({candidate}, g, cap).member;
        },
        py::arg("candidate"), py::arg("generators"), py::arg("cap"));
}
