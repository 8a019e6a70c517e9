#include "bohrkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "bohrkit/bohr.hpp"
#include "bohrkit/config.hpp"
#include "bohrkit/errors.hpp"
#include "bohrkit/norms.hpp"
#include "bohrkit/serialize.hpp"
#include "bohrkit/syzygy.hpp"
#include "bohrkit/witness.hpp"

namespace bohrkit::cli {

namespace {

struct Flags {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string in;
  std::string rhs;
  std::string out;
  bool csv = false;
  std::string s = "0";
  std::string z;
  std::string strategy = "grid";
  std::uint64_t count = 4096;
  double tmax = 1e4;
  double sigma_min = 1e-3;
  std::uint32_t n = 1;
  std::uint32_t m = 0;
  std::uint32_t ell = 0;
  std::uint32_t deg = 1;
  std::uint32_t cap = 0;
  std::string h;
  std::string tuple;
  std::string candidate;
  std::string gens;
  std::string target;
  double eps = 1e-2;
  double step = 0.25;
  std::uint32_t ref = 8;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return parse_json_text(read_file(path), path); }

std::string num(double x) { return Json(x).dump(); }

struct Polynomial {
  bool dirichlet = true;
  DirichletPolynomial dp;
  MultiPoly mp;
};

Polynomial poly_from(const Json& j, const std::string& where) {
  Polynomial p;
  p.dirichlet = looks_dirichlet(j);
  if (p.dirichlet) {
    p.dp = dp_from_json(j, where);
  } else {
    p.mp = mp_from_json(j, where);
  }
  return p;
}

MultiPoly as_multi(const PrimeTable& primes, const Polynomial& p) {
  return p.dirichlet ? lift(primes, p.dp) : p.mp;
}

DirichletPolynomial as_dirichlet(const PrimeTable& primes, const Polynomial& p) {
  return p.dirichlet ? p.dp : unlift(primes, p.mp);
}

std::vector<MultiPoly> multi_list(const PrimeTable& primes, const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of polynomials");
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_multi(primes, poly_from(j[i], where + "[" + std::to_string(i) + "]")));
  }
  return out;
}

Json json_list(const std::vector<DirichletPolynomial>& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(to_json(f));
  return a;
}

Json json_list(const std::vector<MultiPoly>& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(to_json(f));
  return a;
}

Json complex_list(std::span<const std::complex<double>> v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(complex_to_json(z));
  return a;
}

void csv_complex_header(std::ostream& os, const std::string& stem, std::size_t count) {
  for (std::size_t j = 1; j <= count; ++j) os << ',' << stem << j << "_re," << stem << j << "_im";
}

void csv_complex_row(std::ostream& os, std::span<const std::complex<double>> v) {
  for (const auto& z : v) os << ',' << num(z.real()) << ',' << num(z.imag());
}

class Runner {
 public:
  Runner(const Flags& flags, const RunConfig& config, std::ostream& out)
      : flags_(flags), config_(config), out_(out), primes_(config.prime_table_limit) {}

  void lift_cmd() {
    const Polynomial p = poly_from(read_json(flags_.in), flags_.in);
    if (!p.dirichlet) throw ValidationError(flags_.in + ": lift expects a Dirichlet polynomial");
    emit(to_json(lift(primes_, p.dp)));
  }

  void unlift_cmd() {
    const Polynomial p = poly_from(read_json(flags_.in), flags_.in);
    if (p.dirichlet && !p.dp.is_zero()) {
      throw ValidationError(flags_.in + ": unlift expects a multivariate polynomial");
    }
    emit(to_json(unlift(primes_, p.mp)));
  }

  void mul_cmd() {
    const Polynomial a = poly_from(read_json(flags_.in), flags_.in);
    const Polynomial b = poly_from(read_json(flags_.rhs), flags_.rhs);
    if (a.dirichlet && b.dirichlet) {
      emit(to_json(a.dp * b.dp));
    } else {
      emit(to_json(as_multi(primes_, a) * as_multi(primes_, b)));
    }
  }

  void eval_cmd() {
    const Polynomial p = poly_from(read_json(flags_.in), flags_.in);
    std::complex<double> value;
    if (p.dirichlet && flags_.z.empty()) {
      value = evaluate(p.dp, parse_complex(flags_.s));
    } else {
      value = evaluate(as_multi(primes_, p), EvalPoint(parse_complex_list(flags_.z)));
    }
    if (flags_.csv) {
      out_ << "re,im\n" << num(value.real()) << ',' << num(value.imag()) << '\n';
    } else {
      Json j;
      j["value"] = complex_to_json(value);
      emit(j);
    }
  }

  void norm_cmd() {
    const Polynomial p = poly_from(read_json(flags_.in), flags_.in);
    std::vector<std::pair<std::string, NormEstimate>> rows;
    std::stringstream names(flags_.strategy);
    for (std::string name; std::getline(names, name, ',');) {
      if (name == "l1") {
        rows.emplace_back(name, p.dirichlet ? norm_upper_l1(p.dp) : norm_upper_l1(p.mp));
      } else if (name == "vertical") {
        rows.emplace_back(name, norm_est_vertical(as_dirichlet(primes_, p), flags_.sigma_min,
                                                  flags_.tmax, flags_.count, seed()));
      } else {
        TorusOptions options;
        options.grid_budget = config_.budgets.grid_points;
        options.kronecker_step = flags_.step;
        rows.emplace_back(name, norm_est_torus(as_multi(primes_, p), parse_torus_strategy(name),
                                               flags_.count, seed(), options));
      }
    }
    if (flags_.csv) {
      std::size_t width = 0;
      for (const auto& [name, est] : rows) width = std::max(width, est.argmax.size());
      out_ << "# seed=" << seed() << '\n' << "strategy,kind,samples,estimate";
      csv_complex_header(out_, "argmax", width);
      out_ << '\n';
      for (const auto& [name, est] : rows) {
        out_ << name << ',' << to_string(est.kind) << ',' << est.samples << ',' << num(est.value);
        csv_complex_row(out_, est.argmax);
        for (std::size_t k = est.argmax.size(); k < width; ++k) out_ << ",,";
        out_ << '\n';
      }
      return;
    }
    Json j;
    j["seed"] = seed();
    Json list = Json::array();
    for (const auto& [name, est] : rows) {
      Json r;
      r["strategy"] = name;
      r["kind"] = to_string(est.kind);
      r["samples"] = est.samples;
      r["estimate"] = est.value;
      r["argmax"] = complex_list(est.argmax);
      list.push_back(std::move(r));
    }
    j["estimates"] = std::move(list);
    emit(j);
  }

  // Returns false when the search budget ran out.
  bool kronecker_cmd() {
    if (flags_.m < 1) throw ValidationError("kronecker needs --m >= 1");
    if (flags_.target.empty()) {
      std::vector<double> ts(flags_.count);
      for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = static_cast<double>(i) * flags_.step;
      const auto orbit = kronecker_orbit(flags_.m, ts);
      const double radius = covering_radius(orbit, flags_.ref);
      if (flags_.csv) {
        out_ << "# coveringRadius=" << num(radius) << '\n' << "t,distance";
        csv_complex_header(out_, "z", flags_.m);
        out_ << '\n';
        for (std::size_t i = 0; i < ts.size(); ++i) {
          out_ << num(ts[i]) << ',';
          csv_complex_row(out_, orbit[i].coords());
          out_ << '\n';
        }
        return true;
      }
      Json points = Json::array();
      for (std::size_t i = 0; i < ts.size(); ++i) {
        points.push_back({{"t", ts[i]}, {"coords", complex_list(orbit[i].coords())}});
      }
      Json j;
      j["m"] = flags_.m;
      j["coveringRadius"] = radius;
      j["referenceGridPerAxis"] = flags_.ref;
      j["points"] = std::move(points);
      emit(j);
      return true;
    }
    const TorusPoint target(parse_complex_list(flags_.target));
    const auto t = kronecker_hit(flags_.m, target, flags_.eps, flags_.tmax,
                                 config_.budgets.orbit_steps);
    if (!t) return false;
    const double tv = *t;
    const auto point = kronecker_orbit(flags_.m, std::span<const double>(&tv, 1)).front();
    std::vector<double> logs;
    for (const auto p : first_primes(flags_.m)) logs.push_back(std::log(static_cast<double>(p)));
    const double distance = orbit_distance(logs, target, *t);
    if (flags_.csv) {
      out_ << "t,distance";
      csv_complex_header(out_, "z", flags_.m);
      out_ << '\n' << num(*t) << ',' << num(distance);
      csv_complex_row(out_, point.coords());
      out_ << '\n';
      return true;
    }
    Json j;
    j["m"] = flags_.m;
    j["epsilon"] = flags_.eps;
    j["t"] = *t;
    j["coords"] = complex_list(point.coords());
    j["distance"] = distance;
    emit(j);
    return true;
  }

  void section_check_cmd() {
    const Polynomial p = poly_from(read_json(flags_.in), flags_.in);
    const auto report = section_gap_check(primes_, as_dirichlet(primes_, p), flags_.m, flags_.ell,
                                          flags_.count, seed());
    if (flags_.csv) {
      out_ << "# seed=" << seed() << "\nsamples,violations,worstMargin\n"
           << report.samples << ',' << report.violations << ',' << num(report.worst_margin) << '\n';
      return;
    }
    Json j;
    j["seed"] = seed();
    j["samples"] = report.samples;
    j["violations"] = report.violations;
    j["worstMargin"] = report.worst_margin;
    emit(j);
  }

  void witness_cmd() {
    const auto cert = witness_certificate(primes_, flags_.n);
    Json j;
    j["n"] = flags_.n;
    j["tuple"] = json_list(cert.tuple);
    j["expansion"] = json_list(expand_cofactors(primes_, flags_.n));
    j["cofactors"] = json_list(cert.cofactors);
    j["residual"] = to_json(cert.residual);
    j["valid"] = verify_bezout(cert);
    emit(j);
  }

  void fixedpoint_cmd() {
    Json hj = read_json(flags_.h);
    if (hj.is_object() && hj.contains("h")) hj = hj["h"];
    const auto h = multi_list(primes_, hj, flags_.h);
    FixedPointOptions options;
    options.tol = flags_.tol.value_or(config_.tolerances.fixedpoint);
    options.seed = seed();
    const auto report = obstruction_report(primes_, flags_.n, h, options);
    Json j;
    j["seed"] = seed();
    j["n"] = report.n;
    j["zStar"] = complex_list(report.z_star);
    j["phiResidual"] = report.phi_residual;
    j["phiResiduals"] = report.phi_residuals;
    j["eqResiduals"] = report.eq_residuals;
    j["eqBound"] = report.eq_bound;
    j["inOpenPolydisk"] = report.in_open_polydisk;
    j["certified"] = obstruction_certified(report);
    j["method"] = report.method;
    j["startIndex"] = report.start_index;
    j["iterations"] = report.iterations;
    emit(j);
  }

  void syzygy_cmd() {
    if (flags_.tuple.empty()) throw ValidationError("syzygy needs --tuple");
    const auto f = multi_list(primes_, read_json(flags_.tuple), flags_.tuple);
    SyzygyOptions options;
    options.matrix_budget = config_.budgets.matrix_cells;
    const auto basis = relation_kernel(f, flags_.deg, flags_.m, options);
    Json j;
    j["truncation"] = "degree-capped slice over Q(i); finite generation here says nothing "
                      "about the relation module in H^inf";
    j["degreeCap"] = basis.degree_cap;
    j["numVars"] = basis.num_vars;
    j["dimension"] = basis.dimension;
    j["tuple"] = json_list(basis.tuple);
    Json vectors = Json::array();
    for (const auto& v : basis.basis) vectors.push_back(json_list(v.components));
    j["basis"] = std::move(vectors);
    emit(j);
  }

  void member_cmd() {
    auto relation = [&](const Json& j, const std::string& where) {
      return RelationVector{multi_list(primes_, j, where)};
    };
    const auto candidate = relation(read_json(flags_.candidate), flags_.candidate);
    const Json gj = read_json(flags_.gens);
    if (!gj.is_array()) throw ValidationError(flags_.gens + ": expected an array of relations");
    std::vector<RelationVector> gens;
    for (std::size_t t = 0; t < gj.size(); ++t) {
      gens.push_back(relation(gj[t], flags_.gens + "[" + std::to_string(t) + "]"));
    }
    SyzygyOptions options;
    options.matrix_budget = config_.budgets.matrix_cells;
    const auto result = membership_test(candidate, gens, flags_.cap, flags_.m, options);
    Json j;
    j["member"] = result.member;
    if (result.member) j["multipliers"] = json_list(result.multipliers);
    emit(j);
  }

  void require_json_only(const std::string& name) const {
    if (flags_.csv) throw ValidationError(name + " has no CSV form");
  }

 private:
  std::uint64_t seed() const { return flags_.seed.value_or(config_.seed); }
  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  const Flags& flags_;
  const RunConfig& config_;
  std::ostream& out_;
  PrimeTable primes_;
};

bool same_file(const std::string& a, const std::string& b) {
  std::error_code ec;
  return !a.empty() && !b.empty() && std::filesystem::exists(a, ec) &&
         std::filesystem::exists(b, ec) && std::filesystem::equivalent(a, b, ec);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"bohrkit: bounded Dirichlet series and the Bohr lift"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", f.config, "JSON config file (default: $BOHRKIT_CONFIG)");
  app.add_option("--seed", f.seed, "seed for randomized procedures");
  app.add_option("--out", f.out, "write results to this file instead of stdout");
  app.add_flag("--csv", f.csv, "emit CSV instead of JSON");

  auto* lift_sc = app.add_subcommand("lift", "Dirichlet polynomial -> polydisk polynomial");
  lift_sc->add_option("--in", f.in)->required();
  auto* unlift_sc = app.add_subcommand("unlift", "polydisk polynomial -> Dirichlet polynomial");
  unlift_sc->add_option("--in", f.in)->required();
  auto* mul_sc = app.add_subcommand("mul", "exact product of two polynomials");
  mul_sc->add_option("--in", f.in)->required();
  mul_sc->add_option("--rhs", f.rhs)->required();
  auto* eval_sc = app.add_subcommand("eval", "evaluate at s (Dirichlet) or at z (polydisk)");
  eval_sc->add_option("--in", f.in)->required();
  eval_sc->add_option("--s", f.s, "complex s, e.g. 1+0i");
  eval_sc->add_option("--z", f.z, "comma-separated complex coordinates z_1,z_2,...");
  auto* norm_sc = app.add_subcommand("norm", "sup-norm bounds");
  norm_sc->add_option("--in", f.in)->required();
  norm_sc->add_option("--strategy", f.strategy, "comma list of l1|vertical|grid|random|kronecker");
  norm_sc->add_option("--count", f.count, "samples (vertical) or points (torus)");
  norm_sc->add_option("--tmax", f.tmax);
  norm_sc->add_option("--sigma-min", f.sigma_min);
  norm_sc->add_option("--step", f.step, "t spacing for the kronecker strategy");
  auto* kron_sc = app.add_subcommand("kronecker", "orbit samples or a density hit search");
  kron_sc->add_option("--m", f.m)->required();
  kron_sc->add_option("--target", f.target, "comma-separated unimodular target; enables search");
  kron_sc->add_option("--eps", f.eps);
  kron_sc->add_option("--tmax", f.tmax);
  kron_sc->add_option("--count", f.count, "orbit points when no target is given");
  kron_sc->add_option("--step", f.step);
  kron_sc->add_option("--ref", f.ref, "reference grid nodes per axis for the covering radius");
  auto* sec_sc = app.add_subcommand("section-check", "sampled section-gap bound check");
  sec_sc->add_option("--in", f.in)->required();
  sec_sc->add_option("--m", f.m)->required();
  sec_sc->add_option("--l", f.ell)->required();
  sec_sc->add_option("--count", f.count);
  auto* wit_sc = app.add_subcommand("witness", "witness tuple with its Bezout certificate");
  wit_sc->add_option("--n", f.n)->required();
  auto* fp_sc = app.add_subcommand("fixedpoint", "fixed point of Phi and the obstruction residuals");
  fp_sc->set_help_flag("--help", "Print this help message and exit");
  fp_sc->add_option("--n", f.n)->required();
  fp_sc->add_option("--h", f.h, "JSON array of n polynomials")->required();
  fp_sc->add_option("--tol", f.tol);
  auto* syz_sc = app.add_subcommand("syzygy", "degree-capped relation module");
  syz_sc->add_option("--tuple", f.tuple, "JSON array of polynomials");
  syz_sc->add_option("--deg", f.deg);
  syz_sc->add_option("--m", f.m, "number of variables (at least the largest used)");
  auto* member_sc = syz_sc->add_subcommand("member", "is a relation in the span of generators?");
  member_sc->add_option("--candidate", f.candidate)->required();
  member_sc->add_option("--gens", f.gens)->required();
  member_sc->add_option("--cap", f.cap);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitValidation;
  }

  try {
    const RunConfig config = load_config(f.config);
    for (const auto* input : {&f.in, &f.rhs, &f.h, &f.tuple, &f.candidate, &f.gens}) {
      if (same_file(f.out, *input)) throw ValidationError("--out would overwrite input " + *input);
    }
    std::ofstream file;
    std::stringstream buffer;
    Runner runner(f, config, buffer);
    bool found = true;
    if (lift_sc->parsed()) {
      runner.require_json_only("lift");
      runner.lift_cmd();
    } else if (unlift_sc->parsed()) {
      runner.require_json_only("unlift");
      runner.unlift_cmd();
    } else if (mul_sc->parsed()) {
      runner.require_json_only("mul");
      runner.mul_cmd();
    } else if (eval_sc->parsed()) {
      runner.eval_cmd();
    } else if (norm_sc->parsed()) {
      runner.norm_cmd();
    } else if (kron_sc->parsed()) {
      found = runner.kronecker_cmd();
    } else if (sec_sc->parsed()) {
      runner.section_check_cmd();
    } else if (wit_sc->parsed()) {
      runner.require_json_only("witness");
      runner.witness_cmd();
    } else if (fp_sc->parsed()) {
      runner.require_json_only("fixedpoint");
      runner.fixedpoint_cmd();
    } else if (member_sc->parsed()) {
      runner.require_json_only("syzygy member");
      runner.member_cmd();
    } else if (syz_sc->parsed()) {
      runner.require_json_only("syzygy");
      runner.syzygy_cmd();
    }
    if (!found) {
      err << "error: no hit within the step budget / tmax\n";
      return kExitBudget;
    }
    if (f.out.empty()) {
      out << buffer.str();
    } else {
      file.open(f.out, std::ios::binary);
      if (!file) throw ValidationError("cannot write " + f.out);
      file << buffer.str();
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bohrkit::cli
