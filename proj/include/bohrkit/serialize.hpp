#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "bohrkit/dirichlet.hpp"
#include "bohrkit/multipoly.hpp"

namespace bohrkit {

using Json = nlohmann::ordered_json;

// Wire forms:
//   Dirichlet: {"terms":[{"n":"6","re":"-1","im":"0"},...]}   ascending n
//   MultiPoly: {"terms":[{"exps":[[1,2],[2,1]],"re":"1","im":"0"},...]}  ascending grlex
// Integers and rationals travel as decimal strings ("p" or "p/q"); bare
// JSON integers are accepted on input. Emission is canonical, so
// emit(parse(s)) reproduces any canonical s byte for byte.

Json to_json(const DirichletPolynomial& f);
Json to_json(const MultiPoly& F);

// `where` prefixes error messages, e.g. "h[2]". Throw ValidationError.
DirichletPolynomial dp_from_json(const Json& j, const std::string& where = "$");
MultiPoly mp_from_json(const Json& j, const std::string& where = "$");

// True when j has the Dirichlet shape (terms carry "n"); an empty term list
// counts as Dirichlet.
bool looks_dirichlet(const Json& j);

DirichletPolynomial parse_dp(const std::string& text);
MultiPoly parse_mp(const std::string& text);
std::string emit_dp(const DirichletPolynomial& f);
std::string emit_mp(const MultiPoly& F);

// Parses JSON text, rethrowing syntax errors as ValidationError with the
// byte position.
Json parse_json_text(const std::string& text, const std::string& where = "input");

Json complex_to_json(std::complex<double> z);
// Parses "a", "bi", "a+bi", "a-bi", "i", "-i".
std::complex<double> parse_complex(const std::string& text);
// Comma-separated list of parse_complex items.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

}  // namespace bohrkit
