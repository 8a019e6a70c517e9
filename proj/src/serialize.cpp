#include "bohrkit/serialize.hpp"

#include <regex>

#include "bohrkit/errors.hpp"

namespace bohrkit {

namespace {

std::string scalar_text(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw ValidationError(where + ": expected a decimal string or integer");
}

CoefficientQ coefficient_from(const Json& term, const std::string& where) {
  if (!term.contains("re")) throw ValidationError(where + ": missing \"re\"");
  if (!term.contains("im")) throw ValidationError(where + ": missing \"im\"");
  auto part = [&](const char* key) {
    const std::string at = where + "." + key;
    try {
      return CoefficientQ::parse(scalar_text(term[key], at), "0").real();
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      throw ValidationError(msg.rfind(at, 0) == 0 ? msg : at + ": " + msg);
    }
  };
  return CoefficientQ(part("re"), part("im"));
}

const Json& terms_of(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  if (!j.contains("terms")) throw ValidationError(where + ": missing \"terms\"");
  const Json& terms = j["terms"];
  if (!terms.is_array()) throw ValidationError(where + ".terms: expected an array");
  return terms;
}

void fill_coefficient(Json& term, const CoefficientQ& c) {
  term["re"] = to_string(c.real());
  term["im"] = to_string(c.imag());
}

}  // namespace

Json to_json(const DirichletPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [n, c] : f.terms()) {
    Json t;
    t["n"] = n.get_str();
    fill_coefficient(t, c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const MultiPoly& F) {
  Json terms = Json::array();
  for (const auto& [e, c] : F.terms()) {
    Json t;
    Json exps = Json::array();
    for (const auto& [v, k] : e.entries()) exps.push_back(Json::array({v, k}));
    t["exps"] = std::move(exps);
    fill_coefficient(t, c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

DirichletPolynomial dp_from_json(const Json& j, const std::string& where) {
  static const std::regex kNatural(R"([0-9]+)");
  const Json& terms = terms_of(j, where);
  DirichletPolynomial f;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + ".terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    if (!t.is_object()) throw ValidationError(at + ": expected an object");
    if (!t.contains("n")) throw ValidationError(at + ": missing \"n\"");
    const std::string n_text = scalar_text(t["n"], at + ".n");
    if (!std::regex_match(n_text, kNatural)) {
      throw ValidationError(at + ".n: not a positive integer: \"" + n_text + "\"");
    }
    const mpz_class n(n_text, 10);
    if (n < 1) throw ValidationError(at + ".n: frequency must be >= 1");
    f.add_term(n, coefficient_from(t, at));
  }
  return f;
}

MultiPoly mp_from_json(const Json& j, const std::string& where) {
  const Json& terms = terms_of(j, where);
  MultiPoly F;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + ".terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    if (!t.is_object()) throw ValidationError(at + ": expected an object");
    if (!t.contains("exps") || !t["exps"].is_array()) {
      throw ValidationError(at + ": missing \"exps\" array");
    }
    std::vector<ExponentVector::Entry> entries;
    for (std::size_t q = 0; q < t["exps"].size(); ++q) {
      const Json& pair = t["exps"][q];
      const std::string pat = at + ".exps[" + std::to_string(q) + "]";
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned()) {
        throw ValidationError(pat + ": expected [varIndex, exponent] of non-negative integers");
      }
      const auto var = pair[0].get<std::uint64_t>();
      const auto exp = pair[1].get<std::uint64_t>();
      if (var < 1 || var > 0xFFFFFFFFULL || exp > 0xFFFFFFFFULL) {
        throw ValidationError(pat + ": variable index must be in 1..2^32-1");
      }
      entries.emplace_back(static_cast<std::uint32_t>(var), static_cast<std::uint32_t>(exp));
    }
    try {
      F.add_term(ExponentVector(std::move(entries)), coefficient_from(t, at));
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      throw ValidationError(msg.rfind(at, 0) == 0 ? msg : at + ": " + msg);
    }
  }
  return F;
}

bool looks_dirichlet(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) return false;
  const Json& terms = j["terms"];
  return terms.empty() || (terms[0].is_object() && terms[0].contains("n"));
}

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(where + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                          e.what());
  }
}

DirichletPolynomial parse_dp(const std::string& text) { return dp_from_json(parse_json_text(text)); }
MultiPoly parse_mp(const std::string& text) { return mp_from_json(parse_json_text(text)); }
std::string emit_dp(const DirichletPolynomial& f) { return to_json(f).dump(); }
std::string emit_mp(const MultiPoly& F) { return to_json(F).dump(); }

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> parse_complex(const std::string& text) {
  static const std::string kNum = R"((?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)";
  static const std::regex kFull("\\s*([+-]?" + kNum + ")?\\s*(?:([+-])\\s*(" + kNum +
                                ")?\\s*i)?\\s*");
  static const std::regex kImagOnly("\\s*([+-]?)\\s*(" + kNum + ")?\\s*i\\s*");
  std::smatch m;
  if (std::regex_match(text, m, kImagOnly)) {
    const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (!text.empty() && std::regex_match(text, m, kFull) && (m[1].matched || m[2].matched)) {
    const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return {re, im};
  }
  throw ValidationError("not a complex number: \"" + text + "\"");
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_complex(text.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace bohrkit
