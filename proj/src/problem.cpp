#include "dkcert/problem.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dkcert/error.hpp"

namespace dkcert {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Complex parse_complex(const Json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  bad("'" + field + "' entries must be [re, im] pairs");
}

std::vector<Complex> parse_complex_list(const Json& j, const std::string& field) {
  if (!j.is_array()) bad("'" + field + "' must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(parse_complex(item, field));
  return out;
}

double parse_number(const Json& j, const std::string& field) {
  if (!j.is_number()) bad("'" + field + "' must be a number");
  return j.get<double>();
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({real_to_json(z.real()), real_to_json(z.imag())}); }

Json complex_list_to_json(std::span<const Complex> zs) {
  Json out = Json::array();
  for (const Complex& z : zs) out.push_back(complex_to_json(z));
  return out;
}

Json real_to_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ProblemInput parse_problem(const Json& doc) {
  if (!doc.is_object()) bad("problem must be a JSON object");
  ProblemInput in;

  const bool has_coeffs = doc.contains("coefficients");
  const bool has_roots = doc.contains("roots");
  if (has_coeffs == has_roots) bad("exactly one of 'coefficients' and 'roots' is required");
  if (has_coeffs) in.coefficients = parse_complex_list(doc["coefficients"], "coefficients");
  if (has_roots) in.roots = parse_complex_list(doc["roots"], "roots");
  if (doc.contains("leading")) {
    if (!has_coeffs) bad("'leading' only applies to 'coefficients'");
    in.leading = parse_complex(doc["leading"], "leading");
  }

  if (!doc.contains("initial")) bad("'initial' is required");
  const Json& init = doc["initial"];
  if (init.is_array()) {
    in.initial = parse_complex_list(init, "initial");
  } else if (init.is_object() && init.size() == 1 && init.contains("perturb_roots")) {
    in.perturb_roots = parse_number(init["perturb_roots"], "perturb_roots");
    if (!has_roots) bad("'perturb_roots' requires 'roots'");
  } else {
    bad("'initial' must be a list of points or {\"perturb_roots\": eps}");
  }

  if (doc.contains("p")) {
    const Json& pj = doc["p"];
    if (pj.is_string()) {
      if (pj.get<std::string>() != "inf") bad("'p' must be a number >= 1 or \"inf\"");
      in.p = NormIndex::infinity();
    } else {
      in.p = NormIndex(parse_number(pj, "p"));
    }
  }

  if (doc.contains("method")) {
    if (!doc["method"].is_string()) bad("'method' must be a string");
    in.method = parse_step_mode(doc["method"].get<std::string>());
  }
  if (doc.contains("h")) in.h = parse_number(doc["h"], "h");
  if (in.method == StepMode::SorFixed && !in.h) bad("'sor_fixed' requires 'h'");
  if (doc.contains("max_iter")) {
    if (!doc["max_iter"].is_number_integer()) bad("'max_iter' must be an integer");
    in.max_iter = doc["max_iter"].get<int>();
  }
  if (doc.contains("tol_e")) in.tol_e = parse_number(doc["tol_e"], "tol_e");
  if (doc.contains("tol_step")) in.tol_step = parse_number(doc["tol_step"], "tol_step");
  return in;
}

Json to_json(const ProblemInput& in) {
  Json j = Json::object();
  if (in.coefficients) j["coefficients"] = complex_list_to_json(*in.coefficients);
  if (in.leading) j["leading"] = complex_to_json(*in.leading);
  if (in.roots) j["roots"] = complex_list_to_json(*in.roots);
  if (in.initial) {
    j["initial"] = complex_list_to_json(*in.initial);
  } else if (in.perturb_roots) {
    j["initial"] = Json{{"perturb_roots", *in.perturb_roots}};
  }
  if (in.p.is_infinite()) {
    j["p"] = "inf";
  } else {
    j["p"] = in.p.p();
  }
  j["method"] = std::string(to_string(in.method));
  if (in.h) j["h"] = *in.h;
  if (in.max_iter) j["max_iter"] = *in.max_iter;
  if (in.tol_e) j["tol_e"] = *in.tol_e;
  if (in.tol_step) j["tol_step"] = *in.tol_step;
  return j;
}

Polynomial build_polynomial(const ProblemInput& in) {
  if (in.roots) return Polynomial::from_roots(*in.roots);
  const auto& c = *in.coefficients;
  if (in.leading) return Polynomial::from_coefficients(c, *in.leading);
  if (c.empty()) bad("'coefficients' is empty");
  if (c.back() != Complex(1.0, 0.0)) {
    bad("without 'leading' the last coefficient must be 1 (monic)");
  }
  return Polynomial::from_coefficients(std::span<const Complex>(c).first(c.size() - 1), 1.0);
}

PointVector build_initial(const ProblemInput& in, const Polynomial& poly) {
  if (in.initial) {
    if (in.initial->size() != poly.degree()) {
      throw Error(ErrorCode::DimensionMismatch, "'initial' has " +
                                                    std::to_string(in.initial->size()) +
                                                    " points for degree " +
                                                    std::to_string(poly.degree()));
    }
    return PointVector(*in.initial);
  }
  const auto& r = *in.roots;
  const double eps = *in.perturb_roots;
  const double n = static_cast<double>(r.size());
  std::vector<Complex> z(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    z[k] = r[k] + eps * std::polar(1.0, angle);
  }
  return PointVector(std::move(z));
}

SolverOptions build_options(const ProblemInput& in) {
  SolverOptions opts;
  opts.p = in.p;
  opts.mode = in.method;
  if (in.h) opts.fixed_h = *in.h;
  if (in.max_iter) opts.max_iter = *in.max_iter;
  if (in.tol_e) opts.tol_e = *in.tol_e;
  if (in.tol_step) opts.tol_step = *in.tol_step;
  opts.validate();
  return opts;
}

std::vector<Json> read_documents(std::istream& in) {
  std::vector<Json> docs;
  while (true) {
    in >> std::ws;
    if (in.peek() == std::char_traits<char>::eof()) break;
    try {
      Json doc;
      in >> doc;
      docs.push_back(std::move(doc));
    } catch (const Json::exception& ex) {
      bad(std::string("malformed JSON: ") + ex.what());
    }
  }
  return docs;
}

}  // namespace dkcert
