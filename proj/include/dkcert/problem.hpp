#pragma once

#include <istream>
#include <optional>
#include <vector>

#include "json.hpp"

#include "dkcert/polynomial.hpp"
#include "dkcert/solver.hpp"
#include "dkcert/weierstrass.hpp"

namespace dkcert {

using Json = nlohmann::json;

/// One problem document. Complex numbers are [re, im] pairs (a bare number
/// is accepted as a real value).
///
///   {"roots": [[1,0],[2,0]], "initial": {"perturb_roots": 1e-3}, "p": 2}
///   {"coefficients": [[-1,0],[0,0],[1,0]], "initial": [[2,0],[-2,0]], "p": "inf"}
///
/// Without "leading", "coefficients" lists c_0 ... c_n and c_n must be 1.
/// With "leading", it lists c_0 ... c_{n-1} and every entry is divided by it.
struct ProblemInput {
  std::optional<std::vector<Complex>> coefficients;
  std::optional<Complex> leading;
  std::optional<std::vector<Complex>> roots;
  std::optional<std::vector<Complex>> initial;
  std::optional<double> perturb_roots;
  NormIndex p = NormIndex::infinity();
  StepMode method = StepMode::Plain;
  std::optional<double> h;
  std::optional<int> max_iter;
  std::optional<double> tol_e;
  std::optional<double> tol_step;

  friend bool operator==(const ProblemInput&, const ProblemInput&) = default;
};

/// Throws Error(ParseError) on shape problems.
ProblemInput parse_problem(const Json& doc);
Json to_json(const ProblemInput& input);

Polynomial build_polynomial(const ProblemInput& input);

/// Explicit initial point, or roots + eps * exp(2 pi i k / n).
PointVector build_initial(const ProblemInput& input, const Polynomial& poly);

SolverOptions build_options(const ProblemInput& input);

/// Reads consecutive JSON values (one per line or pretty-printed).
/// Throws Error(ParseError) on malformed text.
std::vector<Json> read_documents(std::istream& in);

Json complex_to_json(Complex z);
Json complex_list_to_json(std::span<const Complex> zs);
/// Non-finite reals become null.
Json real_to_json(double x);

}  // namespace dkcert
