#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dkcert/certificates.hpp"
#include "dkcert/error.hpp"
#include "dkcert/norm.hpp"
#include "dkcert/polynomial.hpp"
#include "dkcert/weierstrass.hpp"

namespace dkcert {

enum class StepMode { Plain, SorWangZhao, SorNew, SorFixed };

std::string_view to_string(StepMode mode) noexcept;
/// Accepts "plain", "sor_wz", "sor_new", "sor_fixed". Throws InvalidOption.
StepMode parse_step_mode(std::string_view name);

struct SolverOptions {
  int max_iter = 100;
  double tol_e = 1e-13;
  double tol_step = 0.0;  // 0 disables the step-norm rule
  StepMode mode = StepMode::Plain;
  double fixed_h = 1.0;   // used by SorFixed only
  NormIndex p = NormIndex::infinity();

  /// Throws InvalidOption on max_iter < 1, negative thresholds, h outside (0, 1].
  void validate() const;
};

struct IterationRecord {
  int k = 0;
  std::vector<Complex> z;  // z^k
  double w_norm = 0.0;     // ||W(z^k)||_p
  double step_norm = 0.0;  // ||z^{k+1} - z^k||_p; 0 on the terminal record
  double e = 0.0;          // E(z^k)
  double lambda = 0.0;     // phi(E(z^k)), +inf outside the domain
  double theta = 1.0;
  std::optional<double> apost_bound;  // bound on ||z^{k+1} - xi||_p
  double h = 1.0;
  bool terminal = false;   // no step was taken from this iterate
};

enum class StopReason { Tolerance, StepTolerance, MaxIterations, Failure };

std::string_view to_string(StopReason reason) noexcept;

struct IterationTrace {
  std::vector<IterationRecord> records;
  std::vector<Complex> final;
  bool converged = false;
  StopReason reason = StopReason::MaxIterations;
  std::optional<ErrorCode> error;
  std::string error_message;
  Certificate certificate;            // at z^0
  std::vector<double> apriori_curve;  // entry k-1 bounds ||z^k - xi||_p, k >= 1
};

/// h_k = min{1, 0.204378 delta(z) / sum |W_i(z)|}; 1 when W vanishes.
double h_wangzhao(const Polynomial& poly, std::span<const Complex> z);
double h_wangzhao(const OperatorData& data);

/// h_k = min{1, 0.307541 / sum |W_i(z) / d_i(z)|}; 1 when W vanishes.
double h_new(const Polynomial& poly, std::span<const Complex> z);
double h_new(const OperatorData& data);

/// z^{k+1} = z^k - W(z^k). Ignores opts.mode.
IterationTrace run_weierstrass(const Polynomial& poly, const PointVector& z0,
                               SolverOptions opts);

/// z^{k+1} = z^k - h_k W(z^k) with h_k chosen by opts.mode.
///
/// Bounds are only attached while every step is a full Weierstrass step
/// (h_k = 1); damped steps are outside the certificate theory.
IterationTrace run_sor(const Polynomial& poly, const PointVector& z0, const SolverOptions& opts);

}  // namespace dkcert
