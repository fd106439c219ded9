#include "dkcert/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dkcert {

namespace {

constexpr double kWangZhaoConstant = 0.204378;
constexpr double kNewConstant = 0.307541;

double step_factor(const SolverOptions& opts, const OperatorData& data) {
  switch (opts.mode) {
    case StepMode::Plain: return 1.0;
    case StepMode::SorWangZhao: return h_wangzhao(data);
    case StepMode::SorNew: return h_new(data);
    case StepMode::SorFixed: return opts.fixed_h;
  }
  return 1.0;
}

}  // namespace

std::string_view to_string(StepMode mode) noexcept {
  switch (mode) {
    case StepMode::Plain: return "plain";
    case StepMode::SorWangZhao: return "sor_wz";
    case StepMode::SorNew: return "sor_new";
    case StepMode::SorFixed: return "sor_fixed";
  }
  return "plain";
}

StepMode parse_step_mode(std::string_view name) {
  if (name == "plain") return StepMode::Plain;
  if (name == "sor_wz") return StepMode::SorWangZhao;
  if (name == "sor_new") return StepMode::SorNew;
  if (name == "sor_fixed") return StepMode::SorFixed;
  throw Error(ErrorCode::InvalidOption, "unknown method '" + std::string(name) + "'");
}

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::Tolerance: return "tolerance";
    case StopReason::StepTolerance: return "step_tolerance";
    case StopReason::MaxIterations: return "max_iterations";
    case StopReason::Failure: return "failure";
  }
  return "failure";
}

void SolverOptions::validate() const {
  if (max_iter < 1) throw Error(ErrorCode::InvalidOption, "max_iter must be >= 1");
  if (!(tol_e >= 0.0)) throw Error(ErrorCode::InvalidOption, "tol_e must be >= 0");
  if (!(tol_step >= 0.0)) throw Error(ErrorCode::InvalidOption, "tol_step must be >= 0");
  if (mode == StepMode::SorFixed && !(fixed_h > 0.0 && fixed_h <= 1.0)) {
    throw Error(ErrorCode::InvalidOption, "fixed h must lie in (0, 1]");
  }
}

double h_wangzhao(const OperatorData& data) {
  double sum = 0.0;
  for (const Complex& wi : data.w) sum += std::abs(wi);
  if (sum == 0.0) return 1.0;
  return std::min(1.0, kWangZhaoConstant * data.delta / sum);
}

double h_new(const OperatorData& data) {
  double sum = 0.0;
  for (std::size_t i = 0; i < data.w.size(); ++i) sum += std::abs(data.w[i] / data.d[i]);
  if (sum == 0.0) return 1.0;
  return std::min(1.0, kNewConstant / sum);
}

double h_wangzhao(const Polynomial& poly, std::span<const Complex> z) {
  return h_wangzhao(certificate_quantity(poly, z, NormIndex::one()));
}

double h_new(const Polynomial& poly, std::span<const Complex> z) {
  return h_new(certificate_quantity(poly, z, NormIndex::one()));
}

IterationTrace run_sor(const Polynomial& poly, const PointVector& z0, const SolverOptions& opts) {
  opts.validate();
  if (z0.size() != poly.degree()) {
    throw Error(ErrorCode::DimensionMismatch, "initial point length differs from degree");
  }
  const std::size_t n = poly.degree();
  const NormIndex& p = opts.p;

  IterationTrace trace;
  std::vector<Complex> z(z0.coords().begin(), z0.coords().end());
  bool full_steps = true;
  bool stop_after_record = false;

  for (int k = 0;; ++k) {
    OperatorData data;
    try {
      data = certificate_quantity(poly, z, p);
    } catch (const Error& err) {
      if (k == 0) throw;
      // z^k collided or overflowed; the trace ends at z^{k-1}.
      trace.error = err.code();
      trace.error_message = err.what();
      trace.reason = StopReason::Failure;
      trace.converged = false;
      trace.final = trace.records.back().z;
      break;
    }

    IterationRecord rec;
    rec.k = k;
    rec.z = z;
    rec.w_norm = data.w_norm;
    rec.e = data.e;
    const Certificate local = make_certificate(data.e, n, p);
    rec.lambda = local.lambda;
    rec.theta = local.theta;
    rec.h = step_factor(opts, data);
    if (k == 0) trace.certificate = local;

    const bool at_tolerance = data.e <= opts.tol_e;
    if (at_tolerance || stop_after_record || k == opts.max_iter) {
      rec.terminal = true;
      trace.records.push_back(std::move(rec));
      trace.final = z;
      if (at_tolerance) {
        trace.converged = true;
        trace.reason = StopReason::Tolerance;
      } else if (stop_after_record) {
        trace.converged = true;
        trace.reason = StopReason::StepTolerance;
      } else {
        trace.reason = StopReason::MaxIterations;
      }
      break;
    }

    const double h = rec.h;
    if (h != 1.0) full_steps = false;
    for (std::size_t i = 0; i < n; ++i) z[i] -= h * data.w[i];
    std::vector<Complex> step(n);
    for (std::size_t i = 0; i < n; ++i) step[i] = z[i] - rec.z[i];
    rec.step_norm = p_norm(step, p);
    if (full_steps && local.satisfied) {
      try {
        rec.apost_bound = aposteriori_bound(local.lambda, local.theta, rec.step_norm);
      } catch (const Error&) {
        rec.apost_bound.reset();
      }
    }
    if (opts.tol_step > 0.0 && rec.step_norm <= opts.tol_step) stop_after_record = true;
    trace.records.push_back(std::move(rec));
  }

  if (full_steps && trace.certificate.satisfied && trace.records.size() > 1) {
    const double first_step = trace.records.front().step_norm;
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
      trace.apriori_curve.push_back(
          apriori_bound(static_cast<int>(k), trace.certificate, first_step));
    }
  }
  return trace;
}

IterationTrace run_weierstrass(const Polynomial& poly, const PointVector& z0,
                               SolverOptions opts) {
  opts.mode = StepMode::Plain;
  return run_sor(poly, z0, opts);
}

}  // namespace dkcert
