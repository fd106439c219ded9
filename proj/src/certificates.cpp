#include "dkcert/certificates.hpp"

#include <cmath>
#include <string>

#include "dkcert/error.hpp"
#include "dkcert/numerics.hpp"

namespace dkcert {

namespace {

struct Weights {
  double a;  // (n-1)^{1/q}
  double b;  // 2^{1/q}
  double c;  // (n-1)^{1/p}
};

Weights weights(std::size_t n, const NormIndex& p) {
  if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "n = " + std::to_string(n) + " < 2");
  const double m = static_cast<double>(n - 1);
  return {std::pow(m, p.inv_q()), std::pow(2.0, p.inv_q()), std::pow(m, p.inv_p())};
}

void require_degree(std::size_t n, std::size_t min_n) {
  if (n < min_n) {
    throw Error(ErrorCode::DegreeTooSmall,
                "n = " + std::to_string(n) + " < " + std::to_string(min_n));
  }
}

}  // namespace

double phi_domain_end(const NormIndex& p) { return 1.0 / std::pow(2.0, p.inv_q()); }

double phi(double x, std::size_t n, const NormIndex& p) {
  const Weights w = weights(n, p);
  if (!(x >= 0.0) || !(w.b * x < 1.0) || !(x < 1.0)) {
    throw Error(ErrorCode::DomainViolation,
                "phi(x) needs 0 <= x < " + std::to_string(phi_domain_end(p)));
  }
  const double one_minus_bx = 1.0 - w.b * x;
  const double head = w.a * x / ((1.0 - x) * one_minus_bx);
  const double base = 1.0 + x / (w.c * one_minus_bx);
  return head * std::pow(base, static_cast<double>(n - 1));
}

double radius_theorem(std::size_t n, const NormIndex& p) {
  weights(n, p);
  const double hi = std::nextafter(phi_domain_end(p), 0.0);
  auto f = [&](double x) { return phi(x, n, p) - 1.0; };
  return numerics::bisect(f, 0.0, hi, kRadiusTolerance);
}

Certificate make_certificate(double e, std::size_t n, const NormIndex& p) {
  Certificate cert;
  cert.e0 = e;
  const double b = std::pow(2.0, p.inv_q());
  cert.theta = 1.0 - b * e;
  if (e == 0.0) {
    cert.lambda = 0.0;
    cert.satisfied = true;
    cert.strict = true;
    return cert;
  }
  if (!(e < phi_domain_end(p))) {
    cert.lambda = kInf;
    return cert;
  }
  cert.lambda = phi(e, n, p);
  cert.satisfied = cert.lambda <= 1.0;
  cert.strict = cert.lambda < 1.0;
  return cert;
}

Certificate check_theorem1(const Polynomial& poly, std::span<const Complex> z0,
                           const NormIndex& p) {
  const OperatorData data = certificate_quantity(poly, z0, p);
  return make_certificate(data.e, poly.degree(), p);
}

double apriori_bound(int k, const Certificate& cert, double first_step_norm) {
  if (!cert.satisfied) {
    throw Error(ErrorCode::CertificateNotSatisfied, "a priori bound needs a valid certificate");
  }
  if (k < 1) throw Error(ErrorCode::DomainViolation, "a priori bound is defined for k >= 1");
  if (cert.lambda == 0.0 || first_step_norm == 0.0) return 0.0;

  // lambda^{2^k} through exp/log; 2^k overflows any integer power quickly.
  const double two_k = std::ldexp(1.0, k);
  double lam_2k = 1.0;
  double lam_2k_minus_1 = 1.0;
  if (cert.lambda != 1.0) {
    const double log_lam = std::log(cert.lambda);
    lam_2k = std::exp(two_k * log_lam);
    lam_2k_minus_1 = std::exp((two_k - 1.0) * log_lam);
  }
  const double denom = 1.0 - cert.theta * lam_2k;
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::DegenerateDenominator, "1 - theta lambda^{2^k} <= 0");
  }
  return std::pow(cert.theta, k) * lam_2k_minus_1 / denom * first_step_norm;
}

double aposteriori_bound(double lambda_k, double theta_k, double step_norm) {
  if (!(lambda_k <= 1.0) || !(theta_k > 0.0) || !(theta_k <= 1.0)) {
    throw Error(ErrorCode::CertificateNotSatisfied,
                "a posteriori bound needs lambda_k <= 1 and 0 < theta_k <= 1");
  }
  if (lambda_k == 0.0) return 0.0;
  const double denom = 1.0 - theta_k * lambda_k * lambda_k;
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::DegenerateDenominator, "1 - theta_k lambda_k^2 <= 0");
  }
  return theta_k * lambda_k / denom * step_norm;
}

double aposteriori_bound(const Polynomial& poly, std::span<const Complex> zk, const NormIndex& p,
                         double step_norm) {
  const Certificate cert = check_theorem1(poly, zk, p);
  if (!cert.satisfied) {
    throw Error(ErrorCode::CertificateNotSatisfied, "certificate fails at z^k");
  }
  return aposteriori_bound(cert.lambda, cert.theta, step_norm);
}

double solve_A() {
  static const double value = numerics::bisect(
      [](double x) { return std::exp(1.0 / x) - x; }, 1.0, 3.0, kRadiusTolerance);
  return value;
}

double radius_cor2(std::size_t n, const NormIndex& p, bool sharp) {
  const Weights w = weights(n, p);
  const double m = solve_A() * w.a + w.b + 1.0;
  if (!sharp) return 1.0 / m;
  return 2.0 / (m + std::sqrt(m * m - 4.0 * w.b));
}

double radius_cor3(std::size_t n, const NormIndex& p) {
  const Weights w = weights(n, p);
  return 1.0 / (2.0 * w.a + 2.0);
}

double cor4_majorant(double x) {
  const double y = x / (1.0 - x);
  return y / (1.0 - x) * std::exp(y);
}

double radius_cor4() {
  static const double value = numerics::bisect(
      [](double x) { return cor4_majorant(x) - 1.0; }, 0.0, 0.9, kRadiusTolerance);
  return value;
}

double radius_han(std::size_t n, const NormIndex& p) {
  const Weights w = weights(n, p);
  const double nd = static_cast<double>(n);
  const double s = nd * std::expm1(std::log(2.0) / nd);  // n (2^{1/n} - 1)
  const double tau = s / (w.a + w.b);
  return tau * (1.0 - w.a * tau);
}

double lambda_zheng(double c, std::size_t n) {
  require_degree(n, 2);
  if (!(c > 0.0) || !(c < 0.5)) {
    throw Error(ErrorCode::DomainViolation, "lambda_zheng needs 0 < C < 1/2");
  }
  const double m = static_cast<double>(n - 1);
  return m * c / ((1.0 - c) * (1.0 - 2.0 * c)) * std::pow(1.0 + c / (1.0 - 2.0 * c), m);
}

double radius_cor7(std::size_t n) {
  require_degree(n, 2);
  return 1.0 / (1.76325 * static_cast<double>(n) + 0.6869);
}

double radius_petkovic_herceg(std::size_t n) {
  require_degree(n, 2);
  return 1.0 / (1.76325 * static_cast<double>(n) + 0.8689425);
}

double c_wangzhao_inf(std::size_t n) {
  require_degree(n, 2);
  const double m = static_cast<double>(n - 1);
  const double nd = static_cast<double>(n);
  // Stationary point of g(x) = 2x - x (1+x)^{n-1}:
  // g'(x) = 2 - (1+x)^{n-2} (1 + n x), positive at 0, negative at 2^{1/(n-1)} - 1.
  auto dg = [&](double x) { return 2.0 - std::pow(1.0 + x, m - 1.0) * (1.0 + nd * x); };
  const double hi = std::expm1(std::log(2.0) / m);
  const double t = numerics::bisect(dg, 0.0, hi, kRadiusTolerance);
  const double g = 2.0 * t - t * std::pow(1.0 + t, m);
  const double closed = 2.0 * m * t * t / (1.0 + nd * t);
  if (!(std::abs(g - closed) <= 1e-9)) {
    throw Error(ErrorCode::ConvergenceFailure, "stationary value disagrees with closed form");
  }
  return g;
}

double c_wangzhao_l1(std::size_t n) {
  require_degree(n, 4);
  const double nd = static_cast<double>(n);
  auto f = [&](double x) {
    double term = x;  // x^{j+1} / j! for j = 0
    double sum = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
      term *= x / static_cast<double>(j);
      sum += (nd - static_cast<double>(j)) / nd * term;
    }
    return sum - x;
  };
  return -numerics::scan_minimize(f, 0.0, 3.0, 301, kRadiusTolerance).fx;
}

double radius_zhaowang_l1(std::size_t n) {
  require_degree(n, 2);
  const double nd = static_cast<double>(n);
  return (3.0 - 2.0 * std::sqrt(2.0)) * nd / (nd - 1.0);
}

}  // namespace dkcert
