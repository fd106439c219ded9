#pragma once

#include <cstddef>
#include <span>

#include "dkcert/norm.hpp"
#include "dkcert/polynomial.hpp"
#include "dkcert/weierstrass.hpp"

namespace dkcert {

/// Convergence verdict for the Weierstrass iteration started at one point.
struct Certificate {
  double e0 = 0.0;      // E(z)
  double lambda = 0.0;  // phi(E(z)); +inf when E(z) >= 1/2^{1/q}
  double theta = 1.0;   // 1 - 2^{1/q} E(z)
  bool satisfied = false;
  bool strict = false;  // lambda < 1: quadratic convergence is guaranteed
};

/// Absolute tolerance for every one-dimensional root search in this module.
inline constexpr double kRadiusTolerance = 1e-12;

/// Upper end (exclusive) of the domain of phi: min(1, 1/2^{1/q}).
double phi_domain_end(const NormIndex& p);

/// The majorant
///   phi(x) = a x / ((1 - x)(1 - b x)) * (1 + x / (c (1 - b x)))^{n-1}
/// with a = (n-1)^{1/q}, b = 2^{1/q}, c = (n-1)^{1/p}.
/// Throws DomainViolation outside [0, phi_domain_end(p)) or for n < 2.
double phi(double x, std::size_t n, const NormIndex& p);

/// Unique root of phi(x) = 1 on (0, 1/2^{1/q}); the largest certifiable E(z0).
double radius_theorem(std::size_t n, const NormIndex& p);

/// Builds the certificate from an already computed E(z).
Certificate make_certificate(double e, std::size_t n, const NormIndex& p);

/// E(z0) < 1/2^{1/q} and phi(E(z0)) <= 1.
Certificate check_theorem1(const Polynomial& poly, std::span<const Complex> z0,
                           const NormIndex& p);

/// theta^k lambda^{2^k - 1} / (1 - theta lambda^{2^k}) * ||z^1 - z^0||_p, k >= 1.
/// Throws CertificateNotSatisfied, DomainViolation for k < 1.
double apriori_bound(int k, const Certificate& cert, double first_step_norm);

/// theta_k lambda_k / (1 - theta_k lambda_k^2) * step_norm.
/// Throws DegenerateDenominator if theta_k lambda_k^2 >= 1.
double aposteriori_bound(double lambda_k, double theta_k, double step_norm);

/// Bound on ||z^{k+1} - xi||_p from the certificate at z^k.
/// Throws CertificateNotSatisfied when lambda_k > 1 or E(z^k) >= 1/2^{1/q}.
double aposteriori_bound(const Polynomial& poly, std::span<const Complex> zk, const NormIndex& p,
                         double step_norm);

/// Root of exp(1/x) = x, approximately 1.763222. Computed once.
double solve_A();

/// 1/(A a + b + 1), or with sharp = true the larger 2/(m + sqrt(m^2 - 4b)),
/// m = A a + b + 1.
double radius_cor2(std::size_t n, const NormIndex& p, bool sharp);

/// 1/(2 (n-1)^{1/q} + 2).
double radius_cor3(std::size_t n, const NormIndex& p);

/// Root of x/(1-x)^2 exp(x/(1-x)) = 1 on (0, 1), approximately 0.307541.
/// The bound applies to p = 1.
double radius_cor4();

/// Left-hand side of the p = 1 radius equation, x/(1-x)^2 exp(x/(1-x)).
double cor4_majorant(double x);

/// g(tau) = tau (1 - a tau), tau = n (2^{1/n} - 1) / (a + b).
double radius_han(std::size_t n, const NormIndex& p);

/// (n-1) C / ((1-C)(1-2C)) (1 + C/(1-2C))^{n-1} for 0 < C < 1/2, where
/// C = ||W||_inf / delta. Equal to phi(C, n, inf).
double lambda_zheng(double c, std::size_t n);

/// 1/(1.76325 n + 0.6869); p = inf.
double radius_cor7(std::size_t n);

/// Threshold on ||W||_inf / delta: 1/(1.76325 n + 0.8689425).
double radius_petkovic_herceg(std::size_t n);

/// C(n) = -min_{x>0} (x (1+x)^{n-1} - 2x); threshold on ||W||_inf / delta.
double c_wangzhao_inf(std::size_t n);

/// C(n) = -min_{x>0} (sum_{j=1}^{n-1} (n-j)/(j! n) x^{j+1} - x); threshold on
/// ||W||_1 / delta. Requires n >= 4.
double c_wangzhao_l1(std::size_t n);

/// (3 - 2 sqrt 2) n / (n - 1); threshold on ||W||_1 / delta.
double radius_zhaowang_l1(std::size_t n);

}  // namespace dkcert
