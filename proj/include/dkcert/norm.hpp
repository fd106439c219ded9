#pragma once

#include <cmath>
#include <limits>
#include <span>

#include "dkcert/polynomial.hpp"

namespace dkcert {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Conjugate exponent q with 1/p + 1/q = 1; p = 1 gives q = inf and p = inf gives q = 1.
double conjugate_exponent(double p);

/// Exponent p in [1, inf] together with its conjugate q.
///
/// The reciprocals 1/p and 1/q are what the certificate formulas consume, so
/// they are stored directly with the convention 1/inf = 0.
class NormIndex {
 public:
  /// Throws InvalidExponent unless 1 <= p <= inf.
  explicit NormIndex(double p);

  static NormIndex one() { return NormIndex(1.0); }
  static NormIndex two() { return NormIndex(2.0); }
  static NormIndex infinity() { return NormIndex(kInf); }

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double inv_p() const noexcept { return inv_p_; }
  double inv_q() const noexcept { return inv_q_; }
  bool is_one() const noexcept { return p_ == 1.0; }
  bool is_infinite() const noexcept { return p_ == kInf; }

  friend bool operator==(const NormIndex& a, const NormIndex& b) noexcept { return a.p_ == b.p_; }

 private:
  double p_;
  double q_;
  double inv_p_;
  double inv_q_;
};

double p_norm(std::span<const Complex> v, const NormIndex& p);
double p_norm(std::span<const double> v, const NormIndex& p);

}  // namespace dkcert
