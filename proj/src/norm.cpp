#include "dkcert/norm.hpp"

#include <algorithm>
#include <string>

#include "dkcert/error.hpp"

namespace dkcert {

double conjugate_exponent(double p) {
  if (!(p >= 1.0)) {
    throw Error(ErrorCode::InvalidExponent, "p = " + std::to_string(p) + " is below 1");
  }
  if (p == 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

NormIndex::NormIndex(double p) : p_(p), q_(conjugate_exponent(p)) {
  inv_p_ = (p_ == kInf) ? 0.0 : 1.0 / p_;
  inv_q_ = (q_ == kInf) ? 0.0 : 1.0 - inv_p_;
}

namespace {

template <class Abs>
double norm_impl(std::size_t size, Abs abs_at, const NormIndex& p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (std::size_t i = 0; i < size; ++i) m = std::max(m, abs_at(i));
    return m;
  }
  if (p.is_one()) {
    double s = 0.0;
    for (std::size_t i = 0; i < size; ++i) s += abs_at(i);
    return s;
  }
  if (p.p() == 2.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      const double a = abs_at(i);
      s += a * a;
    }
    return std::sqrt(s);
  }
  // Scale by the largest entry so |v_i|^p cannot overflow or underflow away.
  double m = 0.0;
  for (std::size_t i = 0; i < size; ++i) m = std::max(m, abs_at(i));
  if (m == 0.0 || !std::isfinite(m)) return m;
  double s = 0.0;
  for (std::size_t i = 0; i < size; ++i) s += std::pow(abs_at(i) / m, p.p());
  return m * std::pow(s, p.inv_p());
}

}  // namespace

double p_norm(std::span<const Complex> v, const NormIndex& p) {
  return norm_impl(v.size(), [&](std::size_t i) { return std::abs(v[i]); }, p);
}

double p_norm(std::span<const double> v, const NormIndex& p) {
  return norm_impl(v.size(), [&](std::size_t i) { return std::abs(v[i]); }, p);
}

}  // namespace dkcert
