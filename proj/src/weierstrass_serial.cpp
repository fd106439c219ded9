#include <cmath>
#include <string>

#include "dkcert/error.hpp"
#include "dkcert/weierstrass.hpp"

namespace dkcert::serial {

std::vector<Complex> weierstrass_correction(const Polynomial& poly, std::span<const Complex> z) {
  const std::size_t n = z.size();
  if (n != poly.degree()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(n) +
                                                  " coordinates, degree is " +
                                                  std::to_string(poly.degree()));
  }
  std::vector<Complex> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex denom(1.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex diff = z[i] - z[j];
      const double gap = std::abs(diff);
      if (gap == 0.0) {
        throw Error(ErrorCode::DistinctCoordinatesViolated,
                    "z_" + std::to_string(i) + " == z_" + std::to_string(j));
      }
      if (gap < kMinSeparation) {
        throw Error(ErrorCode::NonFiniteValue, "coordinates closer than 1e-300");
      }
      denom *= diff;
    }
    w[i] = poly(z[i]) / denom;
    if (!std::isfinite(w[i].real()) || !std::isfinite(w[i].imag())) {
      throw Error(ErrorCode::NonFiniteValue, "W_" + std::to_string(i) + " is not finite");
    }
  }
  return w;
}

Distances distances(std::span<const Complex> z) {
  const std::size_t n = z.size();
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "need at least two coordinates");
  Distances out;
  out.d.assign(n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double gap = std::abs(z[i] - z[j]);
      if (gap == 0.0) {
        throw Error(ErrorCode::DistinctCoordinatesViolated,
                    "z_" + std::to_string(i) + " == z_" + std::to_string(j));
      }
      if (gap < out.d[i]) out.d[i] = gap;
    }
  }
  out.delta = kInf;
  for (double di : out.d) out.delta = std::min(out.delta, di);
  return out;
}

}  // namespace dkcert::serial
