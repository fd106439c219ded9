#include "dkcert/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dkcert/error.hpp"

namespace dkcert {

namespace {

// Status codes written by worker threads; the lowest failing index wins so
// that the reported error matches the serial kernel.
enum Status : unsigned char { kOk = 0, kCoincident, kTooClose, kNotFinite };

[[noreturn]] void raise(Status s, std::size_t i, std::size_t j) {
  switch (s) {
    case kCoincident:
      throw Error(ErrorCode::DistinctCoordinatesViolated,
                  "z_" + std::to_string(i) + " == z_" + std::to_string(j));
    case kTooClose:
      throw Error(ErrorCode::NonFiniteValue, "coordinates closer than 1e-300");
    default:
      throw Error(ErrorCode::NonFiniteValue, "W_" + std::to_string(i) + " is not finite");
  }
}

}  // namespace

PointVector::PointVector(std::vector<Complex> coords) : coords_(std::move(coords)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    for (std::size_t j = i + 1; j < coords_.size(); ++j) {
      if (coords_[i] == coords_[j]) {
        throw Error(ErrorCode::DistinctCoordinatesViolated,
                    "z_" + std::to_string(i) + " == z_" + std::to_string(j));
      }
    }
  }
}

std::vector<Complex> weierstrass_correction(const Polynomial& poly, std::span<const Complex> z) {
  const std::size_t n = z.size();
  if (n != poly.degree()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(n) +
                                                  " coordinates, degree is " +
                                                  std::to_string(poly.degree()));
  }
  std::vector<Complex> w(n);
  std::vector<unsigned char> status(n, kOk);
  std::vector<std::size_t> partner(n, 0);
  const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(static) if (n >= kParallelMinDegree)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Complex denom(1.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex diff = z[i] - z[j];
      const double gap = std::abs(diff);
      if (gap < kMinSeparation) {
        status[i] = gap == 0.0 ? kCoincident : kTooClose;
        partner[i] = j;
        break;
      }
      denom *= diff;
    }
    if (status[i] != kOk) continue;
    w[i] = poly(z[i]) / denom;
    if (!std::isfinite(w[i].real()) || !std::isfinite(w[i].imag())) status[i] = kNotFinite;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (status[i] != kOk) raise(static_cast<Status>(status[i]), i, partner[i]);
  }
  return w;
}

Distances distances(std::span<const Complex> z) {
  const std::size_t n = z.size();
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "need at least two coordinates");
  Distances out;
  out.d.assign(n, kInf);
  std::vector<std::size_t> clash(n, n);
  const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(static) if (n >= kParallelMinDegree)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    double best = kInf;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double gap = std::abs(z[i] - z[j]);
      if (gap == 0.0) {
        clash[i] = j;
        break;
      }
      best = std::min(best, gap);
    }
    out.d[i] = best;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (clash[i] != n) raise(kCoincident, i, clash[i]);
  }
  out.delta = *std::min_element(out.d.begin(), out.d.end());
  return out;
}

OperatorData certificate_quantity(const Polynomial& poly, std::span<const Complex> z,
                                  const NormIndex& p) {
  OperatorData data;
  data.w = weierstrass_correction(poly, z);
  auto dist = distances(z);
  data.d = std::move(dist.d);
  data.delta = dist.delta;

  std::vector<Complex> ratio(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) ratio[i] = data.w[i] / data.d[i];
  data.e = p_norm(ratio, p);
  data.w_norm = p_norm(data.w, p);
  return data;
}

}  // namespace dkcert
