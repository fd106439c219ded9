#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "dkcert/norm.hpp"
#include "dkcert/polynomial.hpp"

namespace dkcert {

/// Point of C^n with pairwise distinct coordinates.
class PointVector {
 public:
  /// Throws DistinctCoordinatesViolated if two coordinates are equal.
  explicit PointVector(std::vector<Complex> coords);
  PointVector(std::initializer_list<Complex> coords)
      : PointVector(std::vector<Complex>(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Complex& operator[](std::size_t i) const noexcept { return coords_[i]; }
  std::span<const Complex> coords() const noexcept { return coords_; }
  operator std::span<const Complex>() const noexcept { return coords_; }

  friend bool operator==(const PointVector&, const PointVector&) = default;

 private:
  std::vector<Complex> coords_;
};

struct Distances {
  std::vector<double> d;  // d_i = min_{j != i} |z_i - z_j|
  double delta = 0.0;     // min_i d_i
};

/// Everything the certificates need about one point, for one norm.
struct OperatorData {
  std::vector<Complex> w;
  std::vector<double> d;
  double delta = 0.0;
  double e = 0.0;       // || W / d ||_p
  double w_norm = 0.0;  // || W ||_p
};

/// Coincidences closer than this are rejected before forming products.
inline constexpr double kMinSeparation = 1e-300;

/// Below this degree the kernels stay on one thread.
inline constexpr std::size_t kParallelMinDegree = 48;

/// W_i(z) = f(z_i) / prod_{j != i} (z_i - z_j). OpenMP-parallel over i.
///
/// Throws DimensionMismatch, DistinctCoordinatesViolated (exact coincidence)
/// and NonFiniteValue (separation below kMinSeparation or a non-finite W_i).
std::vector<Complex> weierstrass_correction(const Polynomial& poly, std::span<const Complex> z);

/// Nearest-neighbour distances, OpenMP-parallel over i.
Distances distances(std::span<const Complex> z);

/// W, d, delta and E(z) = ||W/d||_p, with E formed from coordinate-wise ratios.
OperatorData certificate_quantity(const Polynomial& poly, std::span<const Complex> z,
                                  const NormIndex& p);

/// Single-threaded reference kernels. Same contracts as above; kept so the
/// parallel versions can be checked against them and benchmarked.
namespace serial {
std::vector<Complex> weierstrass_correction(const Polynomial& poly, std::span<const Complex> z);
Distances distances(std::span<const Complex> z);
}  // namespace serial

}  // namespace dkcert
