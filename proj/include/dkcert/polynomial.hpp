#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dkcert {

using Complex = std::complex<double>;

/// Largest degree accepted unless a caller raises it. Products of n-1
/// coordinate differences are formed directly, so very large n overflows.
inline constexpr std::size_t kDefaultDegreeCap = 100;

/// Monic complex polynomial z^n + c_{n-1} z^{n-1} + ... + c_0 with n >= 2.
///
/// Coefficients are stored in ascending power order; the leading 1 is not
/// stored. Instances are immutable once built.
class Polynomial {
 public:
  /// Normalizes coeffs[i] / leading. `coeffs` holds c_0 ... c_{n-1}.
  static Polynomial from_coefficients(std::span<const Complex> coeffs, Complex leading,
                                      std::size_t degree_cap = kDefaultDegreeCap);

  /// Expands prod (z - r_i). Roots must be pairwise distinct.
  static Polynomial from_roots(std::span<const Complex> roots,
                               std::size_t degree_cap = kDefaultDegreeCap);

  std::size_t degree() const noexcept { return coeffs_.size(); }

  /// c_0 ... c_{n-1}.
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  /// Horner evaluation.
  Complex operator()(Complex x) const noexcept;

 private:
  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<Complex> coeffs_;
};

inline Complex evaluate(const Polynomial& poly, Complex x) noexcept { return poly(x); }

}  // namespace dkcert
