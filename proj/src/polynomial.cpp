#include "dkcert/polynomial.hpp"

#include <string>

#include "dkcert/error.hpp"

namespace dkcert {

namespace {

void check_degree(std::size_t n, std::size_t cap) {
  if (n < 2) {
    throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(n) + " < 2");
  }
  if (n > cap) {
    throw Error(ErrorCode::DegreeTooLarge,
                "degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Polynomial Polynomial::from_coefficients(std::span<const Complex> coeffs, Complex leading,
                                         std::size_t degree_cap) {
  if (leading == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::ZeroLeadingCoefficient, "leading coefficient is zero");
  }
  check_degree(coeffs.size(), degree_cap);
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  if (leading != Complex(1.0, 0.0)) {
    for (auto& ci : c) ci /= leading;
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, std::size_t degree_cap) {
  const std::size_t n = roots.size();
  check_degree(n, degree_cap);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (roots[i] == roots[j]) {
        throw Error(ErrorCode::DuplicateRoots,
                    "roots " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }

  // full[k] is the coefficient of z^k; multiply in one linear factor at a time.
  std::vector<Complex> full(n + 1, Complex(0.0, 0.0));
  full[0] = 1.0;
  for (std::size_t m = 0; m < n; ++m) {
    const Complex r = roots[m];
    full[m + 1] = full[m];
    for (std::size_t k = m; k > 0; --k) {
      full[k] = full[k - 1] - r * full[k];
    }
    full[0] = -r * full[0];
  }
  full.pop_back();
  return Polynomial(std::move(full));
}

Complex Polynomial::operator()(Complex x) const noexcept {
  Complex acc(1.0, 0.0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * x + coeffs_[k];
  }
  return acc;
}

}  // namespace dkcert
