#include <algorithm>
#include <random>

#include "doctest.h"
#include "dkcert/error.hpp"
#include "dkcert/polynomial.hpp"
#include "support/corpus.hpp"

using namespace dkcert;
using dkcert::testing::naive_evaluate;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dkcert::Error");
  return ErrorCode::ParseError;
}

void check_coeffs(const Polynomial& p, std::vector<Complex> expected) {
  const auto c = p.coefficients();
  REQUIRE(c.size() == expected.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i].real() == doctest::Approx(expected[i].real()));
    CHECK(c[i].imag() == doctest::Approx(expected[i].imag()));
  }
}

}  // namespace

TEST_CASE("from_coefficients normalizes to monic") {
  const std::vector<Complex> a{-1.0, 0.0};
  check_coeffs(Polynomial::from_coefficients(a, 1.0), {-1.0, 0.0});
  const std::vector<Complex> b{-2.0, 0.0};
  const auto p = Polynomial::from_coefficients(b, 2.0);
  check_coeffs(p, {-1.0, 0.0});
  CHECK(p.degree() == 2);

  const std::vector<Complex> one{-1.0};
  CHECK(code_of([&] { Polynomial::from_coefficients(one, 1.0); }) == ErrorCode::DegreeTooSmall);
  CHECK(code_of([&] { Polynomial::from_coefficients(a, 0.0); }) ==
        ErrorCode::ZeroLeadingCoefficient);
  const std::vector<Complex> big(101, 0.5);
  CHECK(code_of([&] { Polynomial::from_coefficients(big, 1.0); }) == ErrorCode::DegreeTooLarge);
  CHECK(Polynomial::from_coefficients(big, 1.0, 200).degree() == 101);
}

TEST_CASE("from_roots expands the product of linear factors") {
  check_coeffs(Polynomial::from_roots(std::vector<Complex>{1.0, -1.0}), {-1.0, 0.0});
  check_coeffs(Polynomial::from_roots(std::vector<Complex>{0.0, 1.0, -1.0}), {0.0, -1.0, 0.0});
  check_coeffs(Polynomial::from_roots(std::vector<Complex>{1.0, 2.0}), {2.0, -3.0});
  CHECK(code_of([] { Polynomial::from_roots(std::vector<Complex>{1.0, 1.0}); }) ==
        ErrorCode::DuplicateRoots);
  CHECK(code_of([] { Polynomial::from_roots(std::vector<Complex>{1.0}); }) ==
        ErrorCode::DegreeTooSmall);
}

TEST_CASE("evaluate") {
  const auto sq = Polynomial::from_roots(std::vector<Complex>{1.0, -1.0});
  CHECK(evaluate(sq, 2.0) == Complex(3.0, 0.0));
  CHECK(evaluate(sq, 1.0) == Complex(0.0, 0.0));
  const auto cubic = Polynomial::from_roots(std::vector<Complex>{0.0, 1.0, -1.0});
  const Complex v = evaluate(cubic, Complex(0.0, 2.0));
  CHECK(v.real() == doctest::Approx(0.0));
  CHECK(v.imag() == doctest::Approx(-10.0));
}

TEST_CASE("property: constructed roots are zeros") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 19;
    std::vector<Complex> roots(n);
    for (auto& r : roots) r = testing::random_in_disk(rng);
    const auto poly = Polynomial::from_roots(roots);
    for (const Complex& r : roots) {
      // Scale: sum of |c_k||r|^k + |r|^n bounds the magnitude of the terms.
      double scale = std::pow(std::abs(r), static_cast<double>(n));
      const auto c = poly.coefficients();
      for (std::size_t k = 0; k < n; ++k) scale += std::abs(c[k]) * std::pow(std::abs(r), k);
      CHECK(std::abs(evaluate(poly, r)) <= 1e-10 * std::max(scale, 1.0));
    }
  }
}

TEST_CASE("property: Horner matches power-sum evaluation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 19;
    const auto coeffs = testing::random_coefficients(rng, n);
    const auto poly = Polynomial::from_coefficients(coeffs, 1.0);
    const Complex x = testing::random_in_disk(rng, 1.5);
    const Complex h = evaluate(poly, x);
    const Complex ref = naive_evaluate(poly, x);
    double scale = std::pow(std::abs(x), static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) scale += std::abs(coeffs[k]) * std::pow(std::abs(x), k);
    CHECK(std::abs(h - ref) <= 1e-12 * scale);
  }
}

TEST_CASE("property: from_roots is permutation invariant") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 19;
    const auto roots = testing::separated_roots(rng, n, 0.01);
    auto shuffled = roots;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto pa = Polynomial::from_roots(roots);
    const auto pb = Polynomial::from_roots(shuffled);
    const auto a = pa.coefficients();
    const auto b = pb.coefficients();
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(a[k] - b[k]) <= 1e-14 * std::max(1.0, std::abs(a[k])));
    }
  }
}
