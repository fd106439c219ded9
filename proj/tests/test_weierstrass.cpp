#include <random>

#include "doctest.h"
#include "dkcert/error.hpp"
#include "dkcert/weierstrass.hpp"
#include "support/corpus.hpp"

using namespace dkcert;

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

const std::vector<NormIndex> kNorms{NormIndex::one(), NormIndex::two(), NormIndex(3.0),
                                    NormIndex::infinity()};

}  // namespace

TEST_CASE("conjugate exponent and NormIndex") {
  CHECK(conjugate_exponent(2.0) == 2.0);
  CHECK(conjugate_exponent(kInf) == 1.0);
  CHECK(conjugate_exponent(1.0) == kInf);
  CHECK(conjugate_exponent(4.0) == doctest::Approx(4.0 / 3.0));
  CHECK(code_of([] { conjugate_exponent(0.5); }) == ErrorCode::InvalidExponent);
  CHECK(code_of([] { NormIndex(std::nan("")); }) == ErrorCode::InvalidExponent);

  CHECK(NormIndex::one().inv_q() == 0.0);
  CHECK(NormIndex::infinity().inv_p() == 0.0);
  CHECK(NormIndex::infinity().inv_q() == 1.0);
  for (double p : {1.0, 1.5, 2.0, 3.0, 7.0}) {
    const NormIndex idx(p);
    CHECK(idx.inv_p() + idx.inv_q() == doctest::Approx(1.0));
  }
}

TEST_CASE("p_norm") {
  const std::vector<Complex> v{3.0, Complex(0.0, 4.0)};
  CHECK(p_norm(v, NormIndex::two()) == doctest::Approx(5.0));
  CHECK(p_norm(v, NormIndex::infinity()) == 4.0);
  CHECK(p_norm(v, NormIndex::one()) == 7.0);
  CHECK(p_norm(v, NormIndex(3.0)) == doctest::Approx(std::cbrt(27.0 + 64.0)));
  const std::vector<Complex> tiny{1e-200, 1e-200};
  CHECK(p_norm(tiny, NormIndex(3.0)) == doctest::Approx(1e-200 * std::cbrt(2.0)));
}

TEST_CASE("weierstrass_correction") {
  const auto sq = Polynomial::from_roots(std::vector<Complex>{1.0, -1.0});
  auto w = weierstrass_correction(sq, PointVector{1.0, -1.0});
  CHECK(w[0] == Complex(0.0, 0.0));
  CHECK(w[1] == Complex(0.0, 0.0));

  w = weierstrass_correction(sq, PointVector{2.0, -2.0});
  CHECK(w[0].real() == doctest::Approx(0.75));
  CHECK(w[1].real() == doctest::Approx(-0.75));

  const auto q = Polynomial::from_roots(std::vector<Complex>{1.0, 2.0});
  w = weierstrass_correction(q, PointVector{0.0, 4.0});
  CHECK(w[0].real() == doctest::Approx(-0.5));
  CHECK(w[1].real() == doctest::Approx(1.5));

  const std::vector<Complex> dup{1.0, 1.0};
  CHECK(code_of([&] { weierstrass_correction(sq, dup); }) ==
        ErrorCode::DistinctCoordinatesViolated);
  CHECK(code_of([&] { serial::weierstrass_correction(sq, dup); }) ==
        ErrorCode::DistinctCoordinatesViolated);
  const std::vector<Complex> close{1.0, Complex(1.0, 1e-301)};
  CHECK(code_of([&] { weierstrass_correction(sq, close); }) == ErrorCode::NonFiniteValue);
  CHECK(code_of([&] { weierstrass_correction(sq, std::vector<Complex>{1.0, 2.0, 3.0}); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { PointVector{2.0, 2.0}; }) == ErrorCode::DistinctCoordinatesViolated);
}

TEST_CASE("distances") {
  auto d = distances(PointVector{0.0, 1.0, 3.0});
  CHECK(d.d == std::vector<double>{1.0, 1.0, 2.0});
  CHECK(d.delta == 1.0);
  d = distances(PointVector{2.0, -2.0});
  CHECK(d.d == std::vector<double>{4.0, 4.0});
  CHECK(d.delta == 4.0);
  d = distances(PointVector{0.0, Complex(0.0, 1.0), Complex(0.0, -1.0)});
  CHECK(d.d == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(d.delta == 1.0);
  CHECK(code_of([] { distances(std::vector<Complex>{0.0, 1.0, 0.0}); }) ==
        ErrorCode::DistinctCoordinatesViolated);
}

TEST_CASE("certificate_quantity") {
  const auto sq = Polynomial::from_roots(std::vector<Complex>{1.0, -1.0});
  const PointVector z{2.0, -2.0};
  CHECK(certificate_quantity(sq, z, NormIndex::infinity()).e == doctest::Approx(0.1875));
  CHECK(certificate_quantity(sq, z, NormIndex::one()).e == doctest::Approx(0.375));
  for (const auto& p : kNorms) {
    CHECK(certificate_quantity(sq, PointVector{1.0, -1.0}, p).e == 0.0);
  }
}

TEST_CASE("parallel kernels agree bit-for-bit with the serial reference") {
  std::mt19937_64 rng(21);
  for (std::size_t n : {3u, 10u, 47u, 48u, 64u, 100u}) {
    const auto roots = testing::separated_roots(rng, n, 0.01);
    const auto poly = Polynomial::from_roots(roots);
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = roots[i] + 1e-3 * testing::random_in_disk(rng);
    CHECK(weierstrass_correction(poly, z) == serial::weierstrass_correction(poly, z));
    const auto a = distances(z);
    const auto b = serial::distances(z);
    CHECK(a.d == b.d);
    CHECK(a.delta == b.delta);
  }
}

TEST_CASE("property: trace identity sum(z - W) = -c_{n-1}") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 19;
    const auto poly = Polynomial::from_coefficients(testing::random_coefficients(rng, n), 1.0);
    std::vector<Complex> z(n);
    for (auto& zi : z) zi = testing::random_in_disk(rng, 2.0);
    const auto w = weierstrass_correction(poly, z);
    Complex sum = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += z[i] - w[i];
      scale += std::abs(z[i]) + std::abs(w[i]);
    }
    CHECK(std::abs(sum + poly.coefficients()[n - 1]) <= 1e-9 * std::max(1.0, scale));
  }
}

TEST_CASE("property: E(z) <= ||W||_p / delta") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 19;
    const auto poly = Polynomial::from_roots(testing::separated_roots(rng, n, 0.05));
    std::vector<Complex> z(n);
    for (auto& zi : z) zi = testing::random_in_disk(rng, 1.2);
    for (const auto& p : kNorms) {
      const auto data = certificate_quantity(poly, z, p);
      CHECK(data.e <= data.w_norm / data.delta * (1.0 + 1e-15));
    }
  }
}

TEST_CASE("property: scale and translation invariance") {
  // Degrees kept moderate: evaluation through expanded coefficients loses
  // accuracy roughly like (1 + |t|)^n once the roots are moved.
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const auto roots = testing::separated_roots(rng, n, 0.1);
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = roots[i] + 0.05 * testing::random_in_disk(rng);
    const Complex c = std::polar(0.5 + 1.5 * std::abs(testing::random_in_disk(rng)),
                                 std::arg(testing::random_in_disk(rng)));
    const Complex t = testing::random_in_disk(rng, 0.5);
    std::vector<Complex> roots2(n), z2(n);
    for (std::size_t i = 0; i < n; ++i) {
      roots2[i] = c * roots[i] + t;
      z2[i] = c * z[i] + t;
    }
    const auto p1 = Polynomial::from_roots(roots);
    const auto p2 = Polynomial::from_roots(roots2);
    for (const auto& p : kNorms) {
      const auto a = certificate_quantity(p1, z, p);
      const auto b = certificate_quantity(p2, z2, p);
      const double w_scale = p_norm(a.w, NormIndex::infinity());
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(b.w[i] - c * a.w[i]) <= 1e-9 * std::abs(c) * w_scale);
        CHECK(b.d[i] == doctest::Approx(std::abs(c) * a.d[i]).epsilon(1e-12));
      }
      CHECK(std::abs(a.e - b.e) <= 1e-10 * std::max(1.0, a.e));
    }
  }
}

TEST_CASE("property: W vanishes at a root-vector") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 19;
    const auto roots = testing::separated_roots(rng, n, 0.1);
    const auto poly = Polynomial::from_roots(roots);
    const auto w = weierstrass_correction(poly, roots);
    for (const Complex& wi : w) CHECK(std::abs(wi) <= 1e-10);
  }
}
