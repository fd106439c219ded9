#include "dkcert/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dkcert/error.hpp"

namespace dkcert::numerics {

Bracket Bracket::around(const ScalarFunction& f, double lo, double hi) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::DomainViolation, "bracket requires lo < hi");
  }
  return Bracket{lo, hi, f(lo), f(hi)};
}

double bisect(const ScalarFunction& f, Bracket b, double tol) {
  if (!(b.lo < b.hi)) throw Error(ErrorCode::DomainViolation, "bracket requires lo < hi");
  if (!(tol > 0.0)) throw Error(ErrorCode::DomainViolation, "tolerance must be positive");
  if (b.f_lo == 0.0) return b.lo;
  if (b.f_hi == 0.0) return b.hi;
  if (std::signbit(b.f_lo) == std::signbit(b.f_hi)) {
    throw Error(ErrorCode::NoSignChange, "f(lo) and f(hi) share a sign");
  }
  for (int step = 0; step < kMaxBisectionSteps; ++step) {
    const double mid = b.lo + 0.5 * (b.hi - b.lo);
    if (b.hi - b.lo <= tol || mid <= b.lo || mid >= b.hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(b.f_lo)) {
      b.lo = mid;
      b.f_lo = fm;
    } else {
      b.hi = mid;
      b.f_hi = fm;
    }
  }
  throw Error(ErrorCode::ConvergenceFailure, "bisection did not reach tolerance");
}

double bisect(const ScalarFunction& f, double lo, double hi, double tol) {
  return bisect(f, Bracket::around(f, lo, hi), tol);
}

Minimum minimize_1d(const ScalarFunction& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw Error(ErrorCode::DomainViolation, "interval requires lo < hi");
  if (!(tol > 0.0)) throw Error(ErrorCode::DomainViolation, "tolerance must be positive");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int step = 0; step < kMaxGoldenSteps; ++step) {
    if (b - a <= tol) {
      const double x = fc < fd ? c : d;
      return {x, std::min(fc, fd)};
    }
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  throw Error(ErrorCode::ConvergenceFailure, "golden-section search did not reach tolerance");
}

Minimum scan_minimize(const ScalarFunction& f, double lo, double hi, std::size_t samples,
                      double tol) {
  if (samples < 3) throw Error(ErrorCode::DomainViolation, "scan needs at least 3 samples");
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  std::size_t best = 0;
  double best_f = f(lo);
  for (std::size_t i = 1; i < samples; ++i) {
    const double fi = f(lo + step * static_cast<double>(i));
    if (fi < best_f) {
      best_f = fi;
      best = i;
    }
  }
  const double a = lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
  const double b = lo + step * static_cast<double>(std::min(best + 1, samples - 1));
  return minimize_1d(f, a, b, tol);
}

namespace {

double matched_error(std::span<const Complex> computed, std::span<const Complex> truth,
                     const std::vector<std::size_t>& perm, const NormIndex& p) {
  std::vector<Complex> diff(computed.size());
  for (std::size_t i = 0; i < computed.size(); ++i) diff[i] = computed[i] - truth[perm[i]];
  return p_norm(diff, p);
}

void check_sizes(std::span<const Complex> computed, std::span<const Complex> truth) {
  if (computed.size() != truth.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matching vectors of different length");
  }
}

}  // namespace

Matching match_roots_exhaustive(std::span<const Complex> computed, std::span<const Complex> truth,
                                const NormIndex& p) {
  check_sizes(computed, truth);
  std::vector<std::size_t> perm(computed.size());
  std::iota(perm.begin(), perm.end(), 0);
  Matching best{perm, matched_error(computed, truth, perm, p)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double err = matched_error(computed, truth, perm, p);
    if (err < best.error) best = {perm, err};
  }
  return best;
}

Matching match_roots_greedy(std::span<const Complex> computed, std::span<const Complex> truth,
                            const NormIndex& p) {
  check_sizes(computed, truth);
  const std::size_t n = computed.size();

  // Globally closest remaining pair first.
  std::vector<std::size_t> perm(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    double best = kInf;
    std::size_t bi = n;
    std::size_t bj = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (perm[i] != n) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        const double dist = std::abs(computed[i] - truth[j]);
        if (dist < best) {
          best = dist;
          bi = i;
          bj = j;
        }
      }
    }
    perm[bi] = bj;
    used[bj] = true;
  }

  double err = matched_error(computed, truth, perm, p);
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::swap(perm[i], perm[j]);
        const double trial = matched_error(computed, truth, perm, p);
        if (trial < err) {
          err = trial;
          improved = true;
        } else {
          std::swap(perm[i], perm[j]);
        }
      }
    }
  }
  return {std::move(perm), err};
}

Matching match_roots(std::span<const Complex> computed, std::span<const Complex> truth,
                     const NormIndex& p) {
  if (computed.size() <= kExhaustiveMatchLimit) return match_roots_exhaustive(computed, truth, p);
  return match_roots_greedy(computed, truth, p);
}

}  // namespace dkcert::numerics
