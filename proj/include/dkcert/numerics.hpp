#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dkcert/norm.hpp"
#include "dkcert/polynomial.hpp"

namespace dkcert::numerics {

using ScalarFunction = std::function<double(double)>;

inline constexpr int kMaxBisectionSteps = 200;
inline constexpr int kMaxGoldenSteps = 400;

/// Interval with the function values at its ends. For a root search the
/// values must differ in sign.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  /// Evaluates f at both ends. Throws DomainViolation unless lo < hi.
  static Bracket around(const ScalarFunction& f, double lo, double hi);
};

/// Root of f inside the bracket, returned once the bracket is narrower than
/// tol (or cannot shrink further in double precision).
/// Throws NoSignChange, ConvergenceFailure after kMaxBisectionSteps.
double bisect(const ScalarFunction& f, Bracket bracket, double tol);
double bisect(const ScalarFunction& f, double lo, double hi, double tol);

struct Minimum {
  double x;
  double fx;
};

/// Golden-section search for a unimodal f on [lo, hi].
Minimum minimize_1d(const ScalarFunction& f, double lo, double hi, double tol);

/// Scans `samples` equally spaced points of [lo, hi], then refines around the
/// best sample with golden-section search.
Minimum scan_minimize(const ScalarFunction& f, double lo, double hi, std::size_t samples,
                      double tol);

struct Matching {
  std::vector<std::size_t> permutation;  // computed[i] pairs with truth[permutation[i]]
  double error = 0.0;                    // || computed - truth o permutation ||_p
};

/// Largest size searched exhaustively by match_roots.
inline constexpr std::size_t kExhaustiveMatchLimit = 8;

/// Permutation of `truth` closest to `computed` in the p-norm. Exhaustive up
/// to kExhaustiveMatchLimit, greedy nearest neighbour plus pairwise swaps above.
Matching match_roots(std::span<const Complex> computed, std::span<const Complex> truth,
                     const NormIndex& p);

Matching match_roots_exhaustive(std::span<const Complex> computed, std::span<const Complex> truth,
                                const NormIndex& p);
Matching match_roots_greedy(std::span<const Complex> computed, std::span<const Complex> truth,
                            const NormIndex& p);

}  // namespace dkcert::numerics
