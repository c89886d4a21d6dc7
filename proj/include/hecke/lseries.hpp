#pragma once

#include <functional>

#include "hecke/character.hpp"

namespace hecke {

// Cutoff selectors for the series evaluators: either a fixed number of terms
// or a certified bound on the neglected tail.
struct TermCount {
  long long n = 0;
};
struct Tolerance {
  double value = 1e-12;
};

struct SeriesResult {
  double value = 0.0;
  // Certified bound on |true sum - value|: geometric tail envelope plus the
  // per-term kernel error bounds plus a rounding cushion.
  double error_bound = 0.0;
  long long terms = 0;  // largest index summed
};

// n-th coefficient of the Fourier expansion attached to the twisted
// character: sum of epsilon(u, v) * u over lattice points u, v > 0 with
// u^2 + D v^2 = 4n and u = v (mod 2) for odd D, and of epsilon(u, v) * 2u
// over u^2 + 2 v^2 = n for D = 8.  Always an integer.
long long series_coefficient(const TwistedCharacter& chi, long long n);

// Quadratic-exponent part:  R = sum_{n>=1} epsilon(n) * n * f(2 pi n^2 / B),
// epsilon the twisted character restricted to the rationals.
SeriesResult r_series(const TwistedCharacter& chi, TermCount cutoff);
SeriesResult r_series(const TwistedCharacter& chi, Tolerance tol);

// Linear-exponent part:  C = sum_{n>=1} a_n * f(2 pi n / B).
SeriesResult c_series(const TwistedCharacter& chi, TermCount cutoff);
SeriesResult c_series(const TwistedCharacter& chi, Tolerance tol);

// Generic signed kernel sum  S = sum_{n>=1} w(n) * n * f(2 pi n^2 / x)  for
// any weight with |w(n)| <= 1, with the same certified tail as the R series.
SeriesResult weighted_kernel_sum(const std::function<int(long long)>& weight,
                                 double x, double tolerance);

// S with w = Liouville lambda: the extremal comparison sum that every
// completely multiplicative +-1 weight dominates.
SeriesResult liouville_weighted_sum(double x, double tolerance = 1e-10);

struct EvaluationRecord {
  long long D = 0;
  long long d = 1;
  int family = -1;
  long long B = 0;
  int root_number = -1;
  SeriesResult R;
  SeriesResult C;
  double lambda_prime = 0.0;        // 2 (R + C): completed-series derivative
  double lambda_prime_error = 0.0;  // certified bound
  double l_prime = 0.0;             // (4 pi / B) (R + C): derivative at s = 1
  double l_prime_error = 0.0;
};

// Central-derivative evaluation through the identity
//   (1/2) Lambda'(1) = R + C,
// valid when the functional equation is odd.  Throws std::invalid_argument
// when the root number is +1 (the derivative identity does not apply; the
// central value itself is then generically nonzero).
EvaluationRecord central_derivative(const TwistedCharacter& chi, Tolerance tol);

}  // namespace hecke
