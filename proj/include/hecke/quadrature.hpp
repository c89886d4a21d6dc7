#pragma once

#include <functional>
#include <stdexcept>

namespace hecke {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // accumulated local error estimates
  int subdivisions = 0;
  long long evaluations = 0;
};

// Adaptive Gauss-Kronrod 7/15 integration of f over [a, b].  Panels are
// bisected until the local Kronrod-Gauss error estimate falls below the
// panel's share of max(abs_tol, rel_tol * |whole-interval estimate|).
// Throws QuadratureError when max_depth levels of bisection are exhausted:
// non-convergence is always reported, never silently truncated.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           int max_depth = 40);

}  // namespace hecke
