#include "hecke/kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hecke/quadrature.hpp"

namespace hecke {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kEps = std::numeric_limits<double>::epsilon();
}  // namespace

namespace kernel_detail {

double e1_series(double x) {
  // E_1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!)
  double sum = 0.0;
  double power_term = 1.0;  // x^k / k!
  for (int k = 1; k <= 60; ++k) {
    power_term *= x / k;
    const double term = power_term / k;
    sum += (k % 2 == 1) ? term : -term;
    if (term < 0.25 * kEps * (1.0 + std::abs(sum))) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

double e1_continued_fraction(double x) {
  // E_1(x) = e^{-x} / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))),
  // evaluated with the modified Lentz algorithm.
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 0.5 * kEps) break;
  }
  return std::exp(-x) * h;
}

}  // namespace kernel_detail

KernelValue gamma_zero(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_zero: requires x > 0");
  }
  KernelValue kv;
  if (x >= kKernelUnderflowSwitch) {
    // E_1(x) < e^{-x}/x; report the dropped mass instead of subnormal noise.
    kv.underflow = true;
    kv.value = 0.0;
    const double envelope = std::exp(-x);
    kv.abs_error = (envelope > 0.0)
                       ? 1.01 * envelope / x
                       : std::numeric_limits<double>::denorm_min();
    return kv;
  }
  if (x <= kKernelBranchSwitch) {
    kv.value = kernel_detail::e1_series(x);
    // Truncation is below machine precision by the stopping rule; the
    // dominant rounding comes from the -gamma - ln x head.
    kv.abs_error = 8.0 * kEps * (std::abs(std::log(x)) + 2.0);
  } else {
    kv.value = kernel_detail::e1_continued_fraction(x);
    kv.abs_error = 64.0 * kEps * kv.value +
                   std::numeric_limits<double>::denorm_min();
  }
  return kv;
}

KernelValue kernel_f(double x) {
  KernelValue e1 = gamma_zero(x);
  KernelValue kv;
  kv.underflow = e1.underflow;
  kv.value = e1.value / x;
  kv.abs_error = e1.abs_error / x + 2.0 * kEps * std::abs(kv.value) +
                 std::numeric_limits<double>::denorm_min();
  return kv;
}

double mellin_identity_residual(double s) {
  if (!(s > 1.0 && s < 4.0)) {
    throw std::domain_error("mellin_identity_residual: requires 1 < s < 4");
  }
  // int_0^inf f(x) x^{s-1} dx = int_0^1 E_1(x) x^{s-2} dx + int_1^inf ...
  //
  // On (0, 1] substitute x = e^{-u}:  int_0^U E_1(e^{-u}) e^{-(s-1)u} du.
  // For u beyond the double exponent range E_1(e^{-u}) = u - gamma + O(e^{-u}).
  auto left_integrand = [s](double u) {
    const double x = std::exp(-u);
    const double e1 = (x > 1e-300) ? gamma_zero(x).value : (u - kEulerGamma);
    return e1 * std::exp(-(s - 1.0) * u);
  };
  // e^{-(s-1)U} (U + 1) < 1e-14  once  (s-1)U > 33 + ln(U+1).
  const double U = 45.0 / (s - 1.0) + 45.0;
  const double split = std::min(5.0 / (s - 1.0) + 1.0, 0.5 * U);
  QuadratureResult left_a = integrate(left_integrand, 0.0, split, 1e-13, 1e-13);
  QuadratureResult left_b = integrate(left_integrand, split, U, 1e-13, 1e-13);

  // On [1, inf): E_1(x) x^{s-2} < e^{-x} x^{s-3} <= e^{-x} x for s < 4.
  auto right_integrand = [s](double x) {
    return gamma_zero(x).value * std::pow(x, s - 2.0);
  };
  const double X = 50.0 + 3.0 * s;
  QuadratureResult right = integrate(right_integrand, 1.0, X, 1e-13, 1e-13);

  const double transform = left_a.value + left_b.value + right.value;
  const double closed_form = std::tgamma(s) / ((s - 1.0) * (s - 1.0));
  return std::abs(transform - closed_form);
}

}  // namespace hecke
