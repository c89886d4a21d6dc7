#pragma once

namespace hecke {

// A kernel evaluation together with a certified absolute-error bound.
// When e^{-x} underflows the double range the `underflow` flag is set,
// `value` is 0, and `abs_error` is a true (tiny) bound on the dropped mass.
struct KernelValue {
  double value = 0.0;
  double abs_error = 0.0;
  bool underflow = false;
};

// Gamma(0, x) = E_1(x) = int_x^inf e^{-t} / t dt, for x > 0.
// Power series with logarithmic part below x = 1, modified-Lentz continued
// fraction above; both branches agree to 1e-12 across the switch.
// Throws std::domain_error for x <= 0 (the integral diverges at 0).
KernelValue gamma_zero(double x);

// The exponential-decay weight f(x) = Gamma(0, x) / x.  Its Mellin transform
// on Re s > 1 is Gamma(s) / (s - 1)^2, which is what turns a lattice sum of
// f values into the derivative of a completed Dirichlet series at its
// symmetry point.  Strictly positive, strictly decreasing, f(x) < e^{-x}/x^2.
KernelValue kernel_f(double x);

// | int_0^inf f(x) x^{s-1} dx  -  Gamma(s)/(s-1)^2 |  by adaptive quadrature,
// for real 1 < s < 4.  A direct numerical witness of the Mellin pairing.
double mellin_identity_residual(double s);

// Series / continued-fraction switch point for gamma_zero.
inline constexpr double kKernelBranchSwitch = 1.0;
// Above this x the kernel reports underflow instead of subnormal noise.
inline constexpr double kKernelUnderflowSwitch = 700.0;

namespace kernel_detail {
// Individual branches, exposed so tests can assert overlap agreement.
double e1_series(double x);              // intended for 0 < x <= 2
double e1_continued_fraction(double x);  // intended for x >= 0.5
}  // namespace kernel_detail

}  // namespace hecke
