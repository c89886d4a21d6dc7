#pragma once

#include <array>
#include <complex>
#include <utility>

namespace hecke {

// Gamma(z) by the Lanczos approximation (g = 7, 9 coefficients), reflected
// to Re z < 1/2 through Gamma(z) Gamma(1-z) = pi / sin(pi z).
// Throws std::domain_error at the poles z = 0, -1, -2, ...
std::complex<double> complex_gamma(std::complex<double> z);

// |Gamma(sigma + i t)|.
double gamma_abs(double sigma, double t);

// zeta(sigma + i t) for sigma > 0, s != 1.  The eta (alternating) series with
// Chebyshev-coefficient acceleration carries |t| <= 60; beyond that an
// Euler-Maclaurin evaluation takes over; 0 < sigma < 0.4 routes through the
// functional equation.  Accurate to well below 1e-8 on sigma >= 0.4,
// |t| <= 60.  Throws std::domain_error for sigma <= 0 or s = 1.
std::complex<double> zeta_complex(double sigma, double t);

// Residues of Gamma(s)/(s-1)^2 * zeta(4s-2)/zeta(2s-1) * (x/2pi)^s at s = 1
// (coefficient of x; equals zeta(2)/pi = pi/6) and at s = 3/4 (coefficient
// of x^{3/4}; equals 2^{5/4} Gamma(3/4) / (pi^{3/4} zeta(1/2)) < 0).
std::pair<double, double> residue_constants();

// The rectangle contour for the inverse Mellin integral of the kernel sum:
// vertical edges at Re s = 1 (|Im s| >= 7, segments C1 above and C5 below),
// horizontal edges at Im s = +-7 between Re s = 1 and Re s = 1/2 (C2, C4),
// and the central vertical edge at Re s = 1/2 (C3).  The ordinate 7 keeps
// the edge below the first zeta zeros at height ~14.13 of zeta(2s - 1).
enum class Segment { C1, C2, C3, C4, C5 };

enum class SegmentScale { linear, sqrt };  // bound scales as coef * x vs coef * sqrt(x)

struct SegmentBound {
  Segment segment = Segment::C1;
  // Coefficient of x (resp. sqrt x) bounding the bare segment integral of
  // |(x/2pi)^s Gamma(s)/(s-1)^2 * zeta(4s-2)/zeta(2s-1)| |ds| -- i.e. without
  // the 1/(2 pi i) Mellin prefactor, so directly comparable to `reference`.
  double computed = 0.0;
  double reference = 0.0;  // 5e-7 (C1/C5), 2e-6 (C2/C4), 2.48218 (C3)
  SegmentScale scale = SegmentScale::linear;
};

struct AnalyticOptions {
  double quad_rel_tol = 1e-7;
  int max_depth = 40;
  double tail_cut = 200.0;  // C1/C5 are integrated to here; the remainder is
                            // bounded by the Gamma decay and added on
};

// Certified upper bound for one contour segment.  Throws QuadratureError on
// non-convergence (e.g. when max_depth is too small).
SegmentBound contour_segment_bound(Segment seg, const AnalyticOptions& opts = {});

std::array<SegmentBound, 5> all_segment_bounds(const AnalyticOptions& opts = {});

// residue_1 * x - |residue_3/4| * x^{3/4} - (segment bounds at x) / (2 pi):
// the closed lower bound the contour shift yields for the Liouville-weighted
// kernel sum; dominates r_lower_bound(x) on [2, 1e5].
double assembled_lower_bound(double x, const std::array<SegmentBound, 5>& bounds);

}  // namespace hecke
