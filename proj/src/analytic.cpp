#include "hecke/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hecke/quadrature.hpp"

namespace hecke {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(const Complex& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// Lanczos coefficients, g = 7.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// --- zeta implementations ------------------------------------------------

// Alternating-series acceleration for eta(s) = (1 - 2^{1-s}) zeta(s) with
// Chebyshev-polynomial coefficients d_k; the truncation error decays like
// (3 + sqrt 8)^{-n} against a growth of e^{pi |t| / 2}, so n scales with |t|.
Complex zeta_eta_accelerated(const Complex& s) {
  const double t = std::abs(s.imag());
  const int n = std::max(40, static_cast<int>(std::ceil(0.9 * t)) + 35);
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  double term = 1.0 / n;  // (n+j-1)! 4^j / ((n-j)! (2j)!) at j = 0
  double partial = term;
  d[0] = static_cast<double>(n) * partial;
  for (int j = 0; j + 1 <= n; ++j) {
    term *= 4.0 * (n + j) * (n - j) /
            ((2.0 * j + 1.0) * (2.0 * j + 2.0));
    partial += term;
    d[static_cast<std::size_t>(j) + 1] = static_cast<double>(n) * partial;
  }
  Complex sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const Complex decay = std::exp(-s * std::log(static_cast<double>(k + 1)));
    const double coefficient = (d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)]);
    sum += (k % 2 == 0 ? 1.0 : -1.0) * coefficient * decay;
  }
  const Complex eta = -sum / d[static_cast<std::size_t>(n)];
  const Complex scale = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
  return eta / scale;
}

// Bernoulli(2k) / (2k)! for the Euler-Maclaurin correction terms.
constexpr std::array<double, 13> kBernoulliOverFactorial = {
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812522e-19,
    3.5347070396294675e-21};

Complex zeta_euler_maclaurin(const Complex& s) {
  const int N =
      std::max(25, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))) + 12);
  Complex sum = 0.0;
  for (int n = 1; n < N; ++n) {
    sum += std::exp(-s * std::log(static_cast<double>(n)));
  }
  const double logN = std::log(static_cast<double>(N));
  const Complex n_pow = std::exp(-s * logN);  // N^{-s}
  sum += n_pow * static_cast<double>(N) / (s - 1.0);
  sum += 0.5 * n_pow;
  Complex pochhammer = s;                          // s (s+1) ... (s+2k-2)
  Complex n_factor = n_pow / static_cast<double>(N);  // N^{-s-2k+1}
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    sum += kBernoulliOverFactorial[k] * pochhammer * n_factor;
    const double shift = 2.0 * static_cast<double>(k) + 1.0;
    pochhammer *= (s + shift) * (s + shift + 1.0);
    n_factor /= static_cast<double>(N) * static_cast<double>(N);
  }
  return sum;
}

Complex zeta_right_halfplane(const Complex& s) {
  return (std::abs(s.imag()) <= 60.0) ? zeta_eta_accelerated(s)
                                      : zeta_euler_maclaurin(s);
}

// zeta on sigma >= 0.4 directly, elsewhere through the functional equation
//   zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s).
// Accepts any sigma (used by the contour at sigma = 0) except the pole s = 1.
Complex zeta_internal(const Complex& s) {
  if (s == Complex(0.0, 0.0)) return Complex(-0.5, 0.0);
  if (s == Complex(1.0, 0.0)) {
    throw std::domain_error("zeta: pole at s = 1");
  }
  if (s.real() >= 0.4) return zeta_right_halfplane(s);
  if (std::abs(s.imag()) > 350.0) {
    throw std::domain_error(
        "zeta: functional-equation path is limited to |t| <= 350");
  }
  const Complex reflected = zeta_right_halfplane(1.0 - s);
  return std::exp(s * std::numbers::ln2) * std::pow(kPi, s - 1.0) *
         std::sin(0.5 * kPi * s) * complex_gamma(1.0 - s) * reflected;
}

// --- contour integrands ---------------------------------------------------

// |zeta(4 s - 2) / zeta(2 s - 1)| at s = sigma + i t.
double zeta_ratio_abs(double sigma, double t) {
  const Complex numerator = zeta_internal(Complex(4.0 * sigma - 2.0, 4.0 * t));
  const Complex denominator = zeta_internal(Complex(2.0 * sigma - 1.0, 2.0 * t));
  return std::abs(numerator) / std::abs(denominator);
}

// Vertical edge at Re s = 1 (C1 upward / C5 downward): the coefficient of x
// is int |Gamma(1+it)| |zeta(2+4it)| / (t^2 |zeta(1+2it)|) dt / (2 pi),
// the 2 pi coming from |(x / 2pi)^s| = x / 2pi on the edge.
double vertical_edge_integrand(double t) {
  return gamma_abs(1.0, t) * zeta_ratio_abs(1.0, t) / (t * t) / (2.0 * kPi);
}

// Bound on the dropped [T, inf) piece of the vertical edge:
// |Gamma(1+it)| <= 1.01 sqrt(2 pi t) e^{-pi t/2}, |zeta(2+4it)| <= zeta(2),
// and 1/|zeta(1+2it)| <= 45 (crude but ample; the Gamma decay leaves the
// whole tail below 1e-130 at T = 200).
double vertical_edge_tail(double T) {
  const double zeta2 = kPi * kPi / 6.0;
  return 1.01 * std::sqrt(2.0 * kPi) * zeta2 * 45.0 *
         std::exp(-0.5 * kPi * T) / std::sqrt(T) * (2.0 / kPi) / (2.0 * kPi);
}

// Horizontal edge at Im s = +-7 (C2 / C4): coefficient of x for x >= 1 is
// int_{1/2}^{1} |Gamma(sigma + 7i)| |zeta ratio| /
//              (((sigma-1)^2 + 49) (2 pi)^sigma) dsigma.
double horizontal_edge_integrand(double sigma, double t_sign) {
  const double t = 7.0 * t_sign;
  const double denom = (sigma - 1.0) * (sigma - 1.0) + 49.0;
  return gamma_abs(sigma, t) * zeta_ratio_abs(sigma, t) /
         (denom * std::pow(2.0 * kPi, sigma));
}

// Central vertical edge at Re s = 1/2 (C3): coefficient of sqrt(x) is
// int_{-7}^{7} |Gamma(1/2+it)| |zeta ratio| / ((1/4 + t^2) sqrt(2 pi)) dt.
double central_edge_integrand(double t) {
  return gamma_abs(0.5, t) * zeta_ratio_abs(0.5, t) /
         ((0.25 + t * t) * std::sqrt(2.0 * kPi));
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
  if (is_nonpositive_integer(z)) {
    throw std::domain_error("complex_gamma: pole at a non-positive integer");
  }
  if (z.real() < 0.5) {
    if (std::abs(z.imag()) > 220.0) {
      throw std::domain_error(
          "complex_gamma: reflection overflows for |Im z| > 220 left of 1/2");
    }
    return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  }
  const Complex zm1 = z - 1.0;
  Complex acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (zm1 + static_cast<double>(i));
  }
  const Complex t = zm1 + (kLanczosG + 0.5);
  return std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * acc;
}

double gamma_abs(double sigma, double t) {
  return std::abs(complex_gamma(Complex(sigma, t)));
}

std::complex<double> zeta_complex(double sigma, double t) {
  if (!(sigma > 0.0)) {
    throw std::domain_error("zeta_complex: requires sigma > 0");
  }
  if (sigma == 1.0 && t == 0.0) {
    throw std::domain_error("zeta_complex: pole at s = 1");
  }
  return zeta_internal(Complex(sigma, t));
}

std::pair<double, double> residue_constants() {
  const double residue_one = kPi / 6.0;  // zeta(2) / pi
  const double zeta_half = zeta_complex(0.5, 0.0).real();
  const double residue_three_quarters =
      std::pow(2.0, 1.25) * gamma_abs(0.75, 0.0) /
      (std::pow(kPi, 0.75) * zeta_half);
  return {residue_one, residue_three_quarters};
}

SegmentBound contour_segment_bound(Segment seg, const AnalyticOptions& opts) {
  SegmentBound out;
  out.segment = seg;
  switch (seg) {
    case Segment::C1:
    case Segment::C5: {
      // The two edges are mirror images (the integrand is even in t);
      // each is integrated over its own parameterization.
      const double sign = (seg == Segment::C1) ? 1.0 : -1.0;
      QuadratureResult q = integrate(
          [sign](double t) { return vertical_edge_integrand(sign * t); }, 7.0,
          opts.tail_cut, 0.0, opts.quad_rel_tol, opts.max_depth);
      out.computed = q.value + q.abs_error + vertical_edge_tail(opts.tail_cut);
      out.reference = 5e-7;
      out.scale = SegmentScale::linear;
      break;
    }
    case Segment::C2:
    case Segment::C4: {
      const double sign = (seg == Segment::C2) ? 1.0 : -1.0;
      QuadratureResult q = integrate(
          [sign](double sigma) {
            return horizontal_edge_integrand(sigma, sign);
          },
          0.5, 1.0, 0.0, opts.quad_rel_tol, opts.max_depth);
      out.computed = q.value + q.abs_error;
      out.reference = 2e-6;
      out.scale = SegmentScale::linear;
      break;
    }
    case Segment::C3: {
      QuadratureResult q = integrate(central_edge_integrand, -7.0, 7.0, 0.0,
                                     opts.quad_rel_tol, opts.max_depth);
      out.computed = q.value + q.abs_error;
      out.reference = 2.48218;
      out.scale = SegmentScale::sqrt;
      break;
    }
  }
  return out;
}

std::array<SegmentBound, 5> all_segment_bounds(const AnalyticOptions& opts) {
  return {contour_segment_bound(Segment::C1, opts),
          contour_segment_bound(Segment::C2, opts),
          contour_segment_bound(Segment::C3, opts),
          contour_segment_bound(Segment::C4, opts),
          contour_segment_bound(Segment::C5, opts)};
}

double assembled_lower_bound(double x,
                             const std::array<SegmentBound, 5>& bounds) {
  if (!(x > 1.0)) {
    throw std::invalid_argument("assembled_lower_bound: requires x > 1");
  }
  const auto [residue_one, residue_three_quarters] = residue_constants();
  double loss = 0.0;
  for (const SegmentBound& b : bounds) {
    const double growth =
        (b.scale == SegmentScale::linear) ? x : std::sqrt(x);
    loss += b.computed * growth;
  }
  return residue_one * x -
         std::abs(residue_three_quarters) * std::pow(x, 0.75) -
         loss / (2.0 * kPi);
}

}  // namespace hecke
