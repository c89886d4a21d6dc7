#include "hecke/quadrature.hpp"

#include <array>
#include <cmath>

namespace hecke {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Abscissae are symmetric; only the non-negative half is stored.
constexpr std::array<double, 8> kAbscissa = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeight = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeight = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double kronrod = 0.0;
  double error = 0.0;
};

PanelEstimate gauss_kronrod_panel(const std::function<double(double)>& f,
                                  double a, double b, long long& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  evaluations += 15;

  double result_gauss = kGaussWeight[3] * fc;
  double result_kronrod = kKronrodWeight[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kAbscissa[j];
    const double pair = f(center - dx) + f(center + dx);
    result_kronrod += kKronrodWeight[j] * pair;
    if (j % 2 == 1) {
      result_gauss += kGaussWeight[j / 2] * pair;
    }
  }
  PanelEstimate est;
  est.kronrod = result_kronrod * half;
  est.error = std::abs((result_kronrod - result_gauss) * half);
  return est;
}

void integrate_panel(const std::function<double(double)>& f, double a,
                     double b, double tol, int depth, int max_depth,
                     QuadratureResult& out) {
  PanelEstimate est = gauss_kronrod_panel(f, a, b, out.evaluations);
  if (est.error <= tol || est.error <= 1e-300) {
    out.value += est.kronrod;
    out.abs_error += est.error;
    return;
  }
  if (depth >= max_depth) {
    throw QuadratureError("adaptive quadrature failed to converge (depth limit)");
  }
  const double mid = 0.5 * (a + b);
  ++out.subdivisions;
  integrate_panel(f, a, mid, 0.5 * tol, depth + 1, max_depth, out);
  integrate_panel(f, mid, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           int max_depth) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (abs_tol < 0 || rel_tol < 0 || (abs_tol == 0 && rel_tol == 0)) {
    throw std::invalid_argument("integrate: tolerances must be positive");
  }
  QuadratureResult out;
  PanelEstimate whole = gauss_kronrod_panel(f, a, b, out.evaluations);
  const double tol =
      std::max(abs_tol, rel_tol * std::abs(whole.kronrod));
  if (whole.error <= tol) {
    out.value = whole.kronrod;
    out.abs_error = whole.error;
    return out;
  }
  const double mid = 0.5 * (a + b);
  out.subdivisions = 1;
  integrate_panel(f, a, mid, 0.5 * tol, 1, max_depth, out);
  integrate_panel(f, mid, b, 0.5 * tol, 1, max_depth, out);
  return out;
}

}  // namespace hecke
