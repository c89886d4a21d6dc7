#include "hecke/bounds.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hecke {

namespace {

int validated_sign(int s, const char* what) {
  if (s < -1 || s > 1) {
    throw std::invalid_argument(std::string(what) +
                                ": sign values must lie in {-1, 0, +1}");
  }
  return s;
}

}  // namespace

double r_lower_bound(double B) {
  if (!(B > 1.0)) {
    throw std::invalid_argument("r_lower_bound: requires B > 1");
  }
  return 0.5235 * B - 0.8458 * std::pow(B, 0.75) - 0.3951 * std::sqrt(B);
}

double c_trivial_bound(long long D, FieldParity parity) {
  if (D < 7) {
    throw std::invalid_argument("c_trivial_bound: requires D >= 7");
  }
  const double coefficient = (parity == FieldParity::odd) ? 0.0269 : 0.2369;
  return coefficient * static_cast<double>(D);
}

std::pair<double, double> gaussian_weighted_sum_check(double a) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("gaussian_weighted_sum_check: requires a > 0");
  }
  double sum = 0.0;
  for (long long n = 1;; ++n) {
    const double x = static_cast<double>(n);
    const double term = x * std::exp(-x * x / a);
    sum += term;
    // Remaining terms are dominated by a geometric series with ratio
    // e^{-(2n+1)/a} once n^2/a is past the peak at n ~ sqrt(a/2).
    if (x * x >= a && term < 1e-18 * (1.0 + sum)) break;
  }
  return {sum, 0.5 * a};
}

double trivial_bound_inner_constant() {
  // v = 9 onward contributes less than e^{-pi 81 / 2} < 1e-55.
  double sum = 0.0;
  for (long long v = 1; v <= 7; v += 2) {
    const double x = static_cast<double>(v);
    sum += std::exp(-std::numbers::pi * x * x / 2.0) / (x * x * x * x);
  }
  return sum;
}

int sign_weight(const SignAssignment& m, long long n) {
  if (n < 1) throw std::invalid_argument("sign_weight: n must be >= 1");
  validated_sign(m.default_sign, "sign_weight");
  int value = 1;
  for (const auto& [p, e] : factorize(n)) {
    auto it = m.primes.find(p);
    const int at_p =
        validated_sign(it == m.primes.end() ? m.default_sign : it->second,
                       "sign_weight");
    if (at_p == 0) return 0;
    if (at_p == -1 && e % 2 == 1) value = -value;
  }
  return value;
}

MonotonicityCheck multiplicative_monotonicity_check(const SignAssignment& hi,
                                                    const SignAssignment& lo,
                                                    double x,
                                                    double tolerance) {
  validated_sign(hi.default_sign, "multiplicative_monotonicity_check");
  validated_sign(lo.default_sign, "multiplicative_monotonicity_check");
  if (hi.default_sign < lo.default_sign) {
    throw std::invalid_argument(
        "multiplicative_monotonicity_check: default signs violate dominance");
  }
  auto value_at = [](const SignAssignment& m, long long p) {
    auto it = m.primes.find(p);
    return it == m.primes.end() ? m.default_sign : it->second;
  };
  for (const auto& [p, s] : hi.primes) {
    validated_sign(s, "multiplicative_monotonicity_check");
    if (s < value_at(lo, p)) {
      throw std::invalid_argument(
          "multiplicative_monotonicity_check: dominance fails at p = " +
          std::to_string(p));
    }
  }
  for (const auto& [p, s] : lo.primes) {
    validated_sign(s, "multiplicative_monotonicity_check");
    if (value_at(hi, p) < s) {
      throw std::invalid_argument(
          "multiplicative_monotonicity_check: dominance fails at p = " +
          std::to_string(p));
    }
  }

  const SeriesResult larger = weighted_kernel_sum(
      [&hi](long long n) { return sign_weight(hi, n); }, x, tolerance);
  const SeriesResult smaller = weighted_kernel_sum(
      [&lo](long long n) { return sign_weight(lo, n); }, x, tolerance);
  MonotonicityCheck out;
  out.larger = larger.value;
  out.smaller = smaller.value;
  out.slack = larger.error_bound + smaller.error_bound;
  out.holds = larger.value >= smaller.value - out.slack;
  return out;
}

VerdictReport certify_nonvanishing(long long D, long long d,
                                   const VerdictOptions& opts) {
  if (!(opts.tolerance > 0.0)) {
    throw std::invalid_argument("certify_nonvanishing: tolerance must be positive");
  }
  const DiscriminantClass cls = classify_discriminant(D);
  if (!cls.valid) {
    throw std::invalid_argument("certify_nonvanishing: " + cls.reason +
                                " (D = " + std::to_string(D) + ")");
  }
  if (d == 0 || !is_fundamental_discriminant(d)) {
    throw std::invalid_argument(
        "certify_nonvanishing: d must be 1 or a fundamental discriminant");
  }
  if (std::gcd(std::llabs(d), D) != 1) {
    throw std::invalid_argument("certify_nonvanishing: d must be coprime to D");
  }
  const bool even = cls.parity == FieldParity::even;
  if (even && d % 2 == 0) {
    throw std::invalid_argument(
        "certify_nonvanishing: even twists collide with the conductor when 8 | D");
  }

  const int sign_d = (d > 0) ? +1 : -1;
  // For 8 | D both families exist; pick the one with odd functional equation.
  const int family = even ? -sign_d : kronecker(2, D);
  const int W = family * sign_d;
  if (W != -1) {
    throw std::invalid_argument(
        "certify_nonvanishing: root number is +1 for (D, d) = (" +
        std::to_string(D) + ", " + std::to_string(d) +
        "); the completed series is even about the center, the derivative "
        "vanishes identically, and the central value is the natural "
        "invariant instead");
  }

  VerdictReport rep;
  rep.D = D;
  rep.d = d;
  rep.family = family;
  rep.B = (even ? 2 * D : D) * std::llabs(d);
  rep.root_number = W;
  rep.h = class_number(D);
  rep.r_lower = r_lower_bound(static_cast<double>(rep.B));

  bool chain_ok = false;
  if (d == 1) {
    rep.c_upper = c_trivial_bound(D, cls.parity);
    chain_ok = rep.r_lower > *rep.c_upper;
  }

  if (chain_ok && !opts.force_direct) {
    rep.method = Method::bound_chain;
    rep.nonvanishing = true;
    rep.rank_prediction = rep.h;
    return rep;
  }

  // Direct path: either the chain does not apply here, or the caller asked
  // to bypass it.  Either way the certificate is the interval test alone.
  rep.method = Method::direct_table;
  const TwistedCharacter chi = make_twisted(D, d, family);
  rep.evaluation = central_derivative(chi, Tolerance{opts.tolerance});
  const bool margin_ok =
      std::abs(rep.evaluation->lambda_prime) >
      kCertificationMargin * rep.evaluation->lambda_prime_error;
  rep.nonvanishing = margin_ok;
  if (!rep.nonvanishing) {
    rep.error =
        "interval certification failed: |lambda'| is within " +
        std::to_string(kCertificationMargin) + "x of its error bound";
  }
  if (d == 1 && rep.nonvanishing) rep.rank_prediction = rep.h;
  return rep;
}

}  // namespace hecke
