#include "hecke/lseries.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hecke/kernel.hpp"
#include "hecke/summation.hpp"

namespace hecke {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

long long integer_sqrt(long long n) {
  if (n < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Envelope for the quadratic-exponent terms: |w(n) n f(2 pi n^2 / x)| <=
// (x / 2 pi)^2 n^{-3} e^{-2 pi n^2 / x}  (from f(t) < e^{-t} / t^2), whose
// term ratio beyond N is at most q = e^{-2 pi (2N + 3) / x} < 1.
double quadratic_tail_bound(double x, long long N) {
  const double scale = (x / kTwoPi) * (x / kTwoPi);
  const double n1 = static_cast<double>(N + 1);
  const double first = scale * std::exp(-kTwoPi * n1 * n1 / x) / (n1 * n1 * n1);
  const double q = std::exp(-kTwoPi * (2.0 * n1 + 1.0) / x);
  return first / (1.0 - q);
}

// Envelope for the linear-exponent terms with |a_n| <= 4 n / sqrt(D):
// |a_n f(2 pi n / B)| <= (4 / sqrt D)(B / 2 pi)^2 n^{-1} e^{-2 pi n / B};
// ratio at most q = e^{-2 pi / B}.
double linear_tail_bound(double B, double sqrtD, long long N) {
  const double scale = 4.0 / sqrtD * (B / kTwoPi) * (B / kTwoPi);
  const double n1 = static_cast<double>(N + 1);
  const double first = scale * std::exp(-kTwoPi * n1 / B) / n1;
  const double q = std::exp(-kTwoPi / B);
  return first / (1.0 - q);
}

struct Accumulated {
  KahanSum sum;
  double term_error = 0.0;
  double abs_mass = 0.0;
};

void add_term(Accumulated& acc, double coefficient, const KernelValue& f) {
  if (coefficient != 0.0) {
    acc.sum.add(coefficient * f.value);
    acc.abs_mass += std::abs(coefficient * f.value);
  }
  acc.term_error += std::abs(coefficient) * f.abs_error;
}

SeriesResult finish(const Accumulated& acc, double tail, long long terms) {
  SeriesResult out;
  out.value = acc.sum.value();
  out.error_bound = tail + acc.term_error + 16.0 * kEps * acc.abs_mass;
  out.terms = terms;
  return out;
}

constexpr long long kTermCeiling = 50'000'000;

}  // namespace

long long series_coefficient(const TwistedCharacter& chi, long long n) {
  if (n < 1) throw std::invalid_argument("series_coefficient: n must be >= 1");
  const long long D = chi.discriminant();
  long long sum = 0;
  if (chi.base().parity() == FieldParity::odd) {
    for (long long v = 1; D * v * v < 4 * n; ++v) {
      const long long rest = 4 * n - D * v * v;
      const long long u = integer_sqrt(rest);
      if (u > 0 && u * u == rest && (u - v) % 2 == 0) {
        sum += chi.base().epsilon(u, v) * u;
      }
    }
  } else {
    for (long long v = 1; 2 * v * v < n; ++v) {
      const long long rest = n - 2 * v * v;
      const long long u = integer_sqrt(rest);
      if (u > 0 && u * u == rest) {
        sum += chi.base().epsilon(u, v) * 2 * u;
      }
    }
  }
  if (sum == 0) return 0;
  return sum * kronecker(chi.twist(), n);
}

SeriesResult r_series(const TwistedCharacter& chi, TermCount cutoff) {
  if (cutoff.n < 1) throw std::invalid_argument("r_series: cutoff must be >= 1");
  const double B = static_cast<double>(chi.conductor_norm());
  Accumulated acc;
  for (long long n = 1; n <= cutoff.n; ++n) {
    const int w = chi.rational_epsilon(n);
    const KernelValue f = kernel_f(kTwoPi * n * n / B);
    add_term(acc, static_cast<double>(w) * static_cast<double>(n), f);
  }
  return finish(acc, quadratic_tail_bound(B, cutoff.n), cutoff.n);
}

SeriesResult r_series(const TwistedCharacter& chi, Tolerance tol) {
  return weighted_kernel_sum(
      [&chi](long long n) { return chi.rational_epsilon(n); },
      static_cast<double>(chi.conductor_norm()), tol.value);
}

SeriesResult c_series(const TwistedCharacter& chi, TermCount cutoff) {
  if (cutoff.n < 1) throw std::invalid_argument("c_series: cutoff must be >= 1");
  const double B = static_cast<double>(chi.conductor_norm());
  Accumulated acc;
  for (long long n = 1; n <= cutoff.n; ++n) {
    const auto a_n = static_cast<double>(series_coefficient(chi, n));
    const KernelValue f = kernel_f(kTwoPi * n / B);
    add_term(acc, a_n, f);
  }
  const double sqrtD = std::sqrt(static_cast<double>(chi.discriminant()));
  return finish(acc, linear_tail_bound(B, sqrtD, cutoff.n), cutoff.n);
}

SeriesResult c_series(const TwistedCharacter& chi, Tolerance tol) {
  if (!(tol.value > 0.0)) {
    throw std::invalid_argument("c_series: tolerance must be positive");
  }
  const double B = static_cast<double>(chi.conductor_norm());
  const double sqrtD = std::sqrt(static_cast<double>(chi.discriminant()));
  Accumulated acc;
  for (long long n = 1; n <= kTermCeiling; ++n) {
    const auto a_n = static_cast<double>(series_coefficient(chi, n));
    const KernelValue f = kernel_f(kTwoPi * n / B);
    add_term(acc, a_n, f);
    const double tail = linear_tail_bound(B, sqrtD, n);
    if (tail < tol.value) return finish(acc, tail, n);
  }
  throw std::runtime_error("c_series: term ceiling exceeded");
}

SeriesResult weighted_kernel_sum(const std::function<int(long long)>& weight,
                                 double x, double tolerance) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("weighted_kernel_sum: x must be positive");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("weighted_kernel_sum: tolerance must be positive");
  }
  Accumulated acc;
  for (long long n = 1; n <= kTermCeiling; ++n) {
    const int w = weight(n);
    if (w < -1 || w > 1) {
      throw std::invalid_argument("weighted_kernel_sum: |w(n)| must be <= 1");
    }
    const KernelValue f = kernel_f(kTwoPi * n * n / x);
    add_term(acc, static_cast<double>(w) * static_cast<double>(n), f);
    const double tail = quadratic_tail_bound(x, n);
    if (tail < tolerance) return finish(acc, tail, n);
  }
  throw std::runtime_error("weighted_kernel_sum: term ceiling exceeded");
}

SeriesResult liouville_weighted_sum(double x, double tolerance) {
  return weighted_kernel_sum([](long long n) { return liouville(n); }, x,
                             tolerance);
}

EvaluationRecord central_derivative(const TwistedCharacter& chi, Tolerance tol) {
  if (!(tol.value > 0.0)) {
    throw std::invalid_argument("central_derivative: tolerance must be positive");
  }
  if (chi.root_number() != -1) {
    throw std::invalid_argument(
        "central_derivative: root number is +1, so the functional equation "
        "is even and the derivative identity does not apply (the central "
        "value itself is the interesting quantity there)");
  }
  EvaluationRecord rec;
  rec.D = chi.discriminant();
  rec.d = chi.twist();
  rec.family = chi.base().family_sign();
  rec.B = chi.conductor_norm();
  rec.root_number = chi.root_number();
  rec.R = r_series(chi, tol);
  rec.C = c_series(chi, tol);
  const double sum = rec.R.value + rec.C.value;
  const double sum_error = rec.R.error_bound + rec.C.error_bound;
  const double scale = 4.0 * std::numbers::pi / static_cast<double>(rec.B);
  rec.lambda_prime = 2.0 * sum;
  rec.lambda_prime_error = 2.0 * sum_error + 8.0 * kEps * std::abs(sum);
  rec.l_prime = scale * sum;
  rec.l_prime_error = scale * sum_error + 8.0 * kEps * std::abs(rec.l_prime);
  return rec;
}

}  // namespace hecke
