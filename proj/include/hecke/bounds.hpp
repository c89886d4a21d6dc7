#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hecke/lseries.hpp"

namespace hecke {

// Closed-form lower bound for the quadratic-exponent series of a canonical
// (untwisted) character at conductor norm B:
//   .5235 B - .8458 B^{3/4} - .3951 sqrt(B).
// Positive from B ~ 15.9 on.  Requires B > 1.
double r_lower_bound(double B);

// Trivial upper bound for |C|:  .0269 D (odd D) / .2369 D (8 | D), valid for
// the untwisted character with D >= 7.
double c_trivial_bound(long long D, FieldParity parity);

// Gaussian comparison pair (sum_{n>=1} n e^{-n^2/a}, a/2); the first entry is
// strictly below the second for every a > 0, with ratio -> 1 as a -> inf.
std::pair<double, double> gaussian_weighted_sum_check(double a);

// The lattice constant sum_{v>=1 odd} v^{-4} e^{-pi v^2 / 2} ~ 0.20788
// entering the even-discriminant trivial bound, summed with certified tail.
double trivial_bound_inner_constant();

// Completely multiplicative weight taking values in {-1, 0, +1}: explicit
// values on the listed primes, `default_sign` on every other prime.
struct SignAssignment {
  std::map<long long, int> primes;
  int default_sign = -1;  // the Liouville assignment when the map is empty
};

// Weight value at n >= 1 (product over the factorization of n).
int sign_weight(const SignAssignment& m, long long n);

struct MonotonicityCheck {
  double larger = 0.0;   // kernel sum for the pointwise-larger assignment
  double smaller = 0.0;  // kernel sum for the pointwise-smaller assignment
  double slack = 0.0;    // combined certified error of the two sums
  bool holds = false;    // larger >= smaller - slack
};

// For assignments with hi(p) >= lo(p) at every prime, the signed kernel sums
// satisfy S_hi(x) >= S_lo(x).  Computes both sums at x and reports the
// comparison; throws std::invalid_argument if the pointwise dominance
// hypothesis fails (including via the default signs).
MonotonicityCheck multiplicative_monotonicity_check(const SignAssignment& hi,
                                                    const SignAssignment& lo,
                                                    double x,
                                                    double tolerance = 1e-10);

enum class Method { bound_chain, direct_table };

// Required margin of a direct evaluation: |lambda'| must exceed this multiple
// of the certified error bound before nonvanishing is asserted.
inline constexpr double kCertificationMargin = 10.0;

struct VerdictReport {
  long long D = 0;
  long long d = 1;
  int family = -1;
  long long B = 0;
  int root_number = -1;
  long long h = 0;  // class number of -D
  double r_lower = 0.0;
  std::optional<double> c_upper;               // untwisted case only
  Method method = Method::bound_chain;
  std::optional<EvaluationRecord> evaluation;  // present on the direct path
  bool nonvanishing = false;
  std::optional<long long> rank_prediction;    // h, for certified d = 1 rows
  std::string error;                           // per-row failure, else empty
};

struct VerdictOptions {
  double tolerance = 1e-12;
  // Bypass the closed bound chain and certify by direct interval evaluation
  // even where the chain applies (used to cross-validate the chain: the
  // verdict then reports method = direct_table with the evaluation attached,
  // while c_upper still records what the chain would have compared against).
  bool force_direct = false;
};

// Certifies L'(1) != 0 for the twisted canonical character of (D, d).
// For d = 1 the closed chain r_lower_bound(B) > c_trivial_bound(D) is tried
// first (it succeeds for every odd D >= 19 and even D >= 24); otherwise the
// series are evaluated and |lambda'| must clear kCertificationMargin times
// the certified error.  Throws std::invalid_argument for invalid (D, d) or
// root number +1.
VerdictReport certify_nonvanishing(long long D, long long d,
                                   const VerdictOptions& opts = {});

}  // namespace hecke
