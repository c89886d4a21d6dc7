#include "hecke/character.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hecke {

namespace {

// Values of the D = 8 family with root number -1 on (u mod 8, v mod 4),
// odd u; derived from the character's values on generators of the ray class
// group and verified multiplicative in the tests.
//                                  v mod 4:  0   1   2   3
constexpr int kChartD8[4][4] = {
    /* u = 1 (mod 8) */ {+1, -1, -1, -1},
    /* u = 3 (mod 8) */ {+1, -1, -1, -1},
    /* u = 5 (mod 8) */ {-1, +1, +1, +1},
    /* u = 7 (mod 8) */ {-1, +1, +1, +1},
};

int mod_index(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }

}  // namespace

CanonicalCharacter CanonicalCharacter::build(long long D, int family_sign) {
  DiscriminantClass cls = classify_discriminant(D);
  if (!cls.valid) {
    throw std::invalid_argument("canonical character: " + cls.reason +
                                " (D = " + std::to_string(D) + ")");
  }
  CanonicalCharacter chi;
  chi.D_ = D;
  chi.parity_ = cls.parity;
  if (cls.parity == FieldParity::odd) {
    // The unique family; its root number is fixed by the discriminant.
    chi.family_sign_ = kronecker(2, D);
    return chi;
  }
  if (family_sign != 1 && family_sign != -1) {
    throw std::invalid_argument("canonical character: family_sign must be +1 or -1");
  }
  if (D != 8) {
    throw std::invalid_argument(
        "canonical character: no epsilon chart tabulated for even D = " +
        std::to_string(D) + " (only D = 8 is shipped)");
  }
  chi.family_sign_ = family_sign;
  for (int ui = 0; ui < 4; ++ui) {
    for (int vi = 0; vi < 4; ++vi) {
      int value = kChartD8[ui][vi];
      // The companion family multiplies by the sign character (-1)^v.
      if (family_sign == +1 && vi % 2 == 1) value = -value;
      chi.chart_[static_cast<std::size_t>(4 * (2 * ui + 1) + vi)] = value;
    }
  }
  return chi;
}

int CanonicalCharacter::epsilon(long long u, long long v) const {
  if (parity_ == FieldParity::odd) {
    if (((u - v) % 2) != 0) {
      throw std::invalid_argument(
          "epsilon: (u + v sqrt(-D))/2 needs u = v (mod 2) for odd D");
    }
    return kronecker(2 * u, D_);
  }
  if (u % 2 == 0) return 0;  // even norm: not coprime to the conductor
  return chart_[static_cast<std::size_t>(4 * mod_index(u, 8) + mod_index(v, 4))];
}

int CanonicalCharacter::rational_restriction(long long n) const {
  if (n < 1) throw std::invalid_argument("rational_restriction: n must be >= 1");
  return kronecker(-D_, n);
}

TwistedCharacter::TwistedCharacter(CanonicalCharacter base, long long d)
    : base_(base), d_(d) {
  if (d == 0 || !is_fundamental_discriminant(d)) {
    throw std::invalid_argument(
        "twist: d must be 1 or a fundamental discriminant, got " +
        std::to_string(d));
  }
  const long long D = base_.discriminant();
  if (std::gcd(std::llabs(d), D) != 1) {
    throw std::invalid_argument("twist: d must be coprime to D");
  }
  const bool even = base_.parity() == FieldParity::even;
  if (even && d % 2 == 0) {
    throw std::invalid_argument(
        "twist: even twists collide with the conductor when 8 | D");
  }
  B_ = (even ? 2 * D : D) * std::llabs(d);
  const int sign_d = (d > 0) ? +1 : -1;
  W_ = base_.family_sign() * sign_d;
}

int TwistedCharacter::epsilon(long long u, long long v) const {
  const int base_value = base_.epsilon(u, v);
  if (base_value == 0) return 0;
  const long long D = base_.discriminant();
  const long long norm = (base_.parity() == FieldParity::odd)
                             ? (u * u + D * v * v) / 4
                             : u * u + 2 * v * v;
  return base_value * kronecker(d_, norm);
}

int TwistedCharacter::rational_epsilon(long long n) const {
  const int base_value = base_.rational_restriction(n);
  if (base_value == 0) return 0;
  return base_value * kronecker(d_, n);
}

TwistedCharacter make_twisted(long long D, long long d, int family_sign) {
  return TwistedCharacter(CanonicalCharacter::build(D, family_sign), d);
}

}  // namespace hecke
