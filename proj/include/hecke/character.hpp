#pragma once

#include <array>

#include "hecke/arith.hpp"

namespace hecke {

// Ring element (u + v*sqrt(-D))/2 with u = v (mod 2) when D is odd, or
// u + v*sqrt(-2) when D = 8.  Norm: (u^2 + D v^2)/4, resp. u^2 + 2 v^2.
struct AlgebraicElement {
  long long u = 0;
  long long v = 0;
};

// The distinguished unitary character epsilon of conductor sqrt(-D) (odd D)
// resp. 2 sqrt(-2)*... (D = 8) whose square is the norm character: the unique
// such character for odd D = 3 (mod 4), one of two families for 8 | D.
//
// Odd D closed form:        epsilon((u + v sqrt(-D))/2) = kronecker(2u, D).
// D = 8, default family:    value read from a 4 x 4 residue chart on
//                           (u mod 8, v mod 4), odd u; the second family
//                           differs by the sign character alpha -> (-1)^v.
class CanonicalCharacter {
 public:
  // family_sign (+1 / -1) selects the even-discriminant family by its root
  // number; it is ignored for odd D where the family is unique with root
  // number kronecker(2, D).  Chart data is shipped for D = 8 only; other
  // 8 | D discriminants are rejected until their charts are tabulated.
  static CanonicalCharacter build(long long D, int family_sign = -1);

  long long discriminant() const { return D_; }
  FieldParity parity() const { return parity_; }
  int family_sign() const { return family_sign_; }

  // epsilon(u, v): +1/-1 on elements coprime to the conductor, 0 otherwise.
  // Odd D requires u = v (mod 2); violations throw std::invalid_argument.
  int epsilon(long long u, long long v) const;
  int epsilon(const AlgebraicElement& e) const { return epsilon(e.u, e.v); }

  // epsilon evaluated at the rational integer n > 0 (embedded as (2n, 0),
  // resp. (n, 0)); always equals kronecker(-D, n).
  int rational_restriction(long long n) const;

 private:
  CanonicalCharacter() = default;
  long long D_ = 0;
  FieldParity parity_ = FieldParity::odd;
  int family_sign_ = -1;
  std::array<int, 32> chart_{};  // D = 8: index 4 * (u mod 8) + (v mod 4)
};

// A canonical character twisted by the real character of a fundamental
// discriminant d (d = 1 is the untwisted case): chi_d = chi * (d | Norm(.)).
class TwistedCharacter {
 public:
  // Requires d = 1 or fundamental, and d coprime to the conductor
  // (gcd(d, D) = 1; odd d when D = 8).  Throws std::invalid_argument.
  TwistedCharacter(CanonicalCharacter base, long long d);

  const CanonicalCharacter& base() const { return base_; }
  long long discriminant() const { return base_.discriminant(); }
  long long twist() const { return d_; }

  // Norm of the conductor of the twisted character:
  // B = D |d| for odd D, B = 2 D |d| for 8 | D.
  long long conductor_norm() const { return B_; }

  // Sign of the functional equation of the completed series:
  // kronecker(2, D) * sign(d) for odd D, family_sign * sign(d) for 8 | D.
  int root_number() const { return W_; }

  // Twisted epsilon on ring elements / on rational integers n >= 1.
  int epsilon(long long u, long long v) const;
  int rational_epsilon(long long n) const;

 private:
  CanonicalCharacter base_;
  long long d_ = 1;
  long long B_ = 0;
  int W_ = 0;
};

// Convenience builder used by the CLI and bindings.
TwistedCharacter make_twisted(long long D, long long d, int family_sign = -1);

}  // namespace hecke
