#include <initializer_list>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "hecke/character.hpp"

using namespace hecke;

TEST_CASE("D = 8 chart values") {
  const CanonicalCharacter chi = CanonicalCharacter::build(8, -1);
  CHECK(chi.parity() == FieldParity::even);
  CHECK(chi.family_sign() == -1);
  CHECK(chi.epsilon(1, 0) == 1);
  CHECK(chi.epsilon(5, 1) == 1);
  CHECK(chi.epsilon(1, 1) == -1);
  CHECK(chi.epsilon(3, 0) == 1);
  CHECK(chi.epsilon(7, 2) == 1);
  CHECK(chi.epsilon(2, 1) == 0);   // even u: not coprime to the conductor
  CHECK(chi.epsilon(4, 0) == 0);
  // Periodicity of the chart in u mod 8 and v mod 4, including negatives.
  for (long long u = -15; u <= 15; u += 2) {
    for (long long v = -12; v <= 12; ++v) {
      CHECK(chi.epsilon(u, v) == chi.epsilon(u + 8, v));
      CHECK(chi.epsilon(u, v) == chi.epsilon(u, v + 4));
    }
  }
}

TEST_CASE("D = 8: the two families differ by (-1)^v") {
  const CanonicalCharacter minus = CanonicalCharacter::build(8, -1);
  const CanonicalCharacter plus = CanonicalCharacter::build(8, +1);
  for (long long u = 1; u <= 7; u += 2) {
    for (long long v = 0; v <= 3; ++v) {
      CAPTURE(u);
      CAPTURE(v);
      const int flip = (v % 2 == 0) ? 1 : -1;
      CHECK(plus.epsilon(u, v) == flip * minus.epsilon(u, v));
    }
  }
}

TEST_CASE("odd-D closed form and parity constraint") {
  const CanonicalCharacter chi11 = CanonicalCharacter::build(11);
  CHECK(chi11.parity() == FieldParity::odd);
  CHECK(chi11.family_sign() == kronecker(2, 11));
  CHECK(chi11.epsilon(1, 1) == -1);  // kronecker(2, 11) = -1
  CHECK(chi11.epsilon(3, 1) == -1);  // kronecker(6, 11) = -1
  CHECK(chi11.epsilon(2, 0) == 1);   // kronecker(4, 11) = +1
  CHECK(chi11.epsilon(11, 1) == 0);  // shares a factor with the conductor
  CHECK_THROWS_AS(chi11.epsilon(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(chi11.epsilon(2, 1), std::invalid_argument);
}

TEST_CASE("unit equivariance: epsilon(-alpha) = -epsilon(alpha)") {
  // chi(alpha O) = epsilon(alpha) alpha is well-defined exactly when the two
  // generators alpha and -alpha give the same value.
  for (long long D : {7LL, 11LL, 15LL, 19LL, 23LL}) {
    const CanonicalCharacter chi = CanonicalCharacter::build(D);
    for (long long u = -9; u <= 9; ++u) {
      for (long long v = -9; v <= 9; ++v) {
        if ((u - v) % 2 != 0) continue;
        CAPTURE(D);
        CAPTURE(u);
        CAPTURE(v);
        CHECK(chi.epsilon(-u, -v) == -chi.epsilon(u, v));
      }
    }
  }
  const CanonicalCharacter chi8 = CanonicalCharacter::build(8, -1);
  for (long long u = -9; u <= 9; ++u) {
    for (long long v = -9; v <= 9; ++v) {
      CHECK(chi8.epsilon(-u, -v) == -chi8.epsilon(u, v));
    }
  }
}

TEST_CASE("rational restriction equals kronecker(-D, n)") {
  for (long long D : {7LL, 8LL, 11LL, 15LL, 19LL, 23LL, 35LL}) {
    const CanonicalCharacter chi = CanonicalCharacter::build(D);
    for (long long n = 1; n <= 500; ++n) {
      CAPTURE(D);
      CAPTURE(n);
      CHECK(chi.rational_restriction(n) == kronecker(-D, n));
    }
  }
  // Spec'd spot values: D=8 gives 1,1,-1,-1 on n=1,3,5,7; D=11 gives -1 at 2.
  const CanonicalCharacter chi8 = CanonicalCharacter::build(8, -1);
  CHECK(chi8.rational_restriction(1) == 1);
  CHECK(chi8.rational_restriction(3) == 1);
  CHECK(chi8.rational_restriction(5) == -1);
  CHECK(chi8.rational_restriction(7) == -1);
  CHECK(CanonicalCharacter::build(11).rational_restriction(2) == -1);
}

TEST_CASE("rational restriction agrees with the ring embedding") {
  // n embeds as (2n, 0) for odd D (so (u+v sqrt(-D))/2 = n) and (n, 0) for
  // D = 8; where the embedded element is coprime to the conductor the two
  // evaluations must coincide.
  for (long long D : {7LL, 11LL, 23LL}) {
    const CanonicalCharacter chi = CanonicalCharacter::build(D);
    for (long long n = 1; n <= 2000; ++n) {
      if (std::gcd(n, D) != 1) continue;
      CAPTURE(D);
      CAPTURE(n);
      CHECK(chi.rational_restriction(n) == chi.epsilon(2 * n, 0));
    }
  }
  const CanonicalCharacter chi8 = CanonicalCharacter::build(8, -1);
  for (long long n = 1; n <= 2000; n += 2) {
    CAPTURE(n);
    CHECK(chi8.rational_restriction(n) == chi8.epsilon(n, 0));
  }
}

TEST_CASE("rational restriction is completely multiplicative") {
  for (long long D : {7LL, 8LL, 11LL}) {
    const TwistedCharacter tw = make_twisted(D, 1);
    for (long long m = 1; m <= 40; ++m) {
      for (long long n = 1; n <= 40; ++n) {
        CHECK(tw.rational_epsilon(m * n) ==
              tw.rational_epsilon(m) * tw.rational_epsilon(n));
      }
    }
  }
}

TEST_CASE("construction rejects invalid discriminants") {
  CHECK_THROWS_AS(CanonicalCharacter::build(6), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalCharacter::build(9), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalCharacter::build(12), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalCharacter::build(-7), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalCharacter::build(3), std::invalid_argument);
  // Valid shape but no chart shipped.
  CHECK_THROWS_AS(CanonicalCharacter::build(24), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalCharacter::build(8, 0), std::invalid_argument);
}

TEST_CASE("twist validation") {
  CHECK_THROWS_AS(make_twisted(11, -5), std::invalid_argument);   // 3 mod 4
  CHECK_THROWS_AS(make_twisted(11, -13), std::invalid_argument);
  CHECK_THROWS_AS(make_twisted(11, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_twisted(11, 44), std::invalid_argument);   // gcd > 1
  CHECK_THROWS_AS(make_twisted(15, 5), std::invalid_argument);    // gcd > 1
  CHECK_THROWS_AS(make_twisted(8, -4), std::invalid_argument);    // even twist
  CHECK_NOTHROW(make_twisted(11, 1));
  CHECK_NOTHROW(make_twisted(11, -4));
  CHECK_NOTHROW(make_twisted(11, 5));
  CHECK_NOTHROW(make_twisted(8, 5));
}

TEST_CASE("conductor norms and root numbers") {
  CHECK(make_twisted(11, 1).conductor_norm() == 11);
  CHECK(make_twisted(11, 1).root_number() == -1);
  CHECK(make_twisted(7, 1).root_number() == 1);    // kronecker(2,7) = +1
  CHECK(make_twisted(19, 1).root_number() == -1);  // kronecker(2,19) = -1
  CHECK(make_twisted(8, 1, -1).conductor_norm() == 16);
  CHECK(make_twisted(8, 1, -1).root_number() == -1);
  CHECK(make_twisted(8, 1, +1).root_number() == 1);
  CHECK(make_twisted(11, -4).conductor_norm() == 44);
  CHECK(make_twisted(11, -4).root_number() == 1);  // sign(d) flips W
  CHECK(make_twisted(7, -4).root_number() == -1);
  CHECK(make_twisted(8, -7, -1).root_number() == 1);
  CHECK(make_twisted(8, -7, +1).root_number() == -1);
}

TEST_CASE("twisted epsilon multiplies in the real character of d") {
  const TwistedCharacter tw = make_twisted(11, 5);
  const CanonicalCharacter base = CanonicalCharacter::build(11);
  for (long long u = 1; u <= 9; ++u) {
    for (long long v = 1; v <= 9; ++v) {
      if ((u - v) % 2 != 0) continue;
      const long long norm = (u * u + 11 * v * v) / 4;
      CHECK(tw.epsilon(u, v) == base.epsilon(u, v) * kronecker(5, norm));
    }
  }
  for (long long n = 1; n <= 200; ++n) {
    CHECK(tw.rational_epsilon(n) ==
          base.rational_restriction(n) * kronecker(5, n));
  }
}
