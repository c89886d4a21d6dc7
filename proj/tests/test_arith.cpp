#include <cstdlib>
#include <initializer_list>
#include <map>
#include <stdexcept>

#include "doctest.h"
#include "hecke/arith.hpp"

using namespace hecke;

namespace {

// Euler criterion: (a|p) = a^{(p-1)/2} mod p for odd prime p and gcd(a,p)=1.
int legendre_by_euler(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : (result == p - 1 ? -1 : 0);
}

bool naive_squarefree(long long n) {
  for (long long k = 2; k * k <= n; ++k) {
    if (n % (k * k) == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kronecker matches the Euler criterion at odd primes") {
  const long long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101};
  for (long long p : primes) {
    for (long long a = -50; a <= 50; ++a) {
      CAPTURE(a);
      CAPTURE(p);
      CHECK(kronecker(a, p) == legendre_by_euler(a, p));
    }
  }
}

TEST_CASE("kronecker reference values") {
  // Independently tabulated (computer-algebra cross-check).
  CHECK(kronecker(-11, 3) == 1);
  CHECK(kronecker(-8, 3) == 1);
  CHECK(kronecker(-11, 2) == -1);
  CHECK(kronecker(-8, 5) == -1);
  CHECK(kronecker(-11, 1) == 1);
  CHECK(kronecker(5, 3) == -1);
  CHECK(kronecker(-4, 7) == -1);
  CHECK(kronecker(-3, 5) == -1);
  CHECK(kronecker(12, 35) == 1);
  CHECK(kronecker(-20, 9) == 1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(2, 11) == -1);
  CHECK(kronecker(2, 19) == -1);
  CHECK(kronecker(6, 11) == -1);
  CHECK(kronecker(0, 3) == 0);
  CHECK(kronecker(3, 9) == 0);
  CHECK(kronecker(7, 0) == 0);
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  // Negative second argument: (a|-1) = sign(a).
  CHECK(kronecker(5, -3) == kronecker(5, 3));
  CHECK(kronecker(-5, -3) == -kronecker(-5, 3));
}

TEST_CASE("kronecker is completely multiplicative in both arguments") {
  for (long long a = -12; a <= 12; ++a) {
    for (long long m = 1; m <= 20; ++m) {
      for (long long n = 1; n <= 20; ++n) {
        CAPTURE(a);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
      }
    }
  }
  for (long long a = 1; a <= 15; ++a) {
    for (long long b = 1; b <= 15; ++b) {
      for (long long n = 1; n <= 15; n += 2) {
        CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
      }
    }
  }
}

TEST_CASE("kronecker periodicity in the top argument for odd positive n") {
  for (long long n = 1; n <= 99; n += 2) {
    for (long long a = -30; a <= 30; ++a) {
      CHECK(kronecker(a, n) == kronecker(a + n, n));
    }
  }
}

TEST_CASE("factorize recovers the number and finds prime powers") {
  for (long long n = 1; n <= 2000; ++n) {
    long long rebuilt = 1;
    for (const auto& [p, e] : factorize(n)) {
      for (int k = 0; k < e; ++k) rebuilt *= p;
      for (long long q = 2; q * q <= p; ++q) CHECK(p % q != 0);
    }
    CHECK(rebuilt == n);
  }
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-4), std::invalid_argument);
}

TEST_CASE("liouville values and multiplicativity") {
  CHECK(liouville(1) == 1);
  CHECK(liouville(2) == -1);
  CHECK(liouville(4) == 1);
  CHECK(liouville(8) == -1);
  CHECK(liouville(12) == -1);  // 2^2 * 3
  CHECK(liouville(30) == -1);  // three primes
  CHECK(liouville(36) == 1);
  for (long long m = 1; m <= 60; ++m) {
    for (long long n = 1; n <= 60; ++n) {
      CHECK(liouville(m * n) == liouville(m) * liouville(n));
    }
  }
  CHECK_THROWS_AS(liouville(0), std::invalid_argument);
}

TEST_CASE("squarefree test against naive divisor check") {
  for (long long n = 1; n <= 3000; ++n) {
    CHECK(is_squarefree(n) == naive_squarefree(n));
  }
}

TEST_CASE("fundamental discriminant recognition") {
  // Positive: 1 (trivial twist), 5, 8, 12, 13, -3, -4, -7, -8, -11, -15, -20.
  for (long long d : {1LL, 5LL, 8LL, 12LL, 13LL, 17LL, 21LL, 24LL, 28LL,
                      -3LL, -4LL, -7LL, -8LL, -11LL, -15LL, -19LL, -20LL,
                      -23LL, -24LL, -163LL}) {
    CAPTURE(d);
    CHECK(is_fundamental_discriminant(d));
  }
  // Negative: 0, squares, d = 2,3 mod 4, 4m with m = 1 mod 4, non-squarefree.
  for (long long d : {0LL, 2LL, 3LL, 4LL, 6LL, 7LL, 9LL, 16LL, 18LL, 20LL,
                      25LL, 45LL, -1LL, -5LL, -9LL, -13LL, -12LL, -16LL,
                      -18LL, -25LL, -27LL}) {
    CAPTURE(d);
    CHECK(!is_fundamental_discriminant(d));
  }
}

TEST_CASE("discriminant classification") {
  CHECK(classify_discriminant(7).valid);
  CHECK(classify_discriminant(7).parity == FieldParity::odd);
  CHECK(classify_discriminant(11).valid);
  CHECK(classify_discriminant(8).valid);
  CHECK(classify_discriminant(8).parity == FieldParity::even);
  CHECK(classify_discriminant(24).valid);
  CHECK(classify_discriminant(40).valid);
  CHECK(classify_discriminant(120).valid);

  // D = 1, 2 mod 4 odd-free cases, 3 (extra units), non-squarefree, 4k with
  // k even, and anything where -D is not fundamental.
  for (long long D : {-7LL, 0LL, 1LL, 2LL, 3LL, 4LL, 5LL, 6LL, 9LL, 12LL,
                      16LL, 18LL, 21LL, 25LL, 27LL, 32LL, 48LL, 63LL, 72LL}) {
    CAPTURE(D);
    CHECK(!classify_discriminant(D).valid);
    CHECK(!classify_discriminant(D).reason.empty());
  }
}

TEST_CASE("class numbers: celebrated values") {
  // The full list of class-number-one discriminants.
  for (long long D : {3LL, 4LL, 7LL, 8LL, 11LL, 19LL, 43LL, 67LL, 163LL}) {
    CAPTURE(D);
    CHECK(class_number(D) == 1);
  }
  const std::map<long long, long long> known = {
      {15, 2},  {20, 2},  {23, 3},  {24, 2},  {31, 3},   {35, 2},
      {39, 4},  {40, 2},  {47, 5},  {51, 2},  {56, 4},   {71, 7},
      {84, 4},  {88, 2},  {91, 2},  {95, 8},  {103, 5},  {104, 6},
      {120, 4}, {127, 5}, {148, 2}, {232, 2}, {420, 8},  {427, 2},
      {479, 25}};
  for (const auto& [D, h] : known) {
    CAPTURE(D);
    CHECK(class_number(D) == h);
  }
  CHECK_THROWS_AS(class_number(5), std::invalid_argument);
  CHECK_THROWS_AS(class_number(-7), std::invalid_argument);
  CHECK_THROWS_AS(class_number(0), std::invalid_argument);
}

TEST_CASE("class numbers against an independent form enumeration") {
  // Count reduced forms by iterating b (same parity as D) and factoring the
  // form equation the other way around: a over divisor pairs of (b^2+D)/4.
  auto brute_h = [](long long D) {
    long long count = 0;
    for (long long b = -200; b <= 200; ++b) {
      if (((b * b + D) % 4) != 0) continue;
      const long long ac = (b * b + D) / 4;
      for (long long a = 1; a * a <= ac; ++a) {
        if (ac % a != 0) continue;
        const long long c = ac / a;
        const bool reduced =
            (-a < b && b <= a && a <= c) && !(a == c && b < 0);
        if (reduced) ++count;
      }
    }
    return count;
  };
  for (long long D = 3; D <= 500; ++D) {
    if (!is_fundamental_discriminant(-D)) continue;
    CAPTURE(D);
    CHECK(class_number(D) == brute_h(D));
  }
}
