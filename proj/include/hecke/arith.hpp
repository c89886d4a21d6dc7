#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hecke {

// Kronecker symbol (a|n): the completely multiplicative extension of the
// Jacobi symbol to every integer n, including n <= 0 and even n.
int kronecker(long long a, long long n);

// Liouville function lambda(n) = (-1)^Omega(n), Omega counting prime factors
// with multiplicity.  Requires n >= 1.
int liouville(long long n);

// Prime factorization by trial division, returned as (prime, exponent) pairs
// in increasing prime order.  Requires n >= 1; factorize(1) is empty.
std::vector<std::pair<long long, int>> factorize(long long n);

bool is_squarefree(long long n);

// True iff d is the discriminant of a quadratic field (or d == 1, the trivial
// twist): d = 1 (mod 4) squarefree, or d = 4m with m = 2, 3 (mod 4) squarefree.
bool is_fundamental_discriminant(long long d);

enum class FieldParity {
  odd,   // D = 3 (mod 4)
  even,  // 8 | D
};

struct DiscriminantClass {
  bool valid = false;
  FieldParity parity = FieldParity::odd;
  std::string reason;  // set when invalid
};

// Classifies D > 0 as an admissible field discriminant for the canonical
// character construction: -D must be fundamental, the unit group must be
// {+-1} (so D > 4), and D must be odd or divisible by 8.  Discriminants
// D = 4 (mod 8) (e.g. D = 20) carry no canonical character and are rejected.
DiscriminantClass classify_discriminant(long long D);

// Class number h(-D) of the imaginary quadratic field of discriminant -D,
// counted through reduced integral binary quadratic forms (a, b, c) with
// b^2 - 4ac = -D, -a < b <= a <= c, and b >= 0 when a == c.
// Requires -D fundamental; throws std::invalid_argument otherwise.
long long class_number(long long D);

}  // namespace hecke
