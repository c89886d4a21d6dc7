#include "hecke/arith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hecke {

namespace {

// (a|2) for odd a, extended rule: 0 for even a, (-1)^((a^2-1)/8) otherwise.
int kronecker_two(long long a) {
  switch (((a % 8) + 8) % 8) {
    case 1:
    case 7:
      return 1;
    case 3:
    case 5:
      return -1;
    default:
      return 0;
  }
}

}  // namespace

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int t2 = kronecker_two(a);
    while (n % 2 == 0) {
      n /= 2;
      sign *= t2;
    }
  }
  // Jacobi symbol (a|n) for odd n >= 1 by binary reciprocity; (a|n) is
  // periodic in a with period n, so the negative case is a plain shift.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (n % 8 == 3 || n % 8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return (n == 1) ? sign : 0;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<long long, int>> factors;
  auto strip = [&](long long p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // Trial division over the 6k +- 1 wheel.
  for (long long p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

int liouville(long long n) {
  if (n < 1) throw std::invalid_argument("liouville: n must be >= 1");
  int omega = 0;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    omega += e;
  }
  return (omega % 2 == 0) ? 1 : -1;
}

bool is_squarefree(long long n) {
  if (n < 1) throw std::invalid_argument("is_squarefree: n must be >= 1");
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return false;
  }
  return true;
}

bool is_fundamental_discriminant(long long d) {
  if (d == 1) return true;  // unit discriminant: the trivial twist
  if (d == 0) return false;
  long long mod4 = ((d % 4) + 4) % 4;
  if (mod4 == 1) return is_squarefree(std::llabs(d));
  if (mod4 != 0) return false;
  long long m = d / 4;
  long long m4 = ((m % 4) + 4) % 4;
  if (m4 != 2 && m4 != 3) return false;
  return is_squarefree(std::llabs(m));
}

DiscriminantClass classify_discriminant(long long D) {
  DiscriminantClass out;
  if (D <= 0) {
    out.reason = "D must be positive (the field discriminant is -D)";
    return out;
  }
  if (!is_fundamental_discriminant(-D)) {
    out.reason = "-D is not a fundamental discriminant";
    return out;
  }
  if (D <= 4) {
    out.reason = "fields with extra units (D <= 4) are excluded";
    return out;
  }
  if (D % 2 != 0) {
    // -D fundamental and odd forces D = 3 (mod 4).
    out.valid = true;
    out.parity = FieldParity::odd;
    return out;
  }
  if (D % 8 != 0) {
    out.reason = "even discriminants support a canonical character only when 8 | D";
    return out;
  }
  out.valid = true;
  out.parity = FieldParity::even;
  return out;
}

long long class_number(long long D) {
  if (D <= 0 || !is_fundamental_discriminant(-D)) {
    throw std::invalid_argument("class_number: -D must be a fundamental discriminant");
  }
  // Count reduced forms (a, b, c), b^2 - 4ac = -D:  -a < b <= a <= c, and
  // b >= 0 when a == c.  b has the parity of D.
  long long count = 0;
  for (long long a = 1; 3 * a * a <= D; ++a) {
    for (long long b = -a + 1; b <= a; ++b) {
      long long num = b * b + D;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace hecke
