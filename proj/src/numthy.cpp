#include "rankclass/numthy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rankclass/error.hpp"

namespace rankclass {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1, got " + std::to_string(n));
  Factorization out;
  auto strip = [&](std::int64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  for (std::int64_t p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) out.push_back({n, 1});
  return out;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t sigma1(std::int64_t n) {
  std::int64_t s = 1;
  for (const auto& [p, e] : factorize(n)) {
    std::int64_t term = 1, pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      term += pk;
    }
    s *= term;
  }
  return s;
}

bool is_squarefree(std::int64_t n) { return moebius(n) != 0; }

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = ds.size();
    std::int64_t pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int kronecker_symbol(std::int64_t D, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("kronecker_symbol: d must be >= 1");
  if (d == 1) return 1;
  if (D % 2 == 0 && d % 2 == 0) return 0;

  int result = 1;
  int twos = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  if (twos % 2 == 1) {
    // (D/2): D is odd here.
    const std::int64_t r = ((D % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }

  // Jacobi symbol (D/d) for odd d via reciprocity.
  std::int64_t a = ((D % d) + d) % d;
  std::int64_t m = d;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  const std::int64_t r = ((D % 4) + 4) % 4;
  const std::int64_t absD = D < 0 ? -D : D;
  if (r == 1) return is_squarefree(absD);
  if (r != 0) return false;
  const std::int64_t m = D / 4;
  const std::int64_t rm = ((m % 4) + 4) % 4;
  if (rm != 2 && rm != 3) return false;
  return is_squarefree(m < 0 ? -m : m);
}

FundamentalDecomposition fundamental_decomposition(std::int64_t n) {
  if (n <= 0 || n % 4 == 1 || n % 4 == 2) {
    throw NotADiscriminant("fundamental_decomposition: -" + std::to_string(n) +
                           " is not a negative discriminant");
  }
  // The conductor is the largest f with f^2 | n and -n/f^2 fundamental.
  for (std::int64_t f = isqrt(n); f >= 1; --f) {
    if (n % (f * f) != 0) continue;
    const std::int64_t D = -(n / (f * f));
    if (is_fundamental_discriminant(D)) return {D, f};
  }
  throw NotADiscriminant("fundamental_decomposition: no fundamental part for " + std::to_string(n));
}

}  // namespace rankclass
