#pragma once

#include <cstdint>
#include <vector>

namespace rankclass {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; the product of p^e is the factored number.
using Factorization = std::vector<PrimePower>;

/// Trial division. Requires n >= 1 (throws std::invalid_argument otherwise);
/// intended for n up to about 1e12.
Factorization factorize(std::int64_t n);

int moebius(std::int64_t n);
std::int64_t sigma1(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Kronecker symbol (D/d) for any integer D and d >= 1.
int kronecker_symbol(std::int64_t D, std::int64_t d);

/// D = 1 mod 4 squarefree, or D = 4m with m = 2,3 mod 4 squarefree. D = 1 is excluded.
bool is_fundamental_discriminant(std::int64_t D);

struct FundamentalDecomposition {
  std::int64_t discriminant;  // D < 0, fundamental
  std::int64_t conductor;     // f >= 1 with -n = D f^2
};

/// Writes -n = D f^2. Throws NotADiscriminant unless n > 0 and n = 0,3 mod 4.
FundamentalDecomposition fundamental_decomposition(std::int64_t n);

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);

}  // namespace rankclass
