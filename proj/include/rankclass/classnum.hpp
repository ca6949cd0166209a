#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rankclass/qseries.hpp"
#include "rankclass/rational.hpp"

namespace rankclass {

/// Hurwitz data for discriminant -n. discriminant/conductor are empty when
/// n = 0 or n = 1,2 mod 4.
struct ClassData {
  std::int64_t n;
  std::optional<std::int64_t> discriminant;
  std::optional<std::int64_t> conductor;
  Rational hurwitz;
};

struct ClassNumber {
  std::int64_t h;  // number of reduced primitive forms
  std::int64_t w;  // half the number of units
};

/// Weighted count of reduced positive definite forms of discriminant -n,
/// forms equivalent to a(x^2+y^2) counting 1/2 and a(x^2+xy+y^2) counting
/// 1/3. Returns 0 for n = 1,2 mod 4 and -1/12 for n = 0.
Rational hurwitz_bruteforce(std::int64_t n);

/// Class number and unit index for a fundamental D < 0. Throws NotFundamental.
ClassNumber class_number_h(std::int64_t D);

/// H(n) from the conductor of -n via h(D)/w(D) sum_{d|f} mu(d) (D/d) sigma1(f/d).
/// Throws NotADiscriminant unless n > 0 and n = 0,3 mod 4.
Rational hurwitz_cohen(std::int64_t n);

/// hurwitz_cohen, extended to every n >= 0 (0 for n = 1,2 mod 4, -1/12 at 0).
Rational hurwitz(std::int64_t n);

ClassData class_data(std::int64_t n);

/// Number of (x,y,z) in Z^3 with x^2+y^2+z^2 = n, by direct lattice search.
std::int64_t r3_bruteforce(std::int64_t n);

/// r(n) from class numbers: 12H(4n), 24H(n), r(n/4), or 0 by n mod 8.
std::int64_t r3_gauss(std::int64_t n);

/// The unique F, G with H = G - F and r = 24F - 12G, i.e.
/// F = H + r/12 and G = 2H + r/12. Require n >= 1.
Rational kronecker_F(std::int64_t n);
Rational kronecker_G(std::int64_t n);

/// -1/12 + sum H(n) q^n.
QSeries hurwitz_series(std::size_t order);

/// sum_{n>=0} F(n) q^n with F(0) = 0.
QSeries kronecker_F_series(std::size_t order);

// Tables over 0..n_max. The unqualified versions run over n in parallel.
std::vector<Rational> hurwitz_bruteforce_table(std::int64_t n_max);
std::vector<Rational> hurwitz_cohen_table(std::int64_t n_max);
std::vector<std::int64_t> r3_bruteforce_table(std::int64_t n_max);

namespace serial {

std::vector<Rational> hurwitz_bruteforce_table(std::int64_t n_max);
std::vector<std::int64_t> r3_bruteforce_table(std::int64_t n_max);

}  // namespace serial

}  // namespace rankclass
