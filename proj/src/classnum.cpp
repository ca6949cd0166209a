#include "rankclass/classnum.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "rankclass/error.hpp"
#include "rankclass/numthy.hpp"
#include "rankclass/parallel.hpp"

namespace rankclass {

namespace {

bool is_discriminant_index(std::int64_t n) { return n > 0 && (n % 4 == 0 || n % 4 == 3); }

void require_nonnegative(std::int64_t n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
}

// Visits every reduced form (a, b, c) with b^2 - 4ac = -n:
// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
template <class F>
void for_each_reduced_form(std::int64_t n, F&& visit) {
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + n;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      visit(a, b, c);
    }
  }
}

std::int64_t r3_count(std::int64_t n) {
  // Walk (x, y) and solve for z; every signed ordered triple is counted.
  const std::int64_t s = isqrt(n);
  std::int64_t count = 0;
  for (std::int64_t x = -s; x <= s; ++x) {
    for (std::int64_t y = -s; y <= s; ++y) {
      const std::int64_t rest = n - x * x - y * y;
      if (rest < 0) continue;
      const std::int64_t z = isqrt(rest);
      if (z * z == rest) count += (z == 0 ? 1 : 2);
    }
  }
  return count;
}

}  // namespace

Rational hurwitz_bruteforce(std::int64_t n) {
  require_nonnegative(n, "hurwitz_bruteforce");
  if (n == 0) return Rational(-1, 12);
  if (!is_discriminant_index(n)) return Rational(0);
  std::int64_t twelve_h = 0;
  for_each_reduced_form(n, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    if (b == 0 && a == c) {
      twelve_h += 6;
    } else if (b == a && a == c) {
      twelve_h += 4;
    } else {
      twelve_h += 12;
    }
  });
  return Rational(twelve_h, 12);
}

ClassNumber class_number_h(std::int64_t D) {
  if (D >= 0 || !is_fundamental_discriminant(D)) {
    throw NotFundamental("class_number_h: " + std::to_string(D) +
                         " is not a negative fundamental discriminant");
  }
  std::int64_t h = 0;
  for_each_reduced_form(-D, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) == 1) ++h;
  });
  const std::int64_t w = D == -3 ? 3 : (D == -4 ? 2 : 1);
  return {h, w};
}

Rational hurwitz_cohen(std::int64_t n) {
  const auto [D, f] = fundamental_decomposition(n);
  const auto [h, w] = class_number_h(D);
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(f)) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    sum += mu * kronecker_symbol(D, d) * sigma1(f / d);
  }
  return Rational(h * sum, w);
}

Rational hurwitz(std::int64_t n) {
  require_nonnegative(n, "hurwitz");
  if (n == 0) return Rational(-1, 12);
  if (!is_discriminant_index(n)) return Rational(0);
  return hurwitz_cohen(n);
}

ClassData class_data(std::int64_t n) {
  require_nonnegative(n, "class_data");
  ClassData out{n, std::nullopt, std::nullopt, hurwitz(n)};
  if (is_discriminant_index(n)) {
    const auto dec = fundamental_decomposition(n);
    out.discriminant = dec.discriminant;
    out.conductor = dec.conductor;
  }
  return out;
}

std::int64_t r3_bruteforce(std::int64_t n) {
  require_nonnegative(n, "r3_bruteforce");
  return r3_count(n);
}

std::int64_t r3_gauss(std::int64_t n) {
  require_nonnegative(n, "r3_gauss");
  if (n == 0) return 1;
  switch (n % 8) {
    case 1: case 2: case 5: case 6:
      return (Rational(12) * hurwitz_cohen(4 * n)).to_int64();
    case 3:
      return (Rational(24) * hurwitz_cohen(n)).to_int64();
    case 7:
      return 0;
    default:
      return r3_gauss(n / 4);
  }
}

Rational kronecker_F(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("kronecker_F: n must be >= 1");
  return hurwitz(n) + Rational(r3_gauss(n), 12);
}

Rational kronecker_G(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("kronecker_G: n must be >= 1");
  return Rational(2) * hurwitz(n) + Rational(r3_gauss(n), 12);
}

QSeries hurwitz_series(std::size_t order) {
  const auto table = hurwitz_cohen_table(static_cast<std::int64_t>(order));
  return QSeries(table);
}

QSeries kronecker_F_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  parallel_for(1, static_cast<std::int64_t>(order) + 1,
               [&](std::int64_t n) { c[static_cast<std::size_t>(n)] = kronecker_F(n); });
  return QSeries(std::move(c));
}

std::vector<Rational> hurwitz_bruteforce_table(std::int64_t n_max) {
  require_nonnegative(n_max, "hurwitz_bruteforce_table");
  std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
  parallel_for(0, n_max + 1,
               [&](std::int64_t n) { out[static_cast<std::size_t>(n)] = hurwitz_bruteforce(n); });
  return out;
}

std::vector<Rational> hurwitz_cohen_table(std::int64_t n_max) {
  require_nonnegative(n_max, "hurwitz_cohen_table");
  std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
  parallel_for(0, n_max + 1, [&](std::int64_t n) { out[static_cast<std::size_t>(n)] = hurwitz(n); });
  return out;
}

std::vector<std::int64_t> r3_bruteforce_table(std::int64_t n_max) {
  require_nonnegative(n_max, "r3_bruteforce_table");
  // Scatter every lattice point with x^2+y^2+z^2 <= n_max; rows of x go to
  // thread-private histograms that are summed afterwards.
  const std::int64_t s = isqrt(n_max);
  const auto len = static_cast<std::size_t>(n_max) + 1;
  std::vector<std::int64_t> out(len, 0);
#if defined(_OPENMP)
#pragma omp parallel if (max_threads() > 1)
#endif
  {
    std::vector<std::int64_t> local(len, 0);
#if defined(_OPENMP)
#pragma omp for schedule(dynamic) nowait
#endif
    for (std::int64_t x = -s; x <= s; ++x) {
      for (std::int64_t y = -s; y <= s; ++y) {
        const std::int64_t xy = x * x + y * y;
        if (xy > n_max) continue;
        for (std::int64_t z = -s; z <= s; ++z) {
          const std::int64_t t = xy + z * z;
          if (t <= n_max) ++local[static_cast<std::size_t>(t)];
        }
      }
    }
#if defined(_OPENMP)
#pragma omp critical(rankclass_r3_reduce)
#endif
    for (std::size_t i = 0; i < len; ++i) out[i] += local[i];
  }
  return out;
}

namespace serial {

std::vector<Rational> hurwitz_bruteforce_table(std::int64_t n_max) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(hurwitz_bruteforce(n));
  return out;
}

std::vector<std::int64_t> r3_bruteforce_table(std::int64_t n_max) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(r3_bruteforce(n));
  return out;
}

}  // namespace serial

}  // namespace rankclass
