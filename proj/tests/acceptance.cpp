// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rankclass/classnum.hpp"
#include "rankclass/identities.hpp"
#include "rankclass/numthy.hpp"
#include "rankclass/overpartitions.hpp"
#include "rankclass/qseries.hpp"

using namespace rankclass;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void absorb(const VerificationReport& r) {
    if (r.passed() || !ok) return;
    ok = false;
    detail = r.name;
    if (r.witness) {
      detail += " at " + std::to_string(r.witness->index) + ": " + r.witness->lhs + " vs " +
                r.witness->rhs;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) o.require(false, "over time budget");
  if (!o.ok) ++failures;
  std::printf("%s [%d] %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

QSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(order + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (unit_constant) c[0] = Rational(1 + (num(rng) & 3));
  return QSeries(std::move(c));
}

}  // namespace

int main() {
  criterion(1, "f and f2 expansions through q^6", 1.0, [](Outcome& o) {
    const std::int64_t f_expect[] = {1, 2, -4, 8, -10, 8, -8};
    const std::int64_t f2_expect[] = {1, 2, 4, 0, -2, 8, 8};
    const QSeries f = series_f(6), f2 = series_f2(6);
    for (std::size_t n = 0; n <= 6; ++n) {
      o.require(f[n] == Rational(f_expect[n]), "f coefficient " + std::to_string(n));
      o.require(f2[n] == Rational(f2_expect[n]), "f2 coefficient " + std::to_string(n));
    }
  });

  criterion(2, "theorem 1 (i) and (ii) to order 200", 60.0, [](Outcome& o) {
    o.absorb(check_theorem1(TheoremPart::DysonRank, 200));
    o.absorb(check_theorem1(TheoremPart::M2Rank, 200));
  });

  criterion(3, "class number and r3 oracles for n <= 5000", 0, [](Outcome& o) {
    o.absorb(check_hurwitz_oracle(5000));
    o.absorb(check_r3_oracle(5000));
  });

  criterion(4, "rank tallies at n = 4 and enumeration vs formula for n <= 40", 300.0,
            [](Outcome& o) {
              const RankTally a = alpha_enum(4), a2 = alpha2_enum(4);
              o.require(a.even == 2 && a.odd == 12, "dyson tally at 4");
              o.require(a2.even == 6 && a2.odd == 8, "m2 tally at 4");
              o.absorb(check_enumeration_vs_formula(40));
            });

  criterion(5, "closed forms at p^2k and 2p^2k", 0, [](Outcome& o) {
    for (std::int64_t p : {3, 5, 7, 11}) {
      for (int k = 1; k <= 2; ++k) o.absorb(check_cor1(p, k));
    }
    o.require(alpha_formula(9) == 10, "alpha(9)");
    o.require(alpha_formula(18) == -12, "alpha(18)");
  });

  criterion(6, "congruences for a = 1..3, n <= 50", 0, [](Outcome& o) {
    for (int a = 1; a <= 3; ++a) {
      for (auto fam : {CongruenceFamily::ShiftOne, CongruenceFamily::ShiftTwo,
                       CongruenceFamily::ThreeShift}) {
        o.absorb(check_cor2(a, fam, 50));
      }
    }
    o.require(alpha_formula(16 * 3 + 4) % 5 == 0, "alpha(52) mod 5");
    o.require(alpha_formula(32 * 2 + 12) % 3 == 0, "alpha(76) mod 3");
  });

  criterion(7, "8 C4(n) = alpha(8n+5) = alpha2(8n+5) for n <= 100", 0, [](Outcome& o) {
    o.absorb(check_cor3(100, 60));
  });

  criterion(8, "four q-series identities to order 300", 0, [](Outcome& o) {
    for (int which = 1; which <= 4; ++which) o.absorb(check_cor4(which, 300));
    o.require(cor4_sides(3, 300).first[0] == Rational(-1), "constant term of (iii)");
    o.require(cor4_sides(4, 300).first[0] == Rational(1, 2), "constant term of (iv)");
  });

  criterion(9, "F and G recast to order 200", 0, [](Outcome& o) {
    o.absorb(check_fg_recast(200));
  });

  criterion(10, "property suites", 0, [](Outcome& o) {
    std::mt19937_64 rng(20261014);
    const std::size_t order = 24;
    for (int trial = 0; trial < 20; ++trial) {
      const QSeries a = random_series(rng, order, false);
      const QSeries b = random_series(rng, order, false);
      const QSeries c = random_series(rng, order, true);
      o.require(a * b == b * a, "commutativity");
      o.require((a * b) * c == a * (b * c), "associativity");
      o.require(a * (b + c) == a * b + a * c, "distributivity");
      o.require(c * invert(c) == QSeries::constant(Rational(1), order), "inverse");
      o.require(substitute_neg_q(substitute_neg_q(a)) == a, "q -> -q involution");
      o.require(substitute_neg_q(a * b) == substitute_neg_q(a) * substitute_neg_q(b),
                "q -> -q is a ring map");
    }
    for (std::int64_t m = 1; m <= 60; ++m) {
      for (std::int64_t n = 1; n <= 60; ++n) {
        if (std::gcd(m, n) != 1) continue;
        o.require(moebius(m * n) == moebius(m) * moebius(n), "moebius multiplicative");
        o.require(sigma1(m * n) == sigma1(m) * sigma1(n), "sigma1 multiplicative");
      }
    }
    for (std::int64_t D : {-3, -4, -7, -8, -15, -20, -23, 5, 8, 12}) {
      for (std::int64_t m = 1; m <= 40; ++m) {
        for (std::int64_t n = 1; n <= 40; ++n) {
          o.require(kronecker_symbol(D, m * n) == kronecker_symbol(D, m) * kronecker_symbol(D, n),
                    "kronecker multiplicative");
        }
      }
    }
    for (std::int64_t n = 0; n <= 2000; ++n) {
      o.require(r3_gauss(4 * n) == r3_gauss(n), "r(4n) = r(n)");
      o.require(r3_gauss(8 * n + 7) == 0, "r(8n+7) = 0");
    }
  });

  // Loose stand-in for the asymptotic growth remark.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport r = check_growth_bound(500);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [growth] |alpha(n)| linear bound for n <= 500 (%.2fs)\n",
                r.passed() ? "PASS" : "FAIL", secs);
    if (!r.passed()) ++failures;
  }

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
