#include "rankclass/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rankclass/classnum.hpp"
#include "rankclass/error.hpp"
#include "rankclass/numthy.hpp"
#include "rankclass/overpartitions.hpp"
#include "rankclass/parallel.hpp"

namespace rankclass {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  const auto f = factorize(p);
  return f.size() == 1 && f[0].exponent == 1;
}

void fail(VerificationReport& r, std::int64_t index, std::string lhs, std::string rhs) {
  if (!r.witness) r.witness = Witness{index, std::move(lhs), std::move(rhs)};
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = {{"name", r.name}, {"order", r.order}, {"status", r.passed() ? "pass" : "fail"}};
  if (r.witness) {
    j["witness"] = {{"index", r.witness->index}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

VerificationReport compare_series(std::string name, const QSeries& lhs, const QSeries& rhs) {
  VerificationReport r{std::move(name), static_cast<std::int64_t>(std::min(lhs.order(), rhs.order())),
                       std::nullopt, {}};
  if (const auto i = first_mismatch(lhs, rhs)) {
    fail(r, static_cast<std::int64_t>(*i), lhs[*i].str(), rhs[*i].str());
  }
  return r;
}

QSeries theta_cubed(std::size_t order) {
  const QSeries t = theta_series(order);
  return t * t * t;
}

QSeries series_f(std::size_t order) {
  const QSeries theta_shifted = substitute_neg_q(theta_series(order));
  return Rational(4) * (invert(theta_shifted) * lambert_sum(LambertKind::OverpartitionRank, order));
}

QSeries series_f2(std::size_t order) {
  const EtaFactor prefactor[] = {{2, 1}, {1, -2}};
  return Rational(4) * (eta_quotient(prefactor, order) * lambert_sum(LambertKind::M2Rank, order));
}

VerificationReport check_theorem1(TheoremPart part, std::size_t order) {
  const QSeries hurwitz = hurwitz_series(order);
  const QSeries cube = theta_cubed(order);
  const Rational third(1, 3);
  if (part == TheoremPart::DysonRank) {
    const QSeries lhs = substitute_neg_q(series_f(order));
    const QSeries rhs = Rational(-16) * hurwitz - third * cube;
    return compare_series("theorem1_i", lhs, rhs);
  }
  const QSeries lhs = series_f2(order);
  const QSeries rhs = Rational(-8) * hurwitz + third * cube;
  return compare_series("theorem1_ii", lhs, rhs);
}

std::int64_t alpha_formula(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("alpha_formula: n must be >= 1");
  Rational signed_value;
  if (n % 4 == 1 || n % 4 == 2) {
    signed_value = Rational(-4) * hurwitz(4 * n);
  } else if (n % 8 == 3) {
    signed_value = Rational(-24) * hurwitz(n);
  } else if (n % 8 == 7) {
    signed_value = Rational(-16) * hurwitz(n);
  } else {
    signed_value = Rational(-16) * hurwitz(n) - Rational(r3_gauss(n / 4), 3);
  }
  const std::int64_t v = signed_value.to_int64();
  return n % 2 == 0 ? v : -v;
}

std::int64_t alpha2_formula(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("alpha2_formula: n must be >= 1");
  if (n % 4 == 1 || n % 4 == 2) return (Rational(4) * hurwitz(4 * n)).to_int64();
  if (n % 8 == 3) return 0;
  if (n % 8 == 7) return (Rational(-8) * hurwitz(n)).to_int64();
  return (Rational(-8) * hurwitz(n) + Rational(r3_gauss(n / 4), 3)).to_int64();
}

VerificationReport check_cor1(std::int64_t p, int k) {
  if (!is_odd_prime(p)) throw std::invalid_argument("check_cor1: p must be an odd prime");
  if (k < 1) throw std::invalid_argument("check_cor1: k must be >= 1");
  const std::int64_t pk = ipow(p, k);
  const std::int64_t square = pk * pk;
  VerificationReport r{"cor1_p" + std::to_string(p) + "_k" + std::to_string(k), 2 * square,
                       std::nullopt, {}};

  // Closed forms as rationals so a non-integral quotient shows up as a mismatch.
  const Rational at_square = p % 4 == 1 ? Rational(2 * pk)
                                        : Rational(2 * pk * (p + 1) - 4, p - 1);
  const Rational at_twice = (p % 8 == 1 || p % 8 == 3) ? Rational(-4 * pk)
                                                       : Rational(-4 * pk * (p + 1) + 8, p - 1);
  const Rational got_square(alpha_formula(square));
  const Rational got_twice(alpha_formula(2 * square));
  if (got_square != at_square) fail(r, square, got_square.str(), at_square.str());
  if (got_twice != at_twice) fail(r, 2 * square, got_twice.str(), at_twice.str());
  return r;
}

std::int64_t congruence_modulus(int a, CongruenceFamily family) {
  if (a < 1) throw std::invalid_argument("congruence_modulus: a must be >= 1");
  return family == CongruenceFamily::ThreeShift ? ipow(2, a + 1) - 1 : ipow(2, a + 2) - 3;
}

std::int64_t congruence_argument(int a, CongruenceFamily family, std::int64_t n) {
  const std::int64_t big = ipow(4, a + 1);
  const std::int64_t small = ipow(4, a);
  switch (family) {
    case CongruenceFamily::ShiftOne: return big * n + small;
    case CongruenceFamily::ShiftTwo: return big * n + 2 * small;
    case CongruenceFamily::ThreeShift: return 2 * big * n + 3 * small;
  }
  throw std::invalid_argument("congruence_argument: unknown family");
}

VerificationReport check_cor2(int a, CongruenceFamily family, std::int64_t n_max) {
  static constexpr const char* suffix[] = {"t1", "t2", "ii"};
  const std::int64_t modulus = congruence_modulus(a, family);
  VerificationReport r{"cor2_a" + std::to_string(a) + "_" + suffix[static_cast<int>(family)], n_max,
                       std::nullopt, {}};
  r.notes.push_back("modulus " + std::to_string(modulus));
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const std::int64_t arg = congruence_argument(a, family, n);
    const std::int64_t v = alpha_formula(arg);
    if (v % modulus != 0) {
      fail(r, arg, std::to_string(v), "0 mod " + std::to_string(modulus));
      break;
    }
  }
  return r;
}

VerificationReport check_cor3(std::int64_t n_max, std::int64_t enum_limit) {
  if (n_max < 0) throw std::invalid_argument("check_cor3: n_max must be >= 0");
  VerificationReport r{"cor3", n_max, std::nullopt, {}};
  const QSeries series = c4_series(static_cast<std::size_t>(n_max));
  const std::int64_t enum_top = std::min(n_max, enum_limit);
  const std::vector<std::int64_t> by_hooks =
      enum_top >= 0 ? c4_enum_table(enum_top) : std::vector<std::int64_t>{};

  std::int64_t asserted = 0;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const std::int64_t c4 = series[static_cast<std::size_t>(n)].to_int64();
    if (n <= enum_top && by_hooks[static_cast<std::size_t>(n)] != c4) {
      fail(r, n, "C4 by hooks " + std::to_string(by_hooks[static_cast<std::size_t>(n)]),
           "C4 by eta product " + std::to_string(c4));
      break;
    }
    const std::int64_t m = 8 * n + 5;
    const std::int64_t a1 = alpha_formula(m);
    const std::int64_t a2 = alpha2_formula(m);
    if (!is_squarefree(m)) {
      const bool holds = 8 * c4 == a1 && a1 == a2;
      r.notes.push_back("skipped n=" + std::to_string(n) + " (8n+5=" + std::to_string(m) +
                        " not squarefree; identity " + (holds ? "holds" : "does not hold") +
                        " there)");
      continue;
    }
    ++asserted;
    if (8 * c4 != a1 || a1 != a2) {
      fail(r, n, "8*C4 = " + std::to_string(8 * c4),
           "alpha = " + std::to_string(a1) + ", alpha2 = " + std::to_string(a2));
      break;
    }
  }
  r.notes.insert(r.notes.begin(), std::to_string(asserted) + " squarefree cases asserted");
  return r;
}

QSeries odd_even_product(std::size_t order) {
  QSeries p = QSeries::constant(Rational(1), order);
  const QSeries one = QSeries::constant(Rational(1), order);
  for (std::size_t n = 1; 4 * n - 2 <= order; ++n) {
    p = p * (one - QSeries::monomial(Rational(1), 4 * n - 2, order));
    if (4 * n <= order) p = p * invert(one - QSeries::monomial(Rational(1), 4 * n, order));
  }
  return p;
}

std::pair<QSeries, QSeries> cor4_sides(int which, std::size_t order) {
  const QSeries theta = theta_series(order);
  const QSeries theta_shifted = substitute_neg_q(theta);
  const QSeries cube = theta_cubed(order);
  switch (which) {
    case 1: {
      const QSeries lhs =
          Rational(4) * (invert(theta_shifted) * lambert_sum(LambertKind::OverpartitionRank, order)) -
          Rational(8) * (invert(theta) * lambert_sum(LambertKind::WeightedTheta, order));
      return {lhs, substitute_neg_q(cube)};
    }
    case 2: {
      const QSeries lhs =
          Rational(4) * (invert(theta_shifted) * lambert_sum(LambertKind::M2Rank, order)) +
          Rational(4) * (odd_even_product(order) * lambert_sum(LambertKind::OddDenominator, order));
      return {lhs, cube};
    }
    case 3: {
      const QSeries rank_neg = substitute_neg_q(lambert_sum(LambertKind::OverpartitionRank, order));
      const QSeries lhs = Rational(4) * (invert(theta) * rank_neg) -
                          Rational(8) * (invert(theta_shifted) * lambert_sum(LambertKind::M2Rank, order));
      return {lhs, -cube};
    }
    case 4: {
      const QSeries rank_neg = substitute_neg_q(lambert_sum(LambertKind::OverpartitionRank, order));
      const QSeries lhs = invert(theta) * rank_neg +
                          invert(theta_shifted) * lambert_sum(LambertKind::M2Rank, order);
      return {lhs, Rational(-6) * hurwitz_series(order)};
    }
    default:
      throw std::invalid_argument("cor4_sides: identity index must be 1..4");
  }
}

VerificationReport check_cor4(int which, std::size_t order) {
  auto [lhs, rhs] = cor4_sides(which, order);
  return compare_series("cor4_" + std::to_string(which), lhs, rhs);
}

VerificationReport check_fg_recast(std::size_t order) {
  const QSeries f_series = kronecker_F_series(order);
  const QSeries cube = theta_cubed(order);
  VerificationReport r{"fg_recast", static_cast<std::int64_t>(order), std::nullopt, {}};
  r.notes.push_back("F(0) = 0");

  const QSeries rhs1 = Rational(-16) * substitute_neg_q(f_series) + substitute_neg_q(cube);
  auto first = compare_series("fg_recast_f", series_f(order), rhs1);
  if (!first.passed()) {
    r.witness = first.witness;
    r.notes.push_back("first failure in the f display");
    return r;
  }
  const QSeries rhs2 = Rational(-8) * f_series + cube;
  auto second = compare_series("fg_recast_f2", series_f2(order), rhs2);
  if (!second.passed()) {
    r.witness = second.witness;
    r.notes.push_back("first failure in the f2 display");
  }
  return r;
}

VerificationReport check_formula_vs_series(std::size_t order) {
  VerificationReport r{"formula_vs_series", static_cast<std::int64_t>(order), std::nullopt, {}};
  const QSeries f = series_f(order);
  const QSeries f2 = series_f2(order);
  std::vector<std::int64_t> a1(order + 1), a2(order + 1);
  parallel_for(1, static_cast<std::int64_t>(order) + 1, [&](std::int64_t n) {
    a1[static_cast<std::size_t>(n)] = alpha_formula(n);
    a2[static_cast<std::size_t>(n)] = alpha2_formula(n);
  });
  for (std::size_t n = 1; n <= order && r.passed(); ++n) {
    if (Rational(a1[n]) != f[n]) {
      fail(r, static_cast<std::int64_t>(n), "alpha formula " + std::to_string(a1[n]),
           "f coefficient " + f[n].str());
    } else if (Rational(a2[n]) != f2[n]) {
      fail(r, static_cast<std::int64_t>(n), "alpha2 formula " + std::to_string(a2[n]),
           "f2 coefficient " + f2[n].str());
    }
  }
  return r;
}

VerificationReport check_growth_bound(std::int64_t n_max, std::int64_t bound) {
  VerificationReport r{"growth_linear_bound", n_max, std::nullopt, {}};
  std::int64_t worst = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t v = std::abs(alpha_formula(n));
    worst = std::max(worst, v);
    if (v > bound * n) {
      fail(r, n, std::to_string(v), "<= " + std::to_string(bound * n));
      break;
    }
  }
  r.notes.push_back("max |alpha(n)| = " + std::to_string(worst) + ", bound " +
                    std::to_string(bound) + "*n");
  return r;
}

VerificationReport check_hurwitz_oracle(std::int64_t n_max) {
  VerificationReport r{"hurwitz_cohen_vs_bruteforce", n_max, std::nullopt, {}};
  const auto brute = hurwitz_bruteforce_table(n_max);
  const auto cohen = hurwitz_cohen_table(n_max);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (brute[i] != cohen[i]) {
      fail(r, n, cohen[i].str(), brute[i].str());
      break;
    }
  }
  return r;
}

VerificationReport check_r3_oracle(std::int64_t n_max) {
  VerificationReport r{"r3_gauss_vs_bruteforce", n_max, std::nullopt, {}};
  const auto brute = r3_bruteforce_table(n_max);
  std::vector<std::int64_t> gauss(static_cast<std::size_t>(n_max) + 1);
  parallel_for(0, n_max + 1,
               [&](std::int64_t n) { gauss[static_cast<std::size_t>(n)] = r3_gauss(n); });
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (brute[i] != gauss[i]) {
      fail(r, n, std::to_string(gauss[i]), std::to_string(brute[i]));
      break;
    }
  }
  return r;
}

VerificationReport check_enumeration_vs_formula(std::int64_t n_max) {
  VerificationReport r{"enumeration_vs_formula", n_max, std::nullopt, {}};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const RankTallies t = tally_ranks(n);
    const std::int64_t a1 = alpha_formula(n);
    const std::int64_t a2 = alpha2_formula(n);
    if (t.dyson.diff() != a1) {
      fail(r, n, "enumerated alpha " + std::to_string(t.dyson.diff()),
           "formula " + std::to_string(a1));
      break;
    }
    if (t.m2.diff() != a2) {
      fail(r, n, "enumerated alpha2 " + std::to_string(t.m2.diff()),
           "formula " + std::to_string(a2));
      break;
    }
  }
  return r;
}

VerificationReport check_rank_agreement(std::int64_t n_max) {
  VerificationReport r{"dyson_m2_agree_1_mod_4", n_max, std::nullopt, {}};
  for (std::int64_t n = 1; n <= n_max; n += 4) {
    const RankTallies t = tally_ranks(n);
    if (t.dyson.diff() != t.m2.diff()) {
      fail(r, n, std::to_string(t.dyson.diff()), std::to_string(t.m2.diff()));
      break;
    }
  }
  return r;
}

std::vector<VerificationReport> run_suite(std::string_view suite, const SuiteOptions& options) {
  std::vector<VerificationReport> out;
  const bool all = suite == "all";
  bool known = all;

  if (all || suite == "theorem1") {
    known = true;
    const std::size_t order = options.order.value_or(200);
    out.push_back(check_theorem1(TheoremPart::DysonRank, order));
    out.push_back(check_theorem1(TheoremPart::M2Rank, order));
    out.push_back(check_formula_vs_series(order));
  }
  if (all || suite == "cor1") {
    known = true;
    const std::int64_t p_max = options.nmax.value_or(11);
    for (std::int64_t p = 3; p <= p_max; p += 2) {
      if (!is_odd_prime(p)) continue;
      for (int k = 1; k <= 2; ++k) out.push_back(check_cor1(p, k));
    }
  }
  if (all || suite == "cor2") {
    known = true;
    const std::int64_t n_max = options.nmax.value_or(50);
    for (int a = 1; a <= 3; ++a) {
      for (auto family : {CongruenceFamily::ShiftOne, CongruenceFamily::ShiftTwo,
                          CongruenceFamily::ThreeShift}) {
        out.push_back(check_cor2(a, family, n_max));
      }
    }
  }
  if (all || suite == "cor3") {
    known = true;
    out.push_back(check_cor3(options.nmax.value_or(100)));
  }
  if (all || suite == "cor4") {
    known = true;
    const std::size_t order = options.order.value_or(300);
    for (int which = 1; which <= 4; ++which) out.push_back(check_cor4(which, order));
  }
  if (all || suite == "fg") {
    known = true;
    out.push_back(check_fg_recast(options.order.value_or(200)));
  }
  if (all || suite == "oracles") {
    known = true;
    const std::int64_t n_max = options.nmax.value_or(30);
    const auto class_max = static_cast<std::int64_t>(options.order.value_or(5000));
    out.push_back(check_hurwitz_oracle(class_max));
    out.push_back(check_r3_oracle(class_max));
    out.push_back(check_enumeration_vs_formula(n_max));
    out.push_back(check_rank_agreement(n_max));
    out.push_back(check_growth_bound(500));
  }
  if (!known) throw UnknownKind("unknown verification suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace rankclass
