#include <doctest.h>

#include <stdexcept>

#include "rankclass/classnum.hpp"
#include "rankclass/error.hpp"
#include "rankclass/identities.hpp"
#include "rankclass/overpartitions.hpp"
#include "test_util.hpp"

using namespace rankclass;
using testutil::ints_of;

TEST_CASE("series_f and series_f2") {
  CHECK(ints_of(series_f(7), 7) == std::vector<std::int64_t>{1, 2, -4, 8, -10, 8, -8, 16});
  CHECK(ints_of(series_f2(6), 6) == std::vector<std::int64_t>{1, 2, 4, 0, -2, 8, 8});
  CHECK(series_f2(6)[5] == Rational(4) * hurwitz(20));
  CHECK(series_f(7)[7] == Rational(alpha_enum(7).diff()));
}

TEST_CASE("Theorem 1 both parts to order 200") {
  const auto i = check_theorem1(TheoremPart::DysonRank, 200);
  const auto ii = check_theorem1(TheoremPart::M2Rank, 200);
  CHECK(i.passed());
  CHECK(ii.passed());
  CHECK(i.order == 200);

  // Spot values at the lowest orders.
  const QSeries rhs = Rational(-16) * hurwitz_series(4) - Rational(1, 3) * theta_cubed(4);
  CHECK(rhs[4] == Rational(-10));
  const QSeries rhs2 = Rational(-8) * hurwitz_series(4) + Rational(1, 3) * theta_cubed(4);
  CHECK(rhs2[3] == Rational(0));
}

TEST_CASE("a perturbed right side fails with the right witness") {
  const std::size_t N = 60;
  const QSeries lhs = series_f2(N);
  std::vector<Rational> rhs(lhs.coeffs().begin(), lhs.coeffs().end());
  rhs[37] += Rational(1, 3);
  const auto r = compare_series("perturbed", lhs, QSeries(rhs));
  REQUIRE_FALSE(r.passed());
  CHECK(r.witness->index == 37);
  CHECK(r.witness->lhs == lhs[37].str());
  CHECK(r.witness->rhs == (lhs[37] + Rational(1, 3)).str());

  const auto j = to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["witness"]["index"] == 37);
  const auto ok = to_json(compare_series("same", lhs, lhs));
  CHECK(ok["status"] == "pass");
  CHECK_FALSE(ok.contains("witness"));
  CHECK(ok["order"] == 60);
  CHECK(ok["name"] == "same");
}

TEST_CASE("piecewise rank-difference formulas") {
  CHECK(alpha_formula(3) == 8);
  CHECK(alpha_formula(4) == -10);
  CHECK(alpha2_formula(1) == 2);
  CHECK(alpha_formula(9) == 10);
  CHECK(alpha_formula(18) == -12);
  CHECK(alpha_formula(25) == 10);
  CHECK(alpha_formula(8) == -20);
  CHECK(alpha_formula(12) == -24);
  CHECK_THROWS_AS(alpha_formula(0), std::invalid_argument);
  for (std::int64_t n = 1; n <= 25; ++n) {
    const RankTallies t = tally_ranks(n);
    CHECK(alpha_formula(n) == t.dyson.diff());
    CHECK(alpha2_formula(n) == t.m2.diff());
  }
  CHECK(check_formula_vs_series(300).passed());
}

TEST_CASE("Corollary 1 closed forms") {
  CHECK(check_cor1(3, 1).passed());
  CHECK(check_cor1(5, 1).passed());
  CHECK(check_cor1(13, 1).passed());
  CHECK(check_cor1(17, 2).passed());
  // 4 H(36) = 10 independently of the closed form.
  CHECK(Rational(4) * hurwitz_cohen(36) == Rational(10));
  CHECK(Rational(4) * hurwitz_cohen(100) == Rational(10));
  CHECK_THROWS_AS(check_cor1(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_cor1(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_cor1(3, 0), std::invalid_argument);
}

TEST_CASE("Corollary 2 congruences") {
  CHECK(congruence_modulus(1, CongruenceFamily::ShiftOne) == 5);
  CHECK(congruence_modulus(1, CongruenceFamily::ThreeShift) == 3);
  CHECK(congruence_modulus(4, CongruenceFamily::ShiftOne) == 61);
  CHECK(congruence_argument(1, CongruenceFamily::ShiftOne, 0) == 4);
  CHECK(congruence_argument(1, CongruenceFamily::ShiftTwo, 0) == 8);
  CHECK(congruence_argument(1, CongruenceFamily::ThreeShift, 0) == 12);
  CHECK(congruence_argument(4, CongruenceFamily::ShiftOne, 1) == 1024 + 256);
  CHECK(alpha_formula(4) % 5 == 0);
  CHECK(alpha_formula(8) % 5 == 0);
  CHECK(alpha_formula(12) % 3 == 0);
  CHECK(check_cor2(4, CongruenceFamily::ShiftOne, 10).passed());
  CHECK(check_cor2(2, CongruenceFamily::ThreeShift, 20).passed());
}

TEST_CASE("Corollary 3") {
  const auto r = check_cor3(20, 20);
  CHECK(r.passed());
  CHECK(8 * c4_enum(0) == alpha_formula(5));
  CHECK(alpha_formula(5) == Rational(4 * hurwitz(20)).to_int64());
  CHECK(8 * c4_enum(1) == alpha_formula(13));
  bool logged = false;
  for (const auto& note : r.notes) logged = logged || note.find("n=5 ") != std::string::npos;
  CHECK(logged);
}

TEST_CASE("Corollary 4 constant terms and identities") {
  auto [lhs3, rhs3] = cor4_sides(3, 10);
  CHECK(lhs3[0] == Rational(-1));
  CHECK(rhs3[0] == Rational(-1));
  auto [lhs4, rhs4] = cor4_sides(4, 10);
  CHECK(lhs4[0] == Rational(1, 2));
  CHECK(rhs4[0] == Rational(1, 2));
  for (int which = 1; which <= 4; ++which) CHECK(check_cor4(which, 120).passed());
  CHECK_THROWS_AS(cor4_sides(5, 10), std::invalid_argument);

  // prod (1-q^(4n-2))/(1-q^(4n)) equals the eta product eta(2z)/eta(4z)^2.
  const EtaFactor spec[] = {{2, 1}, {4, -2}};
  CHECK(odd_even_product(80) == eta_product(spec, 80));
}

TEST_CASE("F/G recast") {
  CHECK(check_fg_recast(120).passed());
  const QSeries F = kronecker_F_series(4);
  const QSeries rhs = Rational(-8) * F + theta_cubed(4);
  CHECK(ints_of(rhs, 4) == std::vector<std::int64_t>{1, 2, 4, 0, -2});
}

TEST_CASE("growth proxy") {
  const auto r = check_growth_bound(500);
  CHECK(r.passed());
  CHECK_FALSE(check_growth_bound(50, 1).passed());
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope", {}), UnknownKind);
  const auto reports = run_suite("cor3", SuiteOptions{std::nullopt, 30});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].passed());
  CHECK(reports[0].order == 30);
}
