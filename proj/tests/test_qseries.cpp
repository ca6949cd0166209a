#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rankclass/error.hpp"
#include "rankclass/qseries.hpp"
#include "test_util.hpp"

using namespace rankclass;
using testutil::ints_of;
using testutil::series_of;

namespace {

// Bilateral sum with negative indices rewritten term by term:
// for n < 0, q^e/(1+q^(b n))^2 = q^(e - 2 b n)/(1+q^(-b n))^2. Each term is
// expanded separately from q^shift * sum_k (-1)^k (k+1) q^(step k).
QSeries bilateral_direct(std::int64_t exp_lin, std::int64_t step_mul, std::size_t order) {
  std::vector<Rational> c(order + 1);
  const auto N = static_cast<std::int64_t>(order);
  for (std::int64_t n = -N; n <= N; ++n) {
    const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
    std::int64_t shift = n * n + exp_lin * n;
    std::int64_t step = step_mul * n;
    if (n < 0) {
      shift -= 2 * step;
      step = -step;
    }
    if (shift < 0 || shift > N) continue;
    if (step == 0) {
      c[static_cast<std::size_t>(shift)] += Rational(sign, 4);
      continue;
    }
    for (std::int64_t k = 0; shift + step * k <= N; ++k) {
      const std::int64_t v = (k % 2 == 0 ? 1 : -1) * (k + 1) * sign;
      c[static_cast<std::size_t>(shift + step * k)] += Rational(v);
    }
  }
  return QSeries(std::move(c));
}

}  // namespace

TEST_CASE("ring operations") {
  const QSeries a = series_of({1, 1, 0});
  const QSeries b = series_of({1, -1, 0});
  CHECK(a * b == series_of({1, 0, -1}));
  CHECK((a + b) == series_of({2, 0, 0}));
  CHECK((a - b) == series_of({0, 2, 0}));
  CHECK((-a) == series_of({-1, -1, 0}));

  // Truncation propagates as the minimum order.
  const QSeries longer = series_of({1, 2, 3, 4, 5});
  CHECK((longer * a).order() == 2);
  CHECK((longer + a).order() == 2);

  const QSeries t = theta_series(4);
  CHECK(ints_of(t * t * t, 4) == std::vector<std::int64_t>{1, 6, 12, 8, 6});
}

TEST_CASE("invert") {
  CHECK(invert(series_of({1, -1, 0, 0})) == series_of({1, 1, 1, 1}));
  const QSeries t = theta_series(40);
  CHECK(invert(t) * t == QSeries::constant(Rational(1), 40));
  const QSeries two = QSeries::constant(Rational(2), 0);
  CHECK(invert(two)[0] == Rational(1, 2));
  CHECK_THROWS_AS(invert(series_of({0, 1, 2})), ZeroConstantTerm);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = testutil::random_series(rng, 25, true);
    const QSeries one = QSeries::constant(Rational(1), 25);
    CHECK(a * invert(a) == one);
    CHECK(invert(a) * a == one);
  }
}

TEST_CASE("substitute_neg_q") {
  CHECK(ints_of(substitute_neg_q(theta_series(4)), 4) == std::vector<std::int64_t>{1, -2, 0, 0, 2});
  const QSeries f = series_of({1, 2, -4, 8, -10});
  CHECK(ints_of(substitute_neg_q(f), 4) == std::vector<std::int64_t>{1, -2, -4, -8, -10});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = testutil::random_series(rng, 30);
    CHECK(substitute_neg_q(substitute_neg_q(a)) == a);
  }
}

TEST_CASE("dilate") {
  const QSeries a = series_of({1, 1, 0, 0, 0});
  CHECK(dilate(a, 2) == series_of({1, 0, 1, 0, 0}));
  CHECK(dilate(a, 2).order() == 4);
  CHECK(dilate(a, 1) == a);
  CHECK(dilate(theta_series(20), 4)[4] == Rational(2));
  CHECK_THROWS_AS(dilate(a, 0), std::invalid_argument);

  std::mt19937_64 rng(5);
  const QSeries r = testutil::random_series(rng, 60);
  for (std::size_t j = 1; j <= 4; ++j) {
    for (std::size_t k = 1; k <= 4; ++k) CHECK(dilate(r, j * k) == dilate(dilate(r, j), k));
  }
}

TEST_CASE("theta_series") {
  CHECK(ints_of(theta_series(4), 4) == std::vector<std::int64_t>{1, 2, 0, 0, 2});
  const QSeries t = theta_series(10);
  const QSeries cube = t * t * t;
  CHECK(cube[7] == Rational(0));
  CHECK(theta_series(0).order() == 0);
}

TEST_CASE("eta_quotient and eta_product") {
  const EtaFactor overpartition_prefactor[] = {{2, 1}, {1, -2}};
  const QSeries q = eta_quotient(overpartition_prefactor, 10);
  CHECK(q[0] == Rational(1));
  // Overpartition counts.
  CHECK(ints_of(q, 10) == std::vector<std::int64_t>{1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232});

  const EtaFactor single[] = {{1, 1}};
  CHECK_THROWS_AS(eta_quotient(single, 5), FractionalPower);
  const EtaFactor negative[] = {{1, -1}};
  CHECK_THROWS_AS(eta_quotient(negative, 5), FractionalPower);
  const EtaFactor below_zero[] = {{1, -24}};
  CHECK_THROWS_AS(eta_quotient(below_zero, 5), FractionalPower);

  // eta(z)^24 = q prod (1-q^n)^24: the leading power shifts the expansion.
  const EtaFactor delta[] = {{1, 24}};
  const QSeries d = eta_quotient(delta, 4);
  CHECK(ints_of(d, 4) == std::vector<std::int64_t>{0, 1, -24, 252, -1472});

  // 4-core counts as the normalized product; the full quotient carries q^(15/24).
  const EtaFactor cores[] = {{4, 4}, {1, -1}};
  CHECK_THROWS_AS(eta_quotient(cores, 5), FractionalPower);
  // Frozen from hook-length brute force over all partitions of n <= 5.
  CHECK(ints_of(eta_product(cores, 5), 5) == std::vector<std::int64_t>{1, 1, 2, 3, 1, 3});
}

TEST_CASE("lambert_sum") {
  const std::size_t N = 50;
  CHECK(lambert_sum(LambertKind::OverpartitionRank, N)[0] == Rational(1, 4));
  // Folded form against a term-by-term expansion over n in [-N, N].
  CHECK(lambert_sum(LambertKind::OverpartitionRank, N) == bilateral_direct(1, 1, N));
  CHECK(lambert_sum(LambertKind::M2Rank, N) == bilateral_direct(2, 2, N));

  const QSeries f = Rational(4) * (lambert_sum(LambertKind::OverpartitionRank, 6) *
                                   invert(substitute_neg_q(theta_series(6))));
  CHECK(ints_of(f, 6) == std::vector<std::int64_t>{1, 2, -4, 8, -10, 8, -8});

  // The n = 0 term of the weighted sum has factor n = 0.
  CHECK(lambert_sum(LambertKind::WeightedTheta, 10)[0] == Rational(0));
  // First terms: q(1-q^2)/(1+q^2) = q - 2q^3 + 2q^5 ...; 2 q^4 (1-q^4)/(1+q^4) from n = 2.
  CHECK(ints_of(lambert_sum(LambertKind::WeightedTheta, 6), 6) ==
        std::vector<std::int64_t>{0, 1, 0, -2, 2, 2, 0});
  // q/(1-q)^2 + q^5/(1-q^3)^2 + ...
  CHECK(ints_of(lambert_sum(LambertKind::OddDenominator, 6), 6) ==
        std::vector<std::int64_t>{0, 1, 2, 3, 4, 6, 6});

  CHECK(lambert_kind_from_string("m2_rank") == LambertKind::M2Rank);
  CHECK(to_string(LambertKind::OddDenominator) == "odd_denominator");
  CHECK_THROWS_AS(lambert_kind_from_string("fofq"), UnknownKind);
  CHECK_THROWS_AS(lambert_sum(static_cast<LambertKind>(42), 5), UnknownKind);
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t order = 5 + static_cast<std::size_t>(trial) * 2;
    const QSeries a = testutil::random_series(rng, order);
    const QSeries b = testutil::random_series(rng, order);
    const QSeries c = testutil::random_series(rng, order);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("comparison only looks at the common order") {
  const QSeries a = series_of({1, 2, 3});
  const QSeries b = series_of({1, 2, 3, 99});
  CHECK(a == b);
  CHECK_FALSE(first_mismatch(a, b).has_value());
  CHECK(first_mismatch(series_of({1, 2, 4}), b) == std::optional<std::size_t>(2));
  CHECK(b.truncate(1) == series_of({1, 2}));
  CHECK_THROWS_AS(a.truncate(5), std::invalid_argument);
  CHECK_THROWS_AS(QSeries(std::vector<Rational>{}), std::invalid_argument);
  CHECK(QSeries::monomial(Rational(3), 7, 4) == QSeries::zero(4));
}

TEST_CASE("json serialization") {
  const QSeries s(std::vector<Rational>{Rational(-1, 12), Rational(0), Rational(4, 3)});
  const auto j = to_json(s);
  CHECK(j.dump() == R"({"coeffs":["-1/12","0","4/3"],"order":2})");
  CHECK(series_from_json(j) == s);
  CHECK(series_from_json(j).order() == 2);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries r = testutil::random_series(rng, 12);
    const QSeries back = series_from_json(nlohmann::json::parse(to_json(r).dump()));
    CHECK(back == r);
    CHECK(back.order() == r.order());
  }

  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"order":2,"coeffs":["1"]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"order":0,"coeffs":[1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"([1,2])")), std::invalid_argument);
}
