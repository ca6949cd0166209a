// Parallel kernels against their serial references.
#include <doctest.h>

#include <random>

#include "rankclass/classnum.hpp"
#include "rankclass/overpartitions.hpp"
#include "rankclass/parallel.hpp"
#include "rankclass/qseries.hpp"
#include "test_util.hpp"

using namespace rankclass;

TEST_CASE("series multiply") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const auto order = static_cast<std::size_t>(10 + 17 * trial);
    const QSeries a = testutil::random_series(rng, order);
    const QSeries b = testutil::random_series(rng, order + 3);
    CHECK(multiply(a, b) == serial::multiply(a, b));
    CHECK(multiply(a, b).order() == order);
  }
  const QSeries t = theta_series(150);
  const QSeries l = lambert_sum(LambertKind::M2Rank, 150);
  CHECK(multiply(t, l) == serial::multiply(t, l));
}

TEST_CASE("rank tallies") {
  for (std::int64_t n = 0; n <= 22; ++n) CHECK(tally_ranks(n) == serial::tally_ranks(n));
}

TEST_CASE("class number and lattice tables") {
  const auto hp = hurwitz_bruteforce_table(2000);
  const auto hs = serial::hurwitz_bruteforce_table(2000);
  CHECK(hp == hs);
  const auto rp = r3_bruteforce_table(3000);
  const auto rs = serial::r3_bruteforce_table(3000);
  CHECK(rp == rs);
}

TEST_CASE("4-core table") {
  CHECK(c4_enum_table(30) == serial::c4_enum_table(30));
}

TEST_CASE("parallel_for covers the range once") {
  std::vector<int> hits(1000, 0);
  parallel_for(0, 1000, [&](std::int64_t i) { hits[static_cast<std::size_t>(i)] += 1; });
  for (int h : hits) CHECK(h == 1);
  parallel_for(5, 5, [&](std::int64_t) { FAIL("empty range visited"); });
}
