#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rankclass/qseries.hpp"

namespace rankclass {

struct Witness {
  std::int64_t index;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one identity or congruence check. A report passes exactly
/// when it carries no witness.
struct VerificationReport {
  std::string name;
  std::int64_t order = 0;  // truncation order, or the upper end of the range checked
  std::optional<Witness> witness;
  std::vector<std::string> notes;

  bool passed() const { return !witness.has_value(); }
};

/// {"name", "order", "status", "witness": {"index", "lhs", "rhs"}?, "notes"?}
nlohmann::json to_json(const VerificationReport& r);

/// Compares lhs and rhs up to their common order; the first differing
/// coefficient becomes the witness.
VerificationReport compare_series(std::string name, const QSeries& lhs, const QSeries& rhs);

/// Rank-difference generating function for Dyson's rank:
/// 4/Theta(-q) * sum_{n in Z} (-1)^n q^(n^2+n)/(1+q^n)^2.
QSeries series_f(std::size_t order);

/// Rank-difference generating function for the M2-rank:
/// 4 prod(1-q^(2n))/(1-q^n)^2 * sum_{n in Z} (-1)^n q^(n^2+2n)/(1+q^(2n))^2.
QSeries series_f2(std::size_t order);

/// Theta(q)^3.
QSeries theta_cubed(std::size_t order);

enum class TheoremPart { DysonRank, M2Rank };

/// DysonRank: f(-q) = -16 H(q) - Theta^3/3.  M2Rank: f2(q) = -8 H(q) + Theta^3/3.
/// Left sides come from the Lambert pipeline, right sides from class numbers.
VerificationReport check_theorem1(TheoremPart part, std::size_t order);

/// Rank differences from Hurwitz class numbers, piecewise in n mod 8. n >= 1.
std::int64_t alpha_formula(std::int64_t n);
std::int64_t alpha2_formula(std::int64_t n);

/// Closed forms at p^(2k) and 2p^(2k) for an odd prime p.
/// Throws std::invalid_argument if p is not an odd prime or k < 1.
VerificationReport check_cor1(std::int64_t p, int k);

enum class CongruenceFamily {
  ShiftOne,    // 4^(a+1) n + 4^a,        modulus 2^(a+2) - 3
  ShiftTwo,    // 4^(a+1) n + 2 * 4^a,    modulus 2^(a+2) - 3
  ThreeShift,  // 2 * 4^(a+1) n + 3 * 4^a, modulus 2^(a+1) - 1
};

std::int64_t congruence_modulus(int a, CongruenceFamily family);
std::int64_t congruence_argument(int a, CongruenceFamily family, std::int64_t n);

/// alpha(argument) = 0 mod modulus for 0 <= n <= n_max.
VerificationReport check_cor2(int a, CongruenceFamily family, std::int64_t n_max);

/// 8 C4(n) = alpha(8n+5) = alpha2(8n+5) for n <= n_max with 8n+5 squarefree.
/// C4 comes from the eta product; for n <= enum_limit the hook-length count
/// must agree with it too. Non-squarefree cases are noted, not asserted.
VerificationReport check_cor3(std::int64_t n_max, std::int64_t enum_limit = 60);

/// prod (1-q^(4n-2)) / (1-q^(4n)), built factor by factor.
QSeries odd_even_product(std::size_t order);

/// Both sides of the q-series identity `which` (1..4) as written, expanded
/// to the given order. Throws std::invalid_argument for other values.
std::pair<QSeries, QSeries> cor4_sides(int which, std::size_t order);
VerificationReport check_cor4(int which, std::size_t order);

/// f = -16 sum F(n)(-q)^n + Theta(-q)^3 and f2 = -8 sum F(n) q^n + Theta^3,
/// with F(0) = 0.
VerificationReport check_fg_recast(std::size_t order);

/// alpha_formula(n) against the coefficients of series_f, and likewise for f2.
VerificationReport check_formula_vs_series(std::size_t order);

/// |alpha(n)| <= bound * n for 1 <= n <= n_max.
VerificationReport check_growth_bound(std::int64_t n_max, std::int64_t bound = 100);

// Independent-oracle comparisons.
VerificationReport check_hurwitz_oracle(std::int64_t n_max);
VerificationReport check_r3_oracle(std::int64_t n_max);
/// Both enumeration tallies against the piecewise formulas for 1 <= n <= n_max.
VerificationReport check_enumeration_vs_formula(std::int64_t n_max);
/// alpha(n) = alpha2(n) by enumeration for n = 1 mod 4, n <= n_max.
VerificationReport check_rank_agreement(std::int64_t n_max);

struct SuiteOptions {
  std::optional<std::size_t> order;
  std::optional<std::int64_t> nmax;
};

/// Suite names: theorem1, cor1, cor2, cor3, cor4, fg, oracles, all.
/// Throws UnknownKind for anything else.
std::vector<VerificationReport> run_suite(std::string_view suite, const SuiteOptions& options);

}  // namespace rankclass
