#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rankclass/rational.hpp"

namespace rankclass {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N over the rationals.
/// Coefficients past the order are unknown, not zero: binary operations
/// truncate to the smaller order and comparison only looks at the common
/// prefix. Values are immutable once built.
class QSeries {
 public:
  /// Throws std::invalid_argument if coeffs is empty.
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries zero(std::size_t order);
  static QSeries constant(const Rational& c, std::size_t order);
  /// c * q^exponent, or the zero series when exponent > order.
  static QSeries monomial(const Rational& c, std::size_t exponent, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  /// Bounds-checked access; throws std::out_of_range past the order.
  const Rational& at(std::size_t n) const { return coeffs_.at(n); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Keeps coefficients 0..order; order must not exceed this->order().
  QSeries truncate(std::size_t order) const;

  /// Coefficient-wise comparison up to the common order.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& s, const QSeries& a);

/// Index of the first coefficient where a and b differ, up to the common order.
std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b);

/// Cauchy product, parallel over output coefficients.
QSeries multiply(const QSeries& a, const QSeries& b);

/// Multiplicative inverse up to truncation. Throws ZeroConstantTerm.
QSeries invert(const QSeries& a);

/// q -> -q: coefficient n picks up (-1)^n.
QSeries substitute_neg_q(const QSeries& a);

/// q -> q^k with the order kept. Throws std::invalid_argument if k < 1.
QSeries dilate(const QSeries& a, std::size_t k);

/// sum over n in Z of q^(n^2).
QSeries theta_series(std::size_t order);

struct EtaFactor {
  std::int64_t multiplier;  // m in eta(m z)
  std::int64_t exponent;    // e, may be negative
};

/// prod_m prod_{n>=1} (1 - q^(m n))^e, with the q^(m e / 24) prefactors dropped.
QSeries eta_product(std::span<const EtaFactor> factors, std::size_t order);

/// q^s * eta_product(factors) where s = sum(m e) / 24. Throws FractionalPower
/// unless s is a non-negative integer.
QSeries eta_quotient(std::span<const EtaFactor> factors, std::size_t order);

enum class LambertKind {
  /// sum_{n in Z} (-1)^n q^(n^2+n) / (1+q^n)^2
  OverpartitionRank,
  /// sum_{n in Z} (-1)^n q^(n^2+2n) / (1+q^(2n))^2
  M2Rank,
  /// sum_{n>=0} n q^(n^2) (1-q^(2n)) / (1+q^(2n))
  WeightedTheta,
  /// sum_{n>=0} q^(n^2+3n+1) / (1-q^(2n+1))^2
  OddDenominator,
};

/// Parses "overpartition_rank", "m2_rank", "weighted_theta", "odd_denominator".
/// Throws UnknownKind.
LambertKind lambert_kind_from_string(std::string_view name);
std::string_view to_string(LambertKind kind);

/// Exact expansion of the named Lambert-type sum. The bilateral sums are
/// folded onto n >= 0 first, using (1+q^-m)^-2 = q^(2m) (1+q^m)^-2, so that
/// both kinds become 1/4 + 2 sum_{n>=1}(...). Throws UnknownKind for an
/// enumerator value outside LambertKind.
QSeries lambert_sum(LambertKind kind, std::size_t order);

/// {"order": N, "coeffs": ["p/q", ...]}
nlohmann::json to_json(const QSeries& s);
/// Throws std::invalid_argument on a malformed document.
QSeries series_from_json(const nlohmann::json& j);

namespace serial {

/// Straight double loop, kept as the reference for the parallel multiply.
QSeries multiply(const QSeries& a, const QSeries& b);

}  // namespace serial

}  // namespace rankclass
