#include "rankclass/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rankclass/error.hpp"
#include "rankclass/parallel.hpp"

namespace rankclass {

namespace {

std::vector<std::size_t> nonzero_indices(const QSeries& a, std::size_t limit) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i <= limit; ++i) {
    if (!a[i].is_zero()) idx.push_back(i);
  }
  return idx;
}

// c[i] *= (1 - q^step) in place.
void times_one_minus(std::vector<Rational>& c, std::size_t step) {
  for (std::size_t i = c.size(); i-- > step;) c[i] -= c[i - step];
}

// c[i] /= (1 - q^step) in place: running prefix over the residue class.
void divide_one_minus(std::vector<Rational>& c, std::size_t step) {
  for (std::size_t i = step; i < c.size(); ++i) c[i] += c[i - step];
}

// acc += scale * q^shift / (1 + sign q^step)^power for power in {1, 2}.
void add_geometric(std::vector<Rational>& acc, const Rational& scale, std::size_t shift,
                   std::size_t step, int sign, int power) {
  const std::size_t order = acc.size() - 1;
  for (std::size_t k = 0; shift + k * step <= order; ++k) {
    std::int64_t c = power == 2 ? static_cast<std::int64_t>(k + 1) : 1;
    if (sign > 0 && (k % 2 == 1)) c = -c;
    acc[shift + k * step] += scale * Rational(c);
  }
}

}  // namespace

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries: needs at least one coefficient");
}

QSeries QSeries::zero(std::size_t order) { return QSeries(std::vector<Rational>(order + 1)); }

QSeries QSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return QSeries(std::move(v));
}

QSeries QSeries::monomial(const Rational& c, std::size_t exponent, std::size_t order) {
  std::vector<Rational> v(order + 1);
  if (exponent <= order) v[exponent] = c;
  return QSeries(std::move(v));
}

QSeries QSeries::truncate(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("QSeries::truncate: cannot extend order " +
                                std::to_string(this->order()) + " to " + std::to_string(order));
  }
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

bool operator==(const QSeries& a, const QSeries& b) { return !first_mismatch(a, b).has_value(); }

QSeries operator+(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = -x;
  return QSeries(std::move(c));
}

QSeries operator*(const QSeries& a, const QSeries& b) { return multiply(a, b); }

QSeries operator*(const Rational& s, const QSeries& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return QSeries(std::move(c));
}

QSeries multiply(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  // Iterate over the sparser operand; theta and Lambert pieces are mostly zero.
  const auto ia = nonzero_indices(a, n);
  const auto ib = nonzero_indices(b, n);
  const bool swap = ib.size() < ia.size();
  const QSeries& sparse = swap ? b : a;
  const QSeries& dense = swap ? a : b;
  const auto& idx = swap ? ib : ia;

  std::vector<Rational> c(n + 1);
  parallel_for(0, static_cast<std::int64_t>(n) + 1, [&](std::int64_t kk) {
    const auto k = static_cast<std::size_t>(kk);
    mpq_class scratch;
    Rational sum;
    for (std::size_t i : idx) {
      if (i > k) break;
      const Rational& d = dense[k - i];
      if (!d.is_zero()) sum.add_product(sparse[i], d, scratch);
    }
    c[k] = std::move(sum);
  });
  return QSeries(std::move(c));
}

namespace serial {

QSeries multiply(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) c[k] += a[i] * b[k - i];
  }
  return QSeries(std::move(c));
}

}  // namespace serial

QSeries invert(const QSeries& a) {
  if (a[0].is_zero()) throw ZeroConstantTerm("invert: constant term is zero");
  const std::size_t n = a.order();
  const auto idx = nonzero_indices(a, n);
  const Rational inv0 = Rational(1) / a[0];
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  mpq_class scratch;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational sum;
    for (std::size_t i : idx) {
      if (i == 0) continue;
      if (i > k) break;
      sum.add_product(a[i], b[k - i], scratch);
    }
    b[k] = -(sum * inv0);
  }
  return QSeries(std::move(b));
}

QSeries substitute_neg_q(const QSeries& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return QSeries(std::move(c));
}

QSeries dilate(const QSeries& a, std::size_t k) {
  if (k < 1) throw std::invalid_argument("dilate: k must be >= 1");
  std::vector<Rational> c(a.order() + 1);
  for (std::size_t i = 0; i * k <= a.order(); ++i) c[i * k] = a[i];
  return QSeries(std::move(c));
}

QSeries theta_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  for (std::size_t m = 1; m * m <= order; ++m) c[m * m] = Rational(2);
  return QSeries(std::move(c));
}

QSeries eta_product(std::span<const EtaFactor> factors, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  for (const auto& f : factors) {
    if (f.multiplier < 1) throw std::invalid_argument("eta_product: multiplier must be >= 1");
    const auto m = static_cast<std::size_t>(f.multiplier);
    for (std::size_t step = m; step <= order; step += m) {
      for (std::int64_t r = 0; r < (f.exponent < 0 ? -f.exponent : f.exponent); ++r) {
        if (f.exponent > 0) {
          times_one_minus(c, step);
        } else {
          divide_one_minus(c, step);
        }
      }
    }
  }
  return QSeries(std::move(c));
}

QSeries eta_quotient(std::span<const EtaFactor> factors, std::size_t order) {
  std::int64_t weight = 0;
  for (const auto& f : factors) weight += f.multiplier * f.exponent;
  if (weight < 0 || weight % 24 != 0) {
    throw FractionalPower("eta_quotient: leading power " + std::to_string(weight) +
                          "/24 is not a non-negative integer");
  }
  const auto shift = static_cast<std::size_t>(weight / 24);
  std::vector<Rational> c(order + 1);
  if (shift <= order) {
    const QSeries p = eta_product(factors, order - shift);
    for (std::size_t i = 0; i + shift <= order; ++i) c[i + shift] = p[i];
  }
  return QSeries(std::move(c));
}

LambertKind lambert_kind_from_string(std::string_view name) {
  if (name == "overpartition_rank") return LambertKind::OverpartitionRank;
  if (name == "m2_rank") return LambertKind::M2Rank;
  if (name == "weighted_theta") return LambertKind::WeightedTheta;
  if (name == "odd_denominator") return LambertKind::OddDenominator;
  throw UnknownKind("unknown Lambert sum kind '" + std::string(name) + "'");
}

std::string_view to_string(LambertKind kind) {
  switch (kind) {
    case LambertKind::OverpartitionRank: return "overpartition_rank";
    case LambertKind::M2Rank: return "m2_rank";
    case LambertKind::WeightedTheta: return "weighted_theta";
    case LambertKind::OddDenominator: return "odd_denominator";
  }
  throw UnknownKind("unknown Lambert sum kind");
}

QSeries lambert_sum(LambertKind kind, std::size_t order) {
  std::vector<Rational> acc(order + 1);
  switch (kind) {
    case LambertKind::OverpartitionRank: {
      acc[0] = Rational(1, 4);
      for (std::size_t n = 1; n * n + n <= order; ++n) {
        const Rational scale(n % 2 == 0 ? 2 : -2);
        add_geometric(acc, scale, n * n + n, n, +1, 2);
      }
      break;
    }
    case LambertKind::M2Rank: {
      acc[0] = Rational(1, 4);
      for (std::size_t n = 1; n * n + 2 * n <= order; ++n) {
        const Rational scale(n % 2 == 0 ? 2 : -2);
        add_geometric(acc, scale, n * n + 2 * n, 2 * n, +1, 2);
      }
      break;
    }
    case LambertKind::WeightedTheta: {
      // n q^(n^2)/(1+q^(2n)) - n q^(n^2+2n)/(1+q^(2n)); the n = 0 term vanishes.
      for (std::size_t n = 1; n * n <= order; ++n) {
        const Rational w(static_cast<std::int64_t>(n));
        add_geometric(acc, w, n * n, 2 * n, +1, 1);
        if (n * n + 2 * n <= order) add_geometric(acc, -w, n * n + 2 * n, 2 * n, +1, 1);
      }
      break;
    }
    case LambertKind::OddDenominator: {
      for (std::size_t n = 0; n * n + 3 * n + 1 <= order; ++n) {
        add_geometric(acc, Rational(1), n * n + 3 * n + 1, 2 * n + 1, -1, 2);
      }
      break;
    }
    default:
      throw UnknownKind("lambert_sum: unknown kind " + std::to_string(static_cast<int>(kind)));
  }
  return QSeries(std::move(acc));
}

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["order"].is_number_unsigned() || !j["coeffs"].is_array()) {
    throw std::invalid_argument("series_from_json: expected {\"order\": N, \"coeffs\": [...]}");
  }
  const auto order = j["order"].get<std::size_t>();
  const auto& arr = j["coeffs"];
  if (arr.size() != order + 1) {
    throw std::invalid_argument("series_from_json: coeffs length must be order+1");
  }
  std::vector<Rational> c;
  c.reserve(arr.size());
  for (const auto& x : arr) {
    if (!x.is_string()) throw std::invalid_argument("series_from_json: coefficients are strings");
    c.push_back(Rational::parse(x.get<std::string>()));
  }
  return QSeries(std::move(c));
}

}  // namespace rankclass
