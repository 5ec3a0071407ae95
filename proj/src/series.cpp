#include "bggkit/series.hpp"

#include <string>

#include "bggkit/error.hpp"

namespace bggkit {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw InputError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
  }
}

}  // namespace

TruncSeries::TruncSeries(std::int64_t order) {
  if (order < 0) throw InputError("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order + 1), Rational(0));
}

TruncSeries::TruncSeries(std::int64_t order, std::vector<Rational> coeffs) : TruncSeries(order) {
  if (static_cast<std::int64_t>(coeffs.size()) > order + 1) {
    throw InputError("more coefficients than the series order allows");
  }
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncSeries::TruncSeries(std::int64_t order, std::initializer_list<std::int64_t> coeffs)
    : TruncSeries(order, std::vector<Rational>(coeffs.begin(), coeffs.end())) {}

TruncSeries TruncSeries::one(std::int64_t order) { return TruncSeries(order, {1}); }

TruncSeries TruncSeries::scaled_argument(const Rational& c) const {
  TruncSeries out(order());
  Rational power = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out.coeffs_[k] = coeffs_[k] * power;
    power *= c;
  }
  return out;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  std::vector<Rational> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coeffs()[k];
  return TruncSeries(a.order(), std::move(c));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  std::vector<Rational> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= b.coeffs()[k];
  return TruncSeries(a.order(), std::move(c));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  const std::int64_t n = a.order();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (std::int64_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::int64_t j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return TruncSeries(n, std::move(c));
}

TruncSeries series_inv(const TruncSeries& a) {
  if (a[0] == 0) throw SingularSeriesError("series with zero constant term is not invertible");
  const std::int64_t n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n + 1), Rational(0));
  const Rational lead = 1 / a[0];
  b[0] = lead;
  for (std::int64_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::int64_t i = 1; i <= k; ++i) acc += a[i] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -acc * lead;
  }
  return TruncSeries(n, std::move(b));
}

TruncSeries binom_power(std::int64_t j, std::int64_t e, std::int64_t order) {
  // (1 - j t)^e = sum_k C(e, k) (-j)^k t^k, with C(e, k) the generalized binomial.
  TruncSeries out(order);
  std::vector<Rational> c(static_cast<std::size_t>(order + 1));
  Integer power = 1;
  for (std::int64_t k = 0; k <= order; ++k) {
    c[static_cast<std::size_t>(k)] = Rational(binomial(Integer(e), k) * power);
    power *= -j;
  }
  return TruncSeries(order, std::move(c));
}

}  // namespace bggkit
