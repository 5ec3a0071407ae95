#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bggkit/rational.hpp"

namespace bggkit {

/// Power series over Q truncated after t^order. The order is part of the value:
/// binary operations require equal orders and never retruncate implicitly.
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(std::int64_t order);
  /// Coefficients of t^0..t^order; missing trailing coefficients are zero,
  /// extra ones are rejected.
  TruncSeries(std::int64_t order, std::vector<Rational> coeffs);
  TruncSeries(std::int64_t order, std::initializer_list<std::int64_t> coeffs);

  static TruncSeries one(std::int64_t order);

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const Rational& operator[](std::int64_t k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// f(c t), same order.
  TruncSeries scaled_argument(const Rational& c) const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);

/// Cauchy product truncated at the shared order.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

/// Multiplicative inverse; throws SingularSeriesError if a[0] == 0.
TruncSeries series_inv(const TruncSeries& a);

/// (1 - j t)^e truncated at `order`, for any integer e (generalized binomial series).
TruncSeries binom_power(std::int64_t j, std::int64_t e, std::int64_t order);

}  // namespace bggkit
