#include "bggkit/chern.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "bggkit/dense.hpp"
#include "bggkit/error.hpp"

namespace bggkit {

void validate_profile(const HodgeProfile& h) {
  if (h.dimension < 1) throw InputError("dimension must be at least 1");
  if (static_cast<std::int64_t>(h.h0.size()) != h.dimension + 1) {
    throw InputError("h0 must have dimension+1 = " + std::to_string(h.dimension + 1) +
                     " entries, got " + std::to_string(h.h0.size()));
  }
  for (std::size_t j = 0; j < h.h0.size(); ++j) {
    if (h.h0[j] < 0) throw InputError("h0[" + std::to_string(j) + "] is negative");
  }
  if (h.h0[0] != 1) throw InputError("h0[0] must be 1");
  if (h.h0[1] < 1) throw InputError("irregularity h0[1] must be at least 1");
  if (h.h11 && *h.h11 < 0) throw InputError("h11 is negative");
}

Integer ChernData::gamma_at(std::int64_t k) const {
  if (k < 0 || k >= irregularity()) return Integer(0);
  return gamma[static_cast<std::size_t>(k)];
}

std::int64_t Partition::weight() const {
  std::int64_t w = 0;
  for (auto p : parts) w += p;
  return w;
}

Partition Partition::conjugate() const {
  Partition out;
  if (parts.empty()) return out;
  for (std::int64_t c = 1; c <= parts.front(); ++c) {
    std::int64_t len = 0;
    for (auto p : parts) len += (p >= c) ? 1 : 0;
    out.parts.push_back(len);
  }
  return out;
}

void validate_partition(const Partition& lam) {
  for (std::size_t i = 0; i < lam.parts.size(); ++i) {
    if (lam.parts[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && lam.parts[i] > lam.parts[i - 1]) throw InputError("partition must be weakly decreasing");
  }
}

std::vector<Partition> partitions_up_to(std::int64_t max_weight) {
  std::vector<Partition> out;
  std::vector<std::int64_t> current;
  std::function<void(std::int64_t, std::int64_t)> extend = [&](std::int64_t remaining, std::int64_t cap) {
    if (remaining == 0) {
      out.push_back(Partition{current});
      return;
    }
    for (std::int64_t part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  for (std::int64_t w = 1; w <= max_weight; ++w) extend(w, w);
  return out;
}

std::int64_t euler_char(const HodgeProfile& h) {
  validate_profile(h);
  std::int64_t chi = 0;
  for (std::int64_t i = 0; i <= h.dimension; ++i) chi += (i % 2 == 0 ? 1 : -1) * h.top_row(i);
  return chi;
}

TruncSeries gamma_power_series(const HodgeProfile& h) {
  validate_profile(h);
  const std::int64_t order = h.irregularity() - 1;
  TruncSeries gamma = TruncSeries::one(order);
  for (std::int64_t j = 1; j <= h.dimension; ++j) {
    const std::int64_t exponent = (j % 2 == 0 ? 1 : -1) * h.top_row(j);
    gamma = series_mul(gamma, binom_power(j, exponent, order));
  }
  return gamma;
}

ChernData gamma_series(const HodgeProfile& h) {
  const TruncSeries series = gamma_power_series(h);
  ChernData out;
  out.gamma.reserve(series.coeffs().size());
  for (const auto& c : series.coeffs()) {
    if (!is_integral(c)) throw InvariantViolation("non-integral gamma coefficient " + to_string(c));
    out.gamma.push_back(to_integer(c));
  }
  if (out.gamma.front() != 1) throw InvariantViolation("gamma series must start with 1");
  out.rank = euler_char(h);
  return out;
}

Integer schur_number(const ChernData& c, const Partition& lam) {
  validate_partition(lam);
  if (lam.weight() > c.irregularity() - 1) {
    throw InputError("partition weight " + std::to_string(lam.weight()) + " exceeds q-1 = " +
                     std::to_string(c.irregularity() - 1));
  }
  const auto n = static_cast<Eigen::Index>(lam.parts.size());
  MatrixZ m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = c.gamma_at(lam.parts[static_cast<std::size_t>(i)] + j - i);
  }
  return determinant(m);
}

Integer segre_number(const ChernData& c, std::int64_t k) {
  const std::int64_t q = c.irregularity();
  if (k < 0 || k > q - 1) {
    throw InputError("Segre index " + std::to_string(k) + " outside 0.." + std::to_string(q - 1));
  }
  std::vector<Rational> coeffs(c.gamma.begin(), c.gamma.end());
  const TruncSeries dual = TruncSeries(q - 1, std::move(coeffs)).scaled_argument(Rational(-1));
  return to_integer(series_inv(dual)[k]);
}

Integer hilbert_poly_F(const HodgeProfile& h, std::int64_t i) {
  validate_profile(h);
  const std::int64_t n = h.irregularity() - 1;
  Integer total = 0;
  for (std::int64_t j = 0; j <= h.dimension; ++j) {
    const Integer term = h.top_row(j) * binomial(Integer(n + i - j), n);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

std::vector<Integer> bott_dimension(std::int64_t n, std::int64_t p, std::int64_t k) {
  if (n < 1) throw InputError("projective dimension must be positive");
  if (p < 0 || p > n) throw InputError("form degree p must lie in 0..n");
  std::vector<Integer> h(static_cast<std::size_t>(n + 1), Integer(0));
  // h^0
  if (k > p) {
    h[0] = binomial(Integer(k + n - p), k) * binomial(Integer(k - 1), p);
  } else if (k == 0 && p == 0) {
    h[0] = 1;
  }
  // 0 < i < n: only the Hodge classes
  if (k == 0 && p > 0 && p < n) h[static_cast<std::size_t>(p)] = 1;
  // h^n
  if (k < p - n) {
    h[static_cast<std::size_t>(n)] = binomial(Integer(-k + p), -k) * binomial(Integer(-k - 1), n - p);
  } else if (k == 0 && p == n) {
    h[static_cast<std::size_t>(n)] = 1;
  }
  return h;
}

}  // namespace bggkit
