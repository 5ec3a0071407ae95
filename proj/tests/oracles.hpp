#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the scalar types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "bggkit/rational.hpp"

namespace oracle {

using bggkit::Integer;
using bggkit::Rational;
using Table = std::vector<std::vector<Rational>>;

/// Row reduction over Q with the first nonzero pivot.
inline std::int64_t naive_rank(Table m) {
  std::int64_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t k = r + 1; k < rows; ++k) {
      if (m[k][c] == 0) continue;
      const Rational f = m[k][c] / m[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[k][cc] -= f * m[r][cc];
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// Sum over permutations.
inline Rational leibniz_det(const Table& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? Rational(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Pascal's rule for m >= 0.
inline Integer pascal(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || k > m) return 0;
  std::vector<Integer> row{1};
  for (std::int64_t r = 1; r <= m; ++r) {
    std::vector<Integer> next(static_cast<std::size_t>(r + 1), Integer(1));
    for (std::int64_t c = 1; c < r; ++c) next[c] = row[c - 1] + row[c];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Coefficients of prod_j (1 - j t)^{e_j} up to t^order by repeated convolution
/// with 1 - j t and the geometric series sum (j t)^n.
inline std::vector<Rational> power_product(const std::vector<std::pair<std::int64_t, std::int64_t>>& factors,
                                           std::int64_t order) {
  std::vector<Rational> f(static_cast<std::size_t>(order + 1), Rational(0));
  f[0] = 1;
  for (auto [j, e] : factors) {
    for (std::int64_t rep = 0; rep < (e < 0 ? -e : e); ++rep) {
      std::vector<Rational> g(f.size(), Rational(0));
      for (std::size_t a = 0; a < f.size(); ++a) {
        if (e > 0) {
          g[a] += f[a];
          if (a + 1 < f.size()) g[a + 1] -= f[a] * j;
        } else {
          Rational power = 1;
          for (std::size_t b = a; b < f.size(); ++b) {
            g[b] += f[a] * power;
            power *= j;
          }
        }
      }
      f = std::move(g);
    }
  }
  return f;
}

/// chi(O(m)) on P^n.
inline Integer chi_line_bundle(std::int64_t n, std::int64_t m) {
  // polynomial C(m + n, n) = prod_{k=1..n} (m + k) / n!
  Rational v = 1;
  for (std::int64_t k = 1; k <= n; ++k) v = v * Rational(m + k) / Rational(k);
  return bggkit::to_integer(v);
}

/// chi(Omega^p(k)) on P^n from the Euler sequence.
inline Integer chi_twisted_forms(std::int64_t n, std::int64_t p, std::int64_t k) {
  if (p == 0) return chi_line_bundle(n, k);
  return pascal(n + 1, p) * chi_line_bundle(n, k - p) - chi_twisted_forms(n, p - 1, k);
}

/// Homology of the Koszul complex S (x) Lambda^j V -> S (x) Lambda^{j+1} V,
/// x^b e_T -> sum_i x^{b + e_i} e_i ^ e_T. The differential preserves the
/// multidegree g = b - 1_T, so each (spot, degree) splits into blocks indexed
/// by g with g_i >= -1; every block is reduced by naive_rank.
/// Returns h[j][p] for spots 0..q and S-degrees 0..p_max.
class KoszulHomology {
 public:
  KoszulHomology(std::int64_t q, std::int64_t p_max) : q_(q), p_max_(p_max) {}

  std::vector<std::vector<std::int64_t>> compute() const {
    std::vector<std::vector<std::int64_t>> h(static_cast<std::size_t>(q_ + 1),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(p_max_ + 1), 0));
    for (std::int64_t j = 0; j <= q_; ++j) {
      for (std::int64_t p = 0; p <= p_max_; ++p) {
        std::int64_t total = 0;
        for (const auto& g : multidegrees(p - j)) {
          total += static_cast<std::int64_t>(block(g, j).size()) - block_rank(g, j) - block_rank(g, j - 1);
        }
        h[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] = total;
      }
    }
    return h;
  }

 private:
  using Degree = std::vector<std::int64_t>;

  /// All g with entries >= -1 summing to s.
  std::vector<Degree> multidegrees(std::int64_t s) const {
    std::vector<Degree> out;
    if (s + q_ < 0) return out;
    Degree g(static_cast<std::size_t>(q_), 0);
    fill(out, g, 0, s + q_);
    return out;
  }
  void fill(std::vector<Degree>& out, Degree& g, std::int64_t i, std::int64_t left) const {
    if (i == q_ - 1) {
      g[static_cast<std::size_t>(i)] = left - 1;
      out.push_back(g);
      return;
    }
    for (std::int64_t a = 0; a <= left; ++a) {
      g[static_cast<std::size_t>(i)] = a - 1;
      fill(out, g, i + 1, left - a);
    }
  }

  /// Subsets T with |T| = j and b = g + 1_T >= 0.
  std::vector<unsigned> block(const Degree& g, std::int64_t j) const {
    std::vector<unsigned> out;
    if (j < 0 || j > q_) return out;
    for (unsigned t = 0; t < (1u << q_); ++t) {
      if (std::popcount(t) != j) continue;
      bool ok = true;
      for (std::int64_t i = 0; i < q_; ++i) {
        if (g[static_cast<std::size_t>(i)] + static_cast<std::int64_t>((t >> i) & 1u) < 0) ok = false;
      }
      if (ok) out.push_back(t);
    }
    return out;
  }

  /// Rank of the block of the differential leaving spot j.
  std::int64_t block_rank(const Degree& g, std::int64_t j) const {
    const auto src = block(g, j);
    const auto dst = block(g, j + 1);
    if (src.empty() || dst.empty()) return 0;
    Table m(dst.size(), std::vector<Rational>(src.size(), Rational(0)));
    for (std::size_t c = 0; c < src.size(); ++c) {
      const unsigned t = src[c];
      for (std::int64_t i = 0; i < q_; ++i) {
        if ((t >> i) & 1u) continue;
        const unsigned nt = t | (1u << i);
        const int sign = std::popcount(t & ((1u << i) - 1u)) % 2 ? -1 : 1;
        auto it = std::find(dst.begin(), dst.end(), nt);
        m[static_cast<std::size_t>(it - dst.begin())][c] += sign;
      }
    }
    return naive_rank(std::move(m));
  }

  std::int64_t q_;
  std::int64_t p_max_;
};

inline Rational random_rational(std::mt19937_64& rng, int bound = 5, bool allow_fraction = true) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, allow_fraction ? 4 : 1);
  return bggkit::make_rational(num(rng), den(rng));
}

}  // namespace oracle
