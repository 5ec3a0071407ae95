#include <doctest.h>

#include <random>

#include "bggkit/chern.hpp"
#include "bggkit/dense.hpp"
#include "bggkit/error.hpp"
#include "bggkit/examples.hpp"
#include "oracles.hpp"

using namespace bggkit;

namespace {

HodgeProfile profile(std::vector<std::int64_t> h0) {
  HodgeProfile h;
  h.dimension = static_cast<std::int64_t>(h0.size()) - 1;
  h.h0 = std::move(h0);
  return h;
}

/// gamma coefficients by convolution: prod_j (1 - j t)^{(-1)^j h^{d,j}}.
std::vector<Rational> gamma_oracle(const HodgeProfile& h) {
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;
  for (std::int64_t j = 1; j <= h.dimension; ++j) {
    const std::int64_t e = h.h0[static_cast<std::size_t>(h.dimension - j)];
    factors.emplace_back(j, j % 2 ? -e : e);
  }
  return oracle::power_product(factors, h.irregularity() - 1);
}

HodgeProfile random_profile(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dim(1, 4), entry(0, 7), q(1, 7);
  const auto d = dim(rng);
  std::vector<std::int64_t> h0{1, q(rng)};
  for (std::int64_t j = 2; j <= d; ++j) h0.push_back(entry(rng));
  return profile(h0);
}

}  // namespace

TEST_CASE("gamma of the worked profiles") {
  const ChernData theta = gamma_series(theta_profile(3));
  CHECK(theta.gamma == std::vector<Integer>{1, 1, 0, 0});
  CHECK(theta.rank == 1);
  for (std::int64_t d = 2; d <= 4; ++d) {
    const ChernData ab = gamma_series(abelian_profile(d));
    CHECK(ab.rank == 0);
    for (std::int64_t i = 1; i < d; ++i) CHECK(ab.gamma_at(i) == 0);
  }
  const ChernData bad = gamma_series(profile({1, 4, 5, 4}));
  CHECK(bad.gamma_at(2) < 0);
}

TEST_CASE("gamma_series agrees with a convolution oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const HodgeProfile h = random_profile(rng);
    const ChernData c = gamma_series(h);
    const auto expected = gamma_oracle(h);
    REQUIRE(c.gamma.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(Rational(c.gamma[k]) == expected[k]);
    CHECK(c.rank == euler_char(h));
  }
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(validate_profile(profile({2, 3, 3})), InputError);
  CHECK_THROWS_AS(validate_profile(profile({1, 0, 3})), InputError);
  CHECK_THROWS_AS(validate_profile(profile({1, 3, -1})), InputError);
  CHECK_THROWS_AS(validate_profile(profile({1})), InputError);
  HodgeProfile wrong = profile({1, 3, 3});
  wrong.dimension = 3;
  CHECK_THROWS_AS(validate_profile(wrong), InputError);
  CHECK_NOTHROW(validate_profile(profile({1, 3, 3})));
}

TEST_CASE("partition enumeration") {
  const std::vector<std::size_t> partition_numbers{1, 2, 3, 5, 7, 11, 15, 22};
  std::size_t cumulative = 0;
  for (std::int64_t w = 1; w <= 8; ++w) {
    cumulative += partition_numbers[static_cast<std::size_t>(w - 1)];
    const auto all = partitions_up_to(w);
    CHECK(all.size() == cumulative);
    for (const auto& lam : all) {
      CHECK_NOTHROW(validate_partition(lam));
      CHECK(lam.conjugate().conjugate() == lam);
      CHECK(lam.conjugate().weight() == lam.weight());
    }
  }
  const auto two = partitions_up_to(2);
  CHECK(two[1] == Partition{{2}});
  CHECK(two[2] == Partition{{1, 1}});
  CHECK_THROWS_AS(validate_partition(Partition{{1, 2}}), InputError);
  CHECK_THROWS_AS(validate_partition(Partition{{2, 0}}), InputError);
}

TEST_CASE("Schur numbers: rows, columns and the dual determinant") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    HodgeProfile h = random_profile(rng);
    const ChernData c = gamma_series(h);
    const std::int64_t q = h.irregularity();
    for (std::int64_t k = 1; k < q; ++k) {
      CHECK(schur_number(c, Partition{{k}}) == c.gamma_at(k));
      CHECK(schur_number(c, Partition{std::vector<std::int64_t>(static_cast<std::size_t>(k), 1)}) ==
            segre_number(c, k));
    }
    // det(gamma_{lam_i + j - i}) = det(segre_{lam'_i + j - i})
    for (const auto& lam : partitions_up_to(q - 1)) {
      const Partition conj = lam.conjugate();
      const auto n = conj.parts.size();
      oracle::Table m(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const std::int64_t idx = conj.parts[i] + static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
          m[i][j] = idx < 0 ? Rational(0) : Rational(segre_number(c, idx));
        }
      }
      CAPTURE(trial);
      CHECK(Rational(schur_number(c, lam)) == oracle::leibniz_det(m));
    }
  }
}

TEST_CASE("Segre numbers invert gamma(-t)") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const HodgeProfile h = random_profile(rng);
    const ChernData c = gamma_series(h);
    const std::int64_t q = h.irregularity();
    // sum_{a+b=k} gamma_a (-1)^a s_b = [k == 0]
    for (std::int64_t k = 0; k < q; ++k) {
      Integer total = 0;
      for (std::int64_t a = 0; a <= k; ++a) total += c.gamma_at(a) * (a % 2 ? -1 : 1) * segre_number(c, k - a);
      CHECK(total == (k == 0 ? 1 : 0));
    }
    CHECK_THROWS_AS(segre_number(c, q), InputError);
  }
}

TEST_CASE("schur_number rejects weights beyond q-1") {
  const ChernData c = gamma_series(theta_profile(3));
  CHECK_THROWS_AS(schur_number(c, Partition{{4}}), InputError);
  CHECK_NOTHROW(schur_number(c, Partition{{2, 1}}));
}

TEST_CASE("Hilbert polynomial of the BGG sheaf") {
  // theta divisor in dimension 3: F is O(1) on P^3
  for (std::int64_t i = -6; i <= 6; ++i) {
    CHECK(hilbert_poly_F(theta_profile(3), i) == oracle::chi_line_bundle(3, i + 1));
  }
  // abelian varieties: F = 0
  for (std::int64_t d = 1; d <= 5; ++d)
    for (std::int64_t i = -4; i <= 6; ++i) CHECK(hilbert_poly_F(abelian_profile(d), i) == 0);
}

TEST_CASE("Bott formula: worked values") {
  CHECK(bott_dimension(4, 3, 0) == std::vector<Integer>{0, 0, 0, 1, 0});
  CHECK(bott_dimension(2, 1, 2) == std::vector<Integer>{3, 0, 0});
  CHECK(bott_dimension(2, 0, -3) == std::vector<Integer>{0, 0, 1});
  CHECK(bott_dimension(3, 0, 2) == std::vector<Integer>{10, 0, 0, 0});
  CHECK_THROWS_AS(bott_dimension(3, 4, 0), InputError);
  CHECK_THROWS_AS(bott_dimension(0, 0, 0), InputError);
}

TEST_CASE("Bott formula: Serre duality and the Euler-sequence characteristic") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t p = 0; p <= n; ++p) {
      for (std::int64_t k = -10; k <= 10; ++k) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(k);
        const auto h = bott_dimension(n, p, k);
        const auto dual = bott_dimension(n, n - p, -k);
        Integer chi = 0;
        for (std::int64_t i = 0; i <= n; ++i) {
          CHECK(h[static_cast<std::size_t>(i)] == dual[static_cast<std::size_t>(n - i)]);
          CHECK(h[static_cast<std::size_t>(i)] >= 0);
          chi += h[static_cast<std::size_t>(i)] * (i % 2 ? -1 : 1);
        }
        CHECK(chi == oracle::chi_twisted_forms(n, p, k));
      }
    }
  }
}
