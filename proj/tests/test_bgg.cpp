#include <doctest.h>

#include <random>

#include "bggkit/bgg.hpp"
#include "bggkit/error.hpp"
#include "bggkit/examples.hpp"
#include "module_builders.hpp"

using namespace bggkit;
using namespace testing_modules;

namespace {

ExteriorModule pad_to(const ExteriorModule& m, std::int64_t d) {
  std::vector<std::int64_t> zeros(static_cast<std::size_t>(d + 1), 0);
  zeros[0] = 0;
  return direct_sum(m, zero_action_module(m.q, zeros));
}

}  // namespace

TEST_CASE("monomial counts") {
  for (std::int64_t q = 1; q <= 6; ++q)
    for (std::int64_t p = -1; p <= 10; ++p) CHECK(monomial_count(q, p) == oracle::pascal(p + q - 1, q - 1));
}

TEST_CASE("BGG complexes of modules are complexes") {
  std::mt19937_64 rng(61);
  for (std::int64_t q = 1; q <= 4; ++q) {
    CHECK(composes_to_zero(bgg_complex(koszul_module(q))));
    CHECK(composes_to_zero(bgg_complex(random_change_of_basis(rng, koszul_module(q)))));
  }
  CHECK(composes_to_zero(bgg_complex(product_module(3, 2))));
  LinearComplex broken = bgg_complex(koszul_module(3));
  broken.diffs[0](0, 0, 1) += 1;
  CHECK_FALSE(composes_to_zero(broken));
}

TEST_CASE("consecutive degree slices compose to zero") {
  const LinearComplex c = bgg_complex(koszul_module(3));
  for (std::int64_t j = 1; j < 3; ++j) {
    for (std::int64_t p = 1; p <= 4; ++p) {
      const DegreeSlice s = degree_slice(c, j, p);
      CHECK(s.incoming.rows() == s.outgoing.cols());
      const MatrixQ product = s.outgoing * s.incoming;
      CHECK(product.isZero());
    }
  }
  CHECK_THROWS_AS(degree_slice(c, 4, 0), InputError);
  CHECK_THROWS_AS(degree_slice(c, 0, -1), InputError);
}

TEST_CASE("Koszul homology agrees with the brute-force oracle") {
  for (std::int64_t q = 1; q <= 4; ++q) {
    const ExteriorModule m = koszul_module(q);
    const std::int64_t window = default_window(m);
    const ExactnessReport r = exactness_profile(bgg_complex(m), window);
    CHECK(r.homology == oracle::KoszulHomology(q, window).compute());
    CHECK(r.ledger_consistent);
    REQUIRE(r.first_failure.has_value());
    CHECK(*r.first_failure == SlicePosition{q, 0});
    CHECK(r.total_homology(q) == 1);
  }
}

TEST_CASE("the slice ledger holds on assorted modules") {
  std::mt19937_64 rng(62);
  const std::vector<ExteriorModule> modules{product_module(2, 1), exterior_window(3, 1, 2),
                                            zero_action_module(2, {2, 1, 3}),
                                            random_change_of_basis(rng, koszul_module(3))};
  for (const auto& m : modules) {
    const ExactnessReport r = exactness_profile(bgg_complex(m), default_window(m));
    CHECK(r.ledger_consistent);
    for (std::size_t j = 0; j < r.term_dims.size(); ++j)
      for (std::size_t p = 0; p < r.term_dims[j].size(); ++p) CHECK(r.homology[j][p] <= r.term_dims[j][p]);
  }
}

TEST_CASE("thread count does not change the report") {
  const LinearComplex c = bgg_complex(product_module(3, 1));
  const ExactnessReport one = exactness_profile(c, 8, {1});
  const ExactnessReport many = exactness_profile(c, 8, {4});
  CHECK(one.homology == many.homology);
  CHECK(one.first_failure == many.first_failure);
}

TEST_CASE("regularity of the worked modules") {
  for (std::int64_t q = 1; q <= 4; ++q) CHECK(regularity(koszul_module(q)).value == 0);
  CHECK(regularity(product_module(2, 1)).value == 1);
  CHECK(regularity(product_module(3, 1)).value == 1);
  CHECK(regularity(product_module(2, 2)).value == 2);
  const RegularityResult zero = regularity(zero_action_module(3, {1, 1, 1}));
  CHECK(zero.value == 2);
  REQUIRE(zero.witness.has_value());
  CHECK(zero.witness->spot == 0);
  CHECK(zero.p_max == 2 * (2 + 3));
}

TEST_CASE("regularity of a direct sum is the larger regularity") {
  std::mt19937_64 rng(63);
  const std::int64_t q = 2, d = 3;
  const std::vector<ExteriorModule> parts{pad_to(koszul_module(q), d), pad_to(exterior_window(q, 0, 1), d),
                                          zero_action_module(q, {1, 0, 1, 0}), zero_action_module(q, {0, 0, 0, 2}),
                                          pad_to(random_change_of_basis(rng, koszul_module(q)), d)};
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      const auto ra = regularity(a).value, rb = regularity(b).value;
      CHECK(regularity(direct_sum(a, b)).value == std::max(ra, rb));
    }
  }
}

TEST_CASE("fibres of the Koszul complex are exact at nonzero points") {
  std::mt19937_64 rng(64);
  for (std::int64_t q = 1; q <= 5; ++q) {
    const ExteriorModule m = random_change_of_basis(rng, koszul_module(q));
    const LinearComplex c = bgg_complex(m);
    for (const auto& v : sample_points(q, 10, 100 + static_cast<std::uint64_t>(q))) {
      const std::span<const Rational> point(v.data(), static_cast<std::size_t>(v.size()));
      std::vector<std::int64_t> ranks;
      for (const auto& u : c.diffs) ranks.push_back(rank(eval_at(u, point)));
      for (std::int64_t j = 0; j <= q; ++j) {
        const std::int64_t out = j < q ? ranks[static_cast<std::size_t>(j)] : 0;
        const std::int64_t in = j > 0 ? ranks[static_cast<std::size_t>(j - 1)] : 0;
        CHECK(out + in == m.piece_dims[static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST_CASE("Betti numbers from the Hilbert polynomial") {
  const HodgeProfile theta = theta_profile(3);
  CHECK(betti_linear(theta, 0) == 4);
  CHECK(betti_linear(theta, 1) == 10);
  CHECK(betti_linear(theta, 2) == 20);
  CHECK(betti_linear(theta, -1) == 0);
  HodgeProfile unflagged = theta;
  unflagged.no_irregular_fibrations = false;
  CHECK_THROWS_AS(betti_linear(unflagged, 0), InputError);

  for (std::int64_t i = 0; i < 4; ++i) CHECK(betti_linear(koszul_module(3), abelian_profile(3), i) == 0);
  CHECK_THROWS_AS(betti_linear(koszul_module(2), abelian_profile(3), 0), InputError);
  HodgeProfile product_profile;
  product_profile.dimension = 3;
  product_profile.h0 = {1, 2, 1, 0};
  CHECK_THROWS_AS(betti_linear(product_module(2, 1), product_profile, 0), InputError);
}

TEST_CASE("complex validation") {
  LinearComplex c = bgg_complex(koszul_module(2));
  c.spots[1] = 3;
  CHECK_THROWS_AS(validate_complex(c), InputError);
  CHECK_THROWS_AS(exactness_profile(bgg_complex(koszul_module(2)), -1), InputError);
}
