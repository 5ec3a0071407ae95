#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bggkit/chern.hpp"
#include "bggkit/exterior.hpp"

namespace bggkit {

/// The exterior algebra on q generators as a module over itself: piece j is
/// Lambda^j V with basis the j-subsets in lexicographic order, and e_i acts by
/// left wedge multiplication.
ExteriorModule koszul_module(std::int64_t q);

/// Cohomology module of O_X for X = A x P^k with A abelian of dimension m:
/// Lambda^j V on pieces 0..m and zero pieces up to d = m + k.
ExteriorModule product_module(std::int64_t m, std::int64_t k);

/// Theta divisor in an abelian (d+1)-fold: h0 = C(d+1, j) for j < d, h0[d] = d+1.
/// Both hypothesis flags are set.
HodgeProfile theta_profile(std::int64_t d);

/// Abelian d-fold: h0 = C(d, j); isolated_origin set, no_irregular_fibrations not.
HodgeProfile abelian_profile(std::int64_t d);

/// How an expected value was obtained.
enum class ValueBasis { published, elementary, independent_check };

struct ExpectedValue {
  std::string value;
  ValueBasis basis;
};

struct ExampleCase {
  std::string name;
  std::optional<ExteriorModule> module;
  std::optional<HodgeProfile> profile;
  /// operation name -> expected value
  std::map<std::string, ExpectedValue> expected;
};

/// The worked cases: abelian and theta profiles, Koszul and product modules.
std::vector<ExampleCase> example_catalog();

}  // namespace bggkit
