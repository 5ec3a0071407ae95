#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bggkit/chern.hpp"
#include "bggkit/rational.hpp"

namespace bggkit {

enum class CheckStatus { pass, fail, not_applicable };

/// base + sqrt(radicand)/2; without a radicand just `base`.
struct BoundExpr {
  Rational base;
  std::optional<Integer> radicand;
};

/// One inequality lhs >= rhs (or an identity lhs == rhs) with its verdict.
struct CheckRecord {
  std::string name;
  std::vector<std::string> hypotheses;  ///< profile flags the check is gated on
  CheckStatus status = CheckStatus::not_applicable;
  Rational lhs;
  BoundExpr rhs;
  bool equality = false;  ///< lhs == rhs exactly (only meaningful when evaluated)
  std::string witness;
  std::string note;
};

struct InequalityReport {
  std::vector<CheckRecord> checks;

  bool any_failure() const;
  bool all_not_applicable() const;
  const CheckRecord* find(const std::string& name) const;
  void append(const InequalityReport& other);
};

/// Data on the cohomological support loci: codims[i-1] = codim_0 V^i(omega_X)
/// for i = 1..d, and optionally p(alpha) at a nontrivial isolated point.
struct GVData {
  std::vector<std::int64_t> codims;
  std::optional<std::int64_t> p_alpha;
};

/// Order used to pick witnesses: weight, then larger parts first.
bool canonical_before(const Partition& a, const Partition& b);

/// Non-negativity of schur_number over `partitions`; the witness is the
/// canonically first failing partition, independent of the input order.
CheckRecord check_schur_positivity(const ChernData& c, std::span<const Partition> partitions);

/// Schur non-negativity for all weights <= q-1, vanishing of gamma_i for
/// chi < i < q, and chi >= q - d. Gated on isolated_origin.
InequalityReport check_chern_constraints(const HodgeProfile& h);

/// Closed-form consequences of gamma_1 >= 0 and gamma_2 >= 0 for d = 3, 4, 5,
/// the bound h^{0,2} >= 4q - 10 for d >= 3, and h^{0,3} >= h^{0,2} - 2 for
/// d = 3. Gated on no_irregular_fibrations.
InequalityReport solved_bounds(const HodgeProfile& h);

/// 2q + (largest l <= q-1 with [t^l] (1-t^2)^{-q} != 0).
std::int64_t surface_h11_bound(std::int64_t q);

/// Surface check h^{1,1} >= surface_h11_bound(q), when d = 2.
InequalityReport surface_check(const HodgeProfile& h);

std::int64_t gv_index(const GVData& g, const HodgeProfile& h);

/// chi >= gv_0, and chi >= q - d + p(alpha) when p(alpha) is given.
InequalityReport gv_check(const GVData& g, const HodgeProfile& h);

enum class Exorbitance { exorbitant, not_exorbitant, outside_criterion };

struct ExorbitanceResult {
  Exorbitance verdict = Exorbitance::outside_criterion;
  std::optional<std::int64_t> segre_index;
  std::optional<Integer> segre_value;
  std::string reason;
};

ExorbitanceResult exorbitance_verdict(const HodgeProfile& h);

/// Every check that applies to the profile (plus gv data, when given).
InequalityReport check_all(const HodgeProfile& h, const std::optional<GVData>& gv = std::nullopt);

std::string to_string(CheckStatus s);
std::string to_string(Exorbitance e);
std::string to_string(const Partition& lam);
std::string to_string(const BoundExpr& b);

}  // namespace bggkit
