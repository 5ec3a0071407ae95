#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bggkit/rational.hpp"
#include "bggkit/series.hpp"

namespace bggkit {

/// Hodge data of an irregular compact Kaehler manifold, entered as the numbers
/// h^{0,j} = h^j(X, O_X). The top-row numbers h^{d,j} follow by Serre duality.
/// The two flags are caller assertions of analytic hypotheses; they are never
/// inferred from the numbers.
struct HodgeProfile {
  std::int64_t dimension = 0;
  std::vector<std::int64_t> h0;
  bool no_irregular_fibrations = false;
  bool isolated_origin = false;
  /// Optional h^{1,1}, only meaningful for surfaces.
  std::optional<std::int64_t> h11;

  std::int64_t irregularity() const { return h0.at(1); }
  std::int64_t geometric_genus() const { return h0.at(static_cast<std::size_t>(dimension)); }
  /// h^{d,j} = h^{0,d-j}.
  std::int64_t top_row(std::int64_t j) const { return h0.at(static_cast<std::size_t>(dimension - j)); }
};

/// Throws InputError unless d >= 1, |h0| = d+1, h0[0] = 1, q >= 1 and all entries >= 0.
void validate_profile(const HodgeProfile& h);

/// gamma[0..q-1] of gamma(X;t), and chi(omega_X), the expected rank of the BGG sheaf.
struct ChernData {
  std::vector<Integer> gamma;
  Integer rank;

  std::int64_t irregularity() const { return static_cast<std::int64_t>(gamma.size()); }
  /// gamma_k, with gamma_k = 0 outside 0..q-1.
  Integer gamma_at(std::int64_t k) const;
};

/// Weakly decreasing list of positive parts.
struct Partition {
  std::vector<std::int64_t> parts;

  std::int64_t weight() const;
  Partition conjugate() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

void validate_partition(const Partition& lam);

/// All partitions with 1 <= weight <= max_weight, ordered by weight, then
/// reverse-lexicographically within a weight ((2) before (1,1)).
std::vector<Partition> partitions_up_to(std::int64_t max_weight);

/// chi(omega_X) = sum_i (-1)^i h^{d,i}.
std::int64_t euler_char(const HodgeProfile& h);

/// prod_{j=1}^d (1 - j t)^{(-1)^j h^{d,j}} truncated at t^{q-1}.
TruncSeries gamma_power_series(const HodgeProfile& h);

/// Integer coefficients of gamma_power_series plus chi(omega_X).
ChernData gamma_series(const HodgeProfile& h);

/// det(gamma_{lam_i + j - i}) over the rows of lam (Schur polynomial in the
/// Chern classes gamma_i). Requires weight(lam) <= q-1.
Integer schur_number(const ChernData& c, const Partition& lam);

/// [t^k] 1/gamma(-t): the degree-k Segre class of the dual bundle.
/// Equals schur_number(c, (1^k)). Requires 0 <= k <= q-1.
Integer segre_number(const ChernData& c, std::int64_t k);

/// chi(F(i)) = sum_j (-1)^j h^{d,j} C(n+i-j, n), n = q-1, from the linear
/// resolution of the BGG sheaf. Binomials are the polynomial extension in the
/// upper argument.
Integer hilbert_poly_F(const HodgeProfile& h, std::int64_t i);

/// (h^0, ..., h^n) of Omega^p(k) on projective n-space by the Bott formula.
std::vector<Integer> bott_dimension(std::int64_t n, std::int64_t p, std::int64_t k);

}  // namespace bggkit
