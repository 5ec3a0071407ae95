#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bggkit/chern.hpp"
#include "bggkit/dense.hpp"
#include "bggkit/exterior.hpp"
#include "bggkit/linforms.hpp"

namespace bggkit {

/// Linear complex 0 -> S^{a_0} -> S^{a_1} -> ... -> S^{a_d} -> 0 over S = Sym(W),
/// W = V^dual with q variables. diffs[j] is an a_{j+1} x a_j matrix of linear forms.
struct LinearComplex {
  std::int64_t q = 0;
  std::vector<std::int64_t> spots;
  std::vector<LinFormMatrix> diffs;

  std::int64_t top_index() const { return static_cast<std::int64_t>(spots.size()) - 1; }
};

void validate_complex(const LinearComplex& c);

/// L(P): the differential S (x) P_j -> S (x) P_{j+1} sends s (x) p to sum_i x_i s (x) e_i p.
LinearComplex bgg_complex(const ExteriorModule& m);

/// True iff every composite diffs[j+1] * diffs[j] vanishes as a matrix of quadratic forms.
bool composes_to_zero(const LinearComplex& c);

/// Number of monomials of degree p in q variables (0 for p < 0).
std::int64_t monomial_count(std::int64_t q, std::int64_t p);

/// The maps into and out of S_p (x) P_j:
///   incoming: S_{p-1} (x) P_{j-1} -> S_p (x) P_j
///   outgoing: S_p (x) P_j -> S_{p+1} (x) P_{j+1}
/// Bases are (monomial, piece basis vector) pairs, monomial-major.
struct DegreeSlice {
  MatrixQ incoming;
  MatrixQ outgoing;
};

DegreeSlice degree_slice(const LinearComplex& c, std::int64_t spot, std::int64_t degree);

/// Coordinate form of the outgoing map at (spot, degree).
struct SliceMap {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<Entry> entries;
};
SliceMap outgoing_slice(const LinearComplex& c, std::int64_t spot, std::int64_t degree);

struct SlicePosition {
  std::int64_t spot = 0;
  std::int64_t degree = 0;
  friend bool operator==(const SlicePosition&, const SlicePosition&) = default;
};

/// Homology dimensions of a complex in the window of internal degrees 0..p_max.
/// Verdicts are certified for that window only.
struct ExactnessReport {
  std::int64_t p_max = 0;
  /// homology[j][p] = dim H at spot j, S-degree p.
  std::vector<std::vector<std::int64_t>> homology;
  /// term_dims[j][p] = dim S_p (x) P_j.
  std::vector<std::vector<std::int64_t>> term_dims;
  std::optional<SlicePosition> first_failure;
  /// max(0, d - first failing spot); 0 when the window shows no homology.
  std::optional<std::int64_t> regularity;
  /// Along every strand S_{s+j} (x) P_j fully inside the window the alternating
  /// sum of term dimensions equals that of the homology dimensions.
  bool ledger_consistent = false;

  std::int64_t homology_at(std::int64_t spot, std::int64_t degree) const {
    return homology.at(static_cast<std::size_t>(spot)).at(static_cast<std::size_t>(degree));
  }
  std::int64_t total_homology(std::int64_t spot) const;
};

struct ExactnessOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

ExactnessReport exactness_profile(const LinearComplex& c, std::int64_t p_max, ExactnessOptions options = {});

/// 2(d + q), the window used when the caller does not choose one.
std::int64_t default_window(const ExteriorModule& m);

struct RegularityResult {
  std::int64_t value = 0;
  std::optional<SlicePosition> witness;
  std::int64_t p_max = 0;
};

/// Smallest m such that L(P) is exact at the first d - m spots inside the window.
RegularityResult regularity(const ExteriorModule& m, std::int64_t p_max);
inline RegularityResult regularity(const ExteriorModule& m) { return regularity(m, default_window(m)); }

/// b_i = chi(F(i)) for a module with a linear resolution (regularity 0 in the
/// window); i < 0 gives 0. Throws InputError if the module is not 0-regular or
/// its pieces disagree with the profile.
Integer betti_linear(const ExteriorModule& m, const HodgeProfile& h, std::int64_t i);

/// Profile-only variant: the no-irregular-fibrations assertion stands in for
/// 0-regularity. Throws InputError when the flag is absent.
Integer betti_linear(const HodgeProfile& h, std::int64_t i);

}  // namespace bggkit
