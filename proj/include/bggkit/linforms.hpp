#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bggkit/dense.hpp"
#include "bggkit/polynomial.hpp"

namespace bggkit {

/// Which factor of P^{b-1} x C^q the linear forms live on. A matrix built from
/// a complex has forms on the affine space C^q; flipping moves them to the
/// projective factor and makes the columns run over C^q.
enum class FormSpace { affine, projective };

/// a x b matrix of linear forms in q variables, stored as the tensor T with
/// entry (r, c) = sum_i T(r, c, i) x_i.
class LinFormMatrix {
 public:
  LinFormMatrix() = default;
  /// Zero tensor of the given shape.
  LinFormMatrix(std::int64_t a, std::int64_t b, std::int64_t q, FormSpace space = FormSpace::affine);

  std::int64_t rows() const { return a_; }
  std::int64_t cols() const { return b_; }
  std::int64_t vars() const { return q_; }
  FormSpace form_space() const { return space_; }

  const Rational& operator()(std::int64_t r, std::int64_t c, std::int64_t i) const { return data_[offset(r, c, i)]; }
  Rational& operator()(std::int64_t r, std::int64_t c, std::int64_t i) { return data_[offset(r, c, i)]; }

  bool is_zero() const;

  friend bool operator==(const LinFormMatrix&, const LinFormMatrix&) = default;

 private:
  std::size_t offset(std::int64_t r, std::int64_t c, std::int64_t i) const {
    return static_cast<std::size_t>((r * b_ + c) * q_ + i);
  }

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t q_ = 0;
  FormSpace space_ = FormSpace::affine;
  std::vector<Rational> data_;
};

/// Scalar a x b matrix at the point v (|v| = q).
MatrixQ eval_at(const LinFormMatrix& u, std::span<const Rational> v);

/// T'(r, i, c) = T(r, c, i); the form space switches factor. flip(flip(u)) == u.
LinFormMatrix flip(const LinFormMatrix& u);

/// One term y_p x_a of a bilinear form on C^b x C^q: `projective` indexes the
/// coordinates of the P^{b-1} factor, `affine` those of C^q.
struct BilinearTerm {
  std::int64_t projective = 0;
  std::int64_t affine = 0;
  Rational coeff;
  friend bool operator==(const BilinearTerm&, const BilinearTerm&) = default;
};

/// Nonzero terms sorted by (projective, affine).
using BilinearForm = std::vector<BilinearTerm>;

/// Row r gives the form sum_{c,i} T(r, c, i) y x, keyed in the fixed ambient
/// P^{b-1} x C^q, so that u and flip(u) produce identical lists.
std::vector<BilinearForm> bilinear_equations(const LinFormMatrix& u);

/// Rank of eval_at(u, v) at each sample point. Points must be nonzero.
std::vector<std::int64_t> rank_profile(const LinFormMatrix& u, std::span<const VectorQ> points);

/// Entries as polynomials, for symbolic elimination.
DenseMatrix<Poly> to_poly_matrix(const LinFormMatrix& u);

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// `count` nonzero integer points with coordinates in [-9, 9] from a
/// std::mt19937_64 seeded with `seed`.
std::vector<VectorQ> sample_points(std::int64_t q, std::int64_t count, std::uint64_t seed);

/// Rank over Q(x_1..x_q). A few seeded evaluations give a lower bound; when
/// that bound is not already min(a, b), symbolic fraction-free elimination
/// over Q[x] decides.
std::int64_t generic_rank(const LinFormMatrix& u, std::uint64_t seed = kDefaultSeed);

struct RankDropReport {
  std::int64_t generic_rank = 0;
  std::vector<std::int64_t> sampled;
  std::uint64_t seed = 0;
  bool constant = false;  ///< every sampled rank equals the generic rank
  std::string label() const;
};

/// Sampled evidence of constant rank; never a proof of local freeness.
RankDropReport analyze_rank(const LinFormMatrix& u, std::int64_t samples, std::uint64_t seed = kDefaultSeed);

}  // namespace bggkit
