#include "bggkit/linforms.hpp"

#include <algorithm>
#include <random>

#include "bggkit/error.hpp"

namespace bggkit {

LinFormMatrix::LinFormMatrix(std::int64_t a, std::int64_t b, std::int64_t q, FormSpace space)
    : a_(a), b_(b), q_(q), space_(space) {
  if (a < 0 || b < 0 || q < 0) throw InputError("matrix of linear forms needs non-negative shape");
  data_.assign(static_cast<std::size_t>(a * b * q), Rational(0));
}

bool LinFormMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

MatrixQ eval_at(const LinFormMatrix& u, std::span<const Rational> v) {
  if (static_cast<std::int64_t>(v.size()) != u.vars()) {
    throw InputError("evaluation point has " + std::to_string(v.size()) + " coordinates, expected " +
                     std::to_string(u.vars()));
  }
  MatrixQ out = MatrixQ::Zero(u.rows(), u.cols());
  for (std::int64_t r = 0; r < u.rows(); ++r) {
    for (std::int64_t c = 0; c < u.cols(); ++c) {
      for (std::int64_t i = 0; i < u.vars(); ++i) {
        if (u(r, c, i) != 0 && v[static_cast<std::size_t>(i)] != 0) out(r, c) += u(r, c, i) * v[static_cast<std::size_t>(i)];
      }
    }
  }
  return out;
}

LinFormMatrix flip(const LinFormMatrix& u) {
  LinFormMatrix out(u.rows(), u.vars(), u.cols(),
                    u.form_space() == FormSpace::affine ? FormSpace::projective : FormSpace::affine);
  for (std::int64_t r = 0; r < u.rows(); ++r) {
    for (std::int64_t c = 0; c < u.cols(); ++c) {
      for (std::int64_t i = 0; i < u.vars(); ++i) out(r, i, c) = u(r, c, i);
    }
  }
  return out;
}

std::vector<BilinearForm> bilinear_equations(const LinFormMatrix& u) {
  const bool affine_forms = u.form_space() == FormSpace::affine;
  std::vector<BilinearForm> out(static_cast<std::size_t>(u.rows()));
  for (std::int64_t r = 0; r < u.rows(); ++r) {
    auto& form = out[static_cast<std::size_t>(r)];
    for (std::int64_t c = 0; c < u.cols(); ++c) {
      for (std::int64_t i = 0; i < u.vars(); ++i) {
        if (u(r, c, i) == 0) continue;
        form.push_back(affine_forms ? BilinearTerm{c, i, u(r, c, i)} : BilinearTerm{i, c, u(r, c, i)});
      }
    }
    std::sort(form.begin(), form.end(), [](const BilinearTerm& x, const BilinearTerm& y) {
      return std::tie(x.projective, x.affine) < std::tie(y.projective, y.affine);
    });
  }
  return out;
}

std::vector<std::int64_t> rank_profile(const LinFormMatrix& u, std::span<const VectorQ> points) {
  if (points.empty()) throw InputError("rank profile needs at least one sample point");
  std::vector<std::int64_t> ranks;
  ranks.reserve(points.size());
  for (const auto& v : points) {
    if (v.isZero()) throw InputError("sample points must be nonzero");
    ranks.push_back(rank(eval_at(u, std::span<const Rational>(v.data(), static_cast<std::size_t>(v.size())))));
  }
  return ranks;
}

DenseMatrix<Poly> to_poly_matrix(const LinFormMatrix& u) {
  DenseMatrix<Poly> out(u.rows(), u.cols());
  std::vector<Rational> coeffs(static_cast<std::size_t>(u.vars()));
  for (std::int64_t r = 0; r < u.rows(); ++r) {
    for (std::int64_t c = 0; c < u.cols(); ++c) {
      for (std::int64_t i = 0; i < u.vars(); ++i) coeffs[static_cast<std::size_t>(i)] = u(r, c, i);
      out(r, c) = Poly::linear(coeffs);
    }
  }
  return out;
}

std::vector<VectorQ> sample_points(std::int64_t q, std::int64_t count, std::uint64_t seed) {
  if (q < 1) throw InputError("sample points need q >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-9, 9);
  std::vector<VectorQ> out;
  while (static_cast<std::int64_t>(out.size()) < count) {
    VectorQ v(q);
    for (std::int64_t i = 0; i < q; ++i) v(i) = coord(rng);
    if (!v.isZero()) out.push_back(std::move(v));
  }
  return out;
}

std::int64_t generic_rank(const LinFormMatrix& u, std::uint64_t seed) {
  const std::int64_t full = std::min(u.rows(), u.cols());
  if (full == 0 || u.vars() == 0 || u.is_zero()) return 0;
  std::int64_t lower = 0;
  for (const auto& r : rank_profile(u, sample_points(u.vars(), 3, seed))) lower = std::max(lower, r);
  if (lower == full) return full;
  const std::int64_t symbolic = domain_rank(to_poly_matrix(u));
  if (symbolic < lower) throw InvariantViolation("symbolic rank below an evaluated rank");
  return symbolic;
}

std::string RankDropReport::label() const {
  return constant ? "no rank drop detected (sampled)" : "rank drop at sampled point(s)";
}

RankDropReport analyze_rank(const LinFormMatrix& u, std::int64_t samples, std::uint64_t seed) {
  RankDropReport report;
  report.seed = seed;
  report.generic_rank = generic_rank(u, seed);
  if (u.vars() > 0) report.sampled = rank_profile(u, sample_points(u.vars(), samples, seed));
  report.constant = std::all_of(report.sampled.begin(), report.sampled.end(),
                                [&](std::int64_t r) { return r == report.generic_rank; });
  return report;
}

}  // namespace bggkit
