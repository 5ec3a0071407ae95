#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "bggkit/rational.hpp"

namespace bggkit {

/// Sparse multivariate polynomial over Q in lexicographic term order. Used as
/// the scalar of the symbolic fraction-free elimination that decides the
/// generic rank of a matrix of linear forms. The variable count is implicit in
/// the exponent vectors; the zero polynomial and constants have no terms or a
/// single empty-exponent term, and mix freely with polynomials of any arity.
class Poly {
 public:
  using Exponents = std::vector<std::int32_t>;

  Poly() = default;
  Poly(int constant);  // NOLINT(google-explicit-constructor): scalar literal for Eigen
  explicit Poly(const Rational& constant);

  /// The linear form sum_i coeffs[i] x_i.
  static Poly linear(std::span<const Rational> coeffs);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::int32_t total_degree() const;

  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  /// Exact quotient. Throws InvariantViolation if b does not divide a.
  friend Poly operator/(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

 private:
  struct LexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, LexGreater>;

  static void add_term(Terms& terms, const Exponents& e, const Rational& c);

  Terms terms_;
};

inline std::size_t pivot_cost(const Poly& p) {
  return p.term_count() * 64 + static_cast<std::size_t>(p.total_degree());
}

}  // namespace bggkit

namespace Eigen {
template <>
struct NumTraits<bggkit::Poly> : GenericNumTraits<bggkit::Poly> {
  using Real = bggkit::Poly;
  using NonInteger = bggkit::Poly;
  using Nested = bggkit::Poly;
  using Literal = bggkit::Poly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
};
}  // namespace Eigen
