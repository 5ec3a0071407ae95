#include "bggkit/polynomial.hpp"

#include <algorithm>

#include "bggkit/error.hpp"

namespace bggkit {

namespace {

using Exponents = Poly::Exponents;

std::int32_t at(const Exponents& e, std::size_t i) { return i < e.size() ? e[i] : 0; }

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(a, i) + at(b, i);
  trim(out);
  return out;
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > at(e, i)) return false;
  }
  return true;
}

Exponents subtract(const Exponents& e, const Exponents& d) {
  Exponents out(e.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = e[i] - at(d, i);
  trim(out);
  return out;
}

}  // namespace

bool Poly::LexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (at(a, i) != at(b, i)) return at(a, i) > at(b, i);
  }
  return false;
}

Poly::Poly(int constant) : Poly(Rational(constant)) {}

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Poly Poly::linear(std::span<const Rational> coeffs) {
  Poly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Exponents e(i + 1, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), coeffs[i]);
  }
  return p;
}

std::int32_t Poly::total_degree() const {
  std::int32_t best = 0;
  for (const auto& [e, c] : terms_) {
    std::int32_t deg = 0;
    for (auto x : e) deg += x;
    best = std::max(best, deg);
  }
  return best;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw InputError("evaluation point has too few coordinates");
      for (auto k = e[i]; k > 0; --k) term *= point[i];
    }
    total += term;
  }
  return total;
}

void Poly::add_term(Terms& terms, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out(a);
  for (const auto& [e, c] : b.terms_) Poly::add_term(out.terms_, e, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out(a);
  for (const auto& [e, c] : b.terms_) Poly::add_term(out.terms_, e, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) Poly::add_term(out.terms_, add(ea, eb), ca * cb);
  }
  return out;
}

Poly operator/(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvariantViolation("polynomial division by zero");
  const auto& [lead_e, lead_c] = *b.terms_.begin();
  Poly remainder(a);
  Poly quotient;
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms_.begin();
    if (!divides(lead_e, re)) throw InvariantViolation("inexact polynomial division");
    Poly step;
    step.terms_.emplace(subtract(re, lead_e), rc / lead_c);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

}  // namespace bggkit
