#include "bggkit/examples.hpp"

#include <algorithm>
#include <bit>

#include "bggkit/error.hpp"

namespace bggkit {

namespace {

/// j-subsets of {0..q-1} as bitmasks, in lexicographic order of their sorted elements.
std::vector<std::uint32_t> subsets_of_size(std::int64_t q, std::int64_t j) {
  std::vector<std::uint32_t> out;
  std::vector<std::int64_t> pick;
  auto extend = [&](auto&& self, std::int64_t from) -> void {
    if (static_cast<std::int64_t>(pick.size()) == j) {
      std::uint32_t mask = 0;
      for (auto x : pick) mask |= 1u << x;
      out.push_back(mask);
      return;
    }
    for (std::int64_t x = from; x < q; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

/// Action matrices of left wedge multiplication on Lambda^* of a q-space,
/// restricted to pieces 0..top (top <= q).
std::vector<std::vector<MatrixQ>> wedge_actions(std::int64_t q, std::int64_t top) {
  std::vector<std::vector<std::uint32_t>> bases;
  for (std::int64_t j = 0; j <= top; ++j) bases.push_back(subsets_of_size(q, j));
  std::vector<std::vector<MatrixQ>> actions(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::int64_t j = 0; j < top; ++j) {
      const auto& from = bases[static_cast<std::size_t>(j)];
      const auto& to = bases[static_cast<std::size_t>(j + 1)];
      MatrixQ a = MatrixQ::Zero(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
      for (std::size_t c = 0; c < from.size(); ++c) {
        if (from[c] & bit) continue;
        const std::uint32_t target = from[c] | bit;
        // e_i ^ e_S = (-1)^{#{s in S : s < i}} e_{S u {i}}
        const int sign = (std::popcount(from[c] & (bit - 1)) % 2 == 0) ? 1 : -1;
        const auto r = std::find(to.begin(), to.end(), target) - to.begin();
        a(r, static_cast<Eigen::Index>(c)) = sign;
      }
      actions[static_cast<std::size_t>(i)].push_back(std::move(a));
    }
  }
  return actions;
}

}  // namespace

ExteriorModule koszul_module(std::int64_t q) {
  if (q < 1 || q > 16) throw InputError("koszul_module supports 1 <= q <= 16");
  ExteriorModule m;
  m.q = q;
  for (std::int64_t j = 0; j <= q; ++j) m.piece_dims.push_back(binomial(Integer(q), j).convert_to<std::int64_t>());
  m.actions = wedge_actions(q, q);
  return m;
}

ExteriorModule product_module(std::int64_t m, std::int64_t k) {
  if (m < 1 || m > 16) throw InputError("product_module supports 1 <= m <= 16");
  if (k < 1) throw InputError("product_module needs k >= 1");
  ExteriorModule out = koszul_module(m);
  for (std::int64_t j = 0; j < k; ++j) {
    const std::int64_t last = out.piece_dims.back();
    out.piece_dims.push_back(0);
    for (auto& list : out.actions) list.push_back(MatrixQ::Zero(0, last));
  }
  return out;
}

HodgeProfile theta_profile(std::int64_t d) {
  if (d < 2) throw InputError("theta_profile needs d >= 2");
  HodgeProfile h;
  h.dimension = d;
  for (std::int64_t j = 0; j < d; ++j) h.h0.push_back(binomial(Integer(d + 1), j).convert_to<std::int64_t>());
  h.h0.push_back(d + 1);
  h.no_irregular_fibrations = true;
  h.isolated_origin = true;
  return h;
}

HodgeProfile abelian_profile(std::int64_t d) {
  if (d < 1) throw InputError("abelian_profile needs d >= 1");
  HodgeProfile h;
  h.dimension = d;
  for (std::int64_t j = 0; j <= d; ++j) h.h0.push_back(binomial(Integer(d), j).convert_to<std::int64_t>());
  h.isolated_origin = true;
  return h;
}

std::vector<ExampleCase> example_catalog() {
  using enum ValueBasis;
  std::vector<ExampleCase> out;
  out.push_back({"theta3", std::nullopt, theta_profile(3),
                 {{"euler_char", {"1", published}},
                  {"gamma", {"1,1,0,0", independent_check}},
                  {"betti", {"4,10,20", independent_check}},
                  {"segre_3", {"1", independent_check}}}});
  out.push_back({"theta2", std::nullopt, theta_profile(2),
                 {{"euler_char", {"1", published}}, {"gamma", {"1,1,0", independent_check}}}});
  out.push_back({"theta4", std::nullopt, theta_profile(4),
                 {{"euler_char", {"1", independent_check}}, {"gamma", {"1,1,0,0,0", independent_check}}}});
  out.push_back({"abelian3", koszul_module(3), abelian_profile(3),
                 {{"euler_char", {"0", elementary}},
                  {"gamma", {"1,0,0", independent_check}},
                  {"regularity", {"0", published}},
                  {"betti", {"0,0,0", elementary}}}});
  out.push_back({"abelian2", koszul_module(2), abelian_profile(2),
                 {{"euler_char", {"0", elementary}}, {"gamma", {"1,0", independent_check}}, {"regularity", {"0", published}}}});
  out.push_back({"product_2_1", product_module(2, 1), std::nullopt, {{"regularity", {"1", published}}}});
  out.push_back({"product_3_2", product_module(3, 2), std::nullopt, {{"regularity", {"2", published}}}});
  return out;
}

}  // namespace bggkit
