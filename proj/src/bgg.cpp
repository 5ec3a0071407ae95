#include "bggkit/bgg.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "bggkit/error.hpp"

namespace bggkit {

namespace {

/// Monomials of degree p in q variables, indexed by the colex rank of their
/// stars-and-bars bar positions.
class MonomialIndex {
 public:
  MonomialIndex(std::int64_t q, std::int64_t p) : q_(q), p_(p) {
    const std::int64_t n = p + q;
    pascal_.assign(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(q + 1), 0));
    for (std::int64_t a = 0; a <= n; ++a) {
      pascal_[static_cast<std::size_t>(a)][0] = 1;
      for (std::int64_t b = 1; b <= std::min(a, q); ++b) {
        pascal_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            pascal_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
            (b <= a - 1 ? pascal_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] : 0);
      }
    }
    if (p < 0) return;
    monomials_.resize(static_cast<std::size_t>(monomial_count(q, p)));
    std::vector<std::int32_t> e(static_cast<std::size_t>(q), 0);
    fill(e, 0, p);
  }

  std::int64_t size() const { return static_cast<std::int64_t>(monomials_.size()); }
  const std::vector<std::int32_t>& exponents(std::int64_t k) const { return monomials_[static_cast<std::size_t>(k)]; }

  /// Rank of a monomial of degree at most p (lower degrees use the same table).
  std::int64_t rank_of(const std::vector<std::int32_t>& e) const {
    std::int64_t rank = 0;
    std::int64_t partial = 0;
    for (std::int64_t k = 0; k + 1 < q_; ++k) {
      partial += e[static_cast<std::size_t>(k)];
      const std::int64_t bar = partial + k;
      rank += choose(bar, k + 1);
    }
    return rank;
  }

 private:
  std::int64_t choose(std::int64_t a, std::int64_t b) const {
    if (b > a) return 0;
    return pascal_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  void fill(std::vector<std::int32_t>& e, std::int64_t var, std::int64_t remaining) {
    if (var == q_ - 1) {
      e[static_cast<std::size_t>(var)] = static_cast<std::int32_t>(remaining);
      monomials_[static_cast<std::size_t>(rank_of(e))] = e;
      return;
    }
    for (std::int64_t x = 0; x <= remaining; ++x) {
      e[static_cast<std::size_t>(var)] = static_cast<std::int32_t>(x);
      fill(e, var + 1, remaining - x);
    }
    e[static_cast<std::size_t>(var)] = 0;
  }

  std::int64_t q_;
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> pascal_;
  std::vector<std::vector<std::int32_t>> monomials_;
};

std::int64_t spot_dim(const LinearComplex& c, std::int64_t j) {
  if (j < 0 || j > c.top_index()) return 0;
  return c.spots[static_cast<std::size_t>(j)];
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) body(k);
    });
  }
}

}  // namespace

void validate_complex(const LinearComplex& c) {
  if (c.q < 1) throw InputError("complex needs q >= 1");
  if (c.spots.empty()) throw InputError("complex needs at least one spot");
  for (auto a : c.spots) {
    if (a < 0) throw InputError("spot multiplicities must be non-negative");
  }
  if (static_cast<std::int64_t>(c.diffs.size()) != c.top_index()) {
    throw InputError("complex with " + std::to_string(c.spots.size()) + " spots needs " +
                     std::to_string(c.top_index()) + " differentials");
  }
  for (std::int64_t j = 0; j < c.top_index(); ++j) {
    const auto& u = c.diffs[static_cast<std::size_t>(j)];
    if (u.rows() != spot_dim(c, j + 1) || u.cols() != spot_dim(c, j) || u.vars() != c.q) {
      throw InputError("differential " + std::to_string(j) + " has the wrong shape");
    }
  }
}

LinearComplex bgg_complex(const ExteriorModule& m) {
  validate_module(m);
  LinearComplex c;
  c.q = m.q;
  c.spots = m.piece_dims;
  for (std::int64_t j = 0; j < m.top_index(); ++j) {
    LinFormMatrix u(m.piece_dims[static_cast<std::size_t>(j + 1)], m.piece_dims[static_cast<std::size_t>(j)], m.q);
    for (std::int64_t i = 0; i < m.q; ++i) {
      const MatrixQ& a = m.action(i, j);
      for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index col = 0; col < a.cols(); ++col) u(r, col, i) = a(r, col);
      }
    }
    c.diffs.push_back(std::move(u));
  }
  return c;
}

bool composes_to_zero(const LinearComplex& c) {
  validate_complex(c);
  for (std::int64_t j = 0; j + 2 <= c.top_index(); ++j) {
    const auto& first = c.diffs[static_cast<std::size_t>(j)];
    const auto& second = c.diffs[static_cast<std::size_t>(j + 1)];
    for (std::int64_t r = 0; r < second.rows(); ++r) {
      for (std::int64_t col = 0; col < first.cols(); ++col) {
        // Coefficient of x_a x_b (a <= b) in sum_k second(r,k) * first(k,col).
        for (std::int64_t a = 0; a < c.q; ++a) {
          for (std::int64_t b = a; b < c.q; ++b) {
            Rational coeff = 0;
            for (std::int64_t k = 0; k < first.rows(); ++k) {
              coeff += second(r, k, a) * first(k, col, b);
              if (a != b) coeff += second(r, k, b) * first(k, col, a);
            }
            if (coeff != 0) return false;
          }
        }
      }
    }
  }
  return true;
}

std::int64_t monomial_count(std::int64_t q, std::int64_t p) {
  if (p < 0) return 0;
  Integer n = binomial(Integer(p + q - 1), q - 1);
  return n.convert_to<std::int64_t>();
}

SliceMap outgoing_slice(const LinearComplex& c, std::int64_t spot, std::int64_t degree) {
  validate_complex(c);
  if (spot < 0 || spot > c.top_index()) throw InputError("spot out of range");
  if (degree < 0) throw InputError("internal degree must be non-negative");
  SliceMap out;
  const std::int64_t source = spot_dim(c, spot);
  const std::int64_t target = spot_dim(c, spot + 1);
  out.cols = monomial_count(c.q, degree) * source;
  out.rows = monomial_count(c.q, degree + 1) * target;
  if (out.rows == 0 || out.cols == 0) return out;

  const auto& u = c.diffs[static_cast<std::size_t>(spot)];
  struct Action {
    std::int64_t var;
    std::int64_t row;
    Rational value;
  };
  std::vector<std::vector<Action>> column_actions(static_cast<std::size_t>(source));
  for (std::int64_t col = 0; col < source; ++col) {
    for (std::int64_t i = 0; i < c.q; ++i) {
      for (std::int64_t r = 0; r < target; ++r) {
        if (u(r, col, i) != 0) column_actions[static_cast<std::size_t>(col)].push_back({i, r, u(r, col, i)});
      }
    }
  }

  const MonomialIndex monomials(c.q, degree);
  const MonomialIndex next(c.q, degree + 1);
  std::vector<std::int32_t> shifted;
  for (std::int64_t m = 0; m < monomials.size(); ++m) {
    for (std::int64_t col = 0; col < source; ++col) {
      for (const auto& act : column_actions[static_cast<std::size_t>(col)]) {
        shifted = monomials.exponents(m);
        ++shifted[static_cast<std::size_t>(act.var)];
        out.entries.push_back({next.rank_of(shifted) * target + act.row, m * source + col, act.value});
      }
    }
  }
  return out;
}

DegreeSlice degree_slice(const LinearComplex& c, std::int64_t spot, std::int64_t degree) {
  const SliceMap out = outgoing_slice(c, spot, degree);
  DegreeSlice slice;
  slice.outgoing = to_dense(out.rows, out.cols, out.entries);
  if (spot > 0 && degree > 0) {
    const SliceMap in = outgoing_slice(c, spot - 1, degree - 1);
    slice.incoming = to_dense(in.rows, in.cols, in.entries);
  } else {
    slice.incoming = MatrixQ::Zero(monomial_count(c.q, degree) * spot_dim(c, spot),
                                   monomial_count(c.q, degree - 1) * spot_dim(c, spot - 1));
  }
  return slice;
}

std::int64_t ExactnessReport::total_homology(std::int64_t spot) const {
  std::int64_t total = 0;
  for (auto h : homology.at(static_cast<std::size_t>(spot))) total += h;
  return total;
}

ExactnessReport exactness_profile(const LinearComplex& c, std::int64_t p_max, ExactnessOptions options) {
  validate_complex(c);
  if (p_max < 0) throw InputError("p_max must be non-negative");
  const std::int64_t d = c.top_index();
  const auto spots = static_cast<std::size_t>(d + 1);
  const auto degrees = static_cast<std::size_t>(p_max + 1);

  // out_rank[j][p]: rank of S_p (x) P_j -> S_{p+1} (x) P_{j+1}; zero at the last spot.
  std::vector<std::vector<std::int64_t>> out_rank(spots, std::vector<std::int64_t>(degrees, 0));
  parallel_for(static_cast<std::size_t>(d) * degrees, options.threads, [&](std::size_t task) {
    const auto j = static_cast<std::int64_t>(task / degrees);
    const auto p = static_cast<std::int64_t>(task % degrees);
    const SliceMap slice = outgoing_slice(c, j, p);
    out_rank[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] =
        block_rank(slice.rows, slice.cols, slice.entries);
  });

  ExactnessReport report;
  report.p_max = p_max;
  report.homology.assign(spots, std::vector<std::int64_t>(degrees, 0));
  report.term_dims.assign(spots, std::vector<std::int64_t>(degrees, 0));
  for (std::int64_t j = 0; j <= d; ++j) {
    for (std::int64_t p = 0; p <= p_max; ++p) {
      const std::int64_t term = monomial_count(c.q, p) * spot_dim(c, j);
      const std::int64_t in = (j > 0 && p > 0) ? out_rank[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(p - 1)] : 0;
      const std::int64_t h = term - out_rank[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] - in;
      if (h < 0) throw InvariantViolation("negative homology dimension");
      report.term_dims[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] = term;
      report.homology[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] = h;
    }
  }
  // Leftmost spot with homology, smallest degree at that spot.
  for (std::int64_t j = 0; j <= d && !report.first_failure; ++j) {
    for (std::int64_t p = 0; p <= p_max; ++p) {
      if (report.homology_at(j, p) > 0) {
        report.first_failure = SlicePosition{j, p};
        break;
      }
    }
  }
  report.regularity = report.first_failure ? std::max<std::int64_t>(0, d - report.first_failure->spot) : 0;

  // Strand ledger: terms S_{s+j} (x) P_j with 0 <= s+j <= p_max for every j.
  report.ledger_consistent = true;
  for (std::int64_t s = 0; s + d <= p_max; ++s) {
    std::int64_t terms = 0;
    std::int64_t homology = 0;
    for (std::int64_t j = 0; j <= d; ++j) {
      const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
      terms += sign * monomial_count(c.q, s + j) * spot_dim(c, j);
      homology += sign * report.homology_at(j, s + j);
    }
    if (terms != homology) report.ledger_consistent = false;
  }
  return report;
}

std::int64_t default_window(const ExteriorModule& m) { return 2 * (m.top_index() + m.q); }

RegularityResult regularity(const ExteriorModule& m, std::int64_t p_max) {
  const ExactnessReport report = exactness_profile(bgg_complex(m), p_max);
  return RegularityResult{*report.regularity, report.first_failure, p_max};
}

Integer betti_linear(const ExteriorModule& m, const HodgeProfile& h, std::int64_t i) {
  validate_profile(h);
  validate_module(m);
  if (m.q != h.irregularity() || m.piece_dims != h.h0) {
    throw InputError("module pieces do not match the Hodge profile");
  }
  const RegularityResult reg = regularity(m);
  if (reg.value != 0) {
    throw InputError("exterior Betti numbers via the Hilbert polynomial need a 0-regular module; regularity is " +
                     std::to_string(reg.value));
  }
  if (i < 0) return Integer(0);
  return hilbert_poly_F(h, i);
}

Integer betti_linear(const HodgeProfile& h, std::int64_t i) {
  validate_profile(h);
  if (!h.no_irregular_fibrations) {
    throw InputError("Betti numbers from a profile alone need the no_irregular_fibrations assertion");
  }
  if (i < 0) return Integer(0);
  return hilbert_poly_F(h, i);
}

}  // namespace bggkit
