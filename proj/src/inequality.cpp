#include "bggkit/inequality.hpp"

#include <algorithm>

#include "bggkit/error.hpp"

namespace bggkit {

namespace {

constexpr const char* kIsolatedOrigin = "isolated_origin";
constexpr const char* kNoIrregularFibrations = "no_irregular_fibrations";

CheckRecord gated(std::string name, const char* flag) {
  CheckRecord r;
  r.name = std::move(name);
  r.hypotheses = {flag};
  r.status = CheckStatus::not_applicable;
  return r;
}

/// Decides lhs >= base + sqrt(radicand)/2 exactly. Sets status and equality.
void decide(CheckRecord& r) {
  if (!r.rhs.radicand) {
    r.status = r.lhs >= r.rhs.base ? CheckStatus::pass : CheckStatus::fail;
    r.equality = r.lhs == r.rhs.base;
    return;
  }
  const Integer& radicand = *r.rhs.radicand;
  if (radicand < 0) {
    r.status = CheckStatus::not_applicable;
    r.note = "negative radicand";
    return;
  }
  const Rational twice_gap = 2 * (r.lhs - r.rhs.base);
  if (twice_gap < 0) {
    r.status = CheckStatus::fail;
    r.equality = false;
    return;
  }
  const Rational square = twice_gap * twice_gap;
  r.status = square >= Rational(radicand) ? CheckStatus::pass : CheckStatus::fail;
  r.equality = square == Rational(radicand);
}

CheckRecord bound(std::string name, const char* flag, const Rational& lhs, BoundExpr rhs) {
  CheckRecord r = gated(std::move(name), flag);
  r.lhs = lhs;
  r.rhs = std::move(rhs);
  decide(r);
  return r;
}

}  // namespace

bool InequalityReport::any_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

bool InequalityReport::all_not_applicable() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& r) { return r.status == CheckStatus::not_applicable; });
}

const CheckRecord* InequalityReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckRecord& r) { return r.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

void InequalityReport::append(const InequalityReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool canonical_before(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a.parts > b.parts;
}

CheckRecord check_schur_positivity(const ChernData& c, std::span<const Partition> partitions) {
  CheckRecord r = gated("chern.schur_nonnegative", kIsolatedOrigin);
  std::optional<Partition> witness;
  std::optional<Integer> witness_value;
  std::optional<Integer> minimum;
  for (const auto& lam : partitions) {
    const Integer value = schur_number(c, lam);
    if (!minimum || value < *minimum) minimum = value;
    if (value < 0 && (!witness || canonical_before(lam, *witness))) {
      witness = lam;
      witness_value = value;
    }
  }
  r.rhs.base = 0;
  if (witness) {
    r.status = CheckStatus::fail;
    r.lhs = Rational(*witness_value);
    r.witness = "lambda=" + to_string(*witness);
  } else {
    r.status = CheckStatus::pass;
    r.lhs = minimum ? Rational(*minimum) : Rational(0);
    r.equality = r.lhs == 0;
  }
  r.note = "lhs is the witness value on failure, the minimum over " + std::to_string(partitions.size()) +
           " partitions otherwise";
  return r;
}

InequalityReport check_chern_constraints(const HodgeProfile& h) {
  validate_profile(h);
  InequalityReport report;
  if (!h.isolated_origin) {
    report.checks.push_back(gated("chern.schur_nonnegative", kIsolatedOrigin));
    report.checks.push_back(gated("chern.gamma_vanishing", kIsolatedOrigin));
    report.checks.push_back(gated("chern.euler_lower_bound", kIsolatedOrigin));
    return report;
  }
  const ChernData c = gamma_series(h);
  const std::int64_t q = h.irregularity();
  const std::vector<Partition> partitions = partitions_up_to(q - 1);
  report.checks.push_back(check_schur_positivity(c, partitions));

  CheckRecord vanish = gated("chern.gamma_vanishing", kIsolatedOrigin);
  vanish.status = CheckStatus::pass;
  vanish.rhs.base = 0;
  const std::int64_t chi = c.rank.convert_to<std::int64_t>();
  for (std::int64_t i = std::max<std::int64_t>(chi + 1, 1); i < q; ++i) {
    if (c.gamma_at(i) != 0) {
      vanish.status = CheckStatus::fail;
      vanish.lhs = Rational(c.gamma_at(i));
      vanish.witness = "i=" + std::to_string(i);
      break;
    }
  }
  vanish.equality = vanish.status == CheckStatus::pass;
  vanish.note = "gamma_i = 0 for chi < i < q";
  report.checks.push_back(vanish);

  report.checks.push_back(bound("chern.euler_lower_bound", kIsolatedOrigin, Rational(chi),
                                BoundExpr{Rational(q - h.dimension), std::nullopt}));
  return report;
}

InequalityReport solved_bounds(const HodgeProfile& h) {
  validate_profile(h);
  InequalityReport report;
  const std::int64_t d = h.dimension;
  const bool tabulated = d >= 3 && d <= 5;
  if (!h.no_irregular_fibrations) {
    if (tabulated) {
      report.checks.push_back(gated("linear_gamma1_bound", kNoIrregularFibrations));
      report.checks.push_back(gated("quadratic_gamma2_bound", kNoIrregularFibrations));
    }
    if (d >= 3) report.checks.push_back(gated("h02_lower_bound", kNoIrregularFibrations));
    if (d == 3) report.checks.push_back(gated("threefold_h03_bound", kNoIrregularFibrations));
    return report;
  }
  const Rational q(h.irregularity());
  const Rational h02(d >= 2 ? h.h0[2] : 0);
  const Rational h03(d >= 3 ? h.h0[3] : 0);
  const Rational h04(d >= 4 ? h.h0[4] : 0);
  const Rational half(1, 2);
  const Integer iq = h.irregularity();
  if (d == 3) {
    report.checks.push_back(bound("linear_gamma1_bound", kNoIrregularFibrations, h02, {2 * q - 3, std::nullopt}));
    report.checks.push_back(
        bound("quadratic_gamma2_bound", kNoIrregularFibrations, h02, {2 * q - 7 * half, Integer(8 * iq - 23)}));
  } else if (d == 4) {
    const Integer ih02 = h.h0[2];
    report.checks.push_back(
        bound("linear_gamma1_bound", kNoIrregularFibrations, h03, {4 - 3 * q + 2 * h02, std::nullopt}));
    report.checks.push_back(bound("quadratic_gamma2_bound", kNoIrregularFibrations, h03,
                                  {7 * half - 3 * q + 2 * h02, Integer(49 - 24 * iq + 8 * ih02)}));
  } else if (d == 5) {
    const Integer ih02 = h.h0[2];
    const Integer ih03 = h.h0[3];
    report.checks.push_back(bound("linear_gamma1_bound", kNoIrregularFibrations, h04,
                                  {-5 + 4 * q - 3 * h02 + 2 * h03, std::nullopt}));
    // Radicand from the discriminant of gamma_2 in h^{0,4}.
    report.checks.push_back(bound("quadratic_gamma2_bound", kNoIrregularFibrations, h04,
                                  {-11 * half + 4 * q - 3 * h02 + 2 * h03, Integer(-79 + 48 * iq - 24 * ih02 + 8 * ih03)}));
  }
  if (d >= 3) {
    report.checks.push_back(
        bound("h02_lower_bound", kNoIrregularFibrations, h02, {4 * q - 10, std::nullopt}));
  }
  if (d == 3) {
    CheckRecord r = bound("threefold_h03_bound", kNoIrregularFibrations, h03, {h02 - 2, std::nullopt});
    r.note = "exact constituent of the asymptotic threefold bounds";
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::int64_t surface_h11_bound(std::int64_t q) {
  if (q < 1) throw InputError("surface_h11_bound needs q >= 1");
  const std::int64_t order = q - 1;
  // (1 - t^2)^{-q} = (1 - t)^{-q} (1 + t)^{-q}
  const TruncSeries chern = binom_power(1, -q, order) * binom_power(-1, -q, order);
  std::int64_t last = 0;
  for (std::int64_t l = 0; l <= order; ++l) {
    if (chern[l] != 0) last = l;
  }
  const std::int64_t result = 2 * q + last;
  const std::int64_t closed_form = (q % 2 == 0) ? 3 * q - 2 : 3 * q - 1;
  if (result != closed_form) throw InvariantViolation("surface h11 bound disagrees with its parity formula");
  return result;
}

InequalityReport surface_check(const HodgeProfile& h) {
  validate_profile(h);
  InequalityReport report;
  if (h.dimension != 2) return report;
  CheckRecord r = gated("surface_h11_bound", kNoIrregularFibrations);
  r.rhs.base = surface_h11_bound(h.irregularity());
  if (!h.h11) {
    r.note = "h11 not supplied";
  } else if (h.no_irregular_fibrations) {
    r.lhs = *h.h11;
    decide(r);
  }
  report.checks.push_back(std::move(r));
  return report;
}

std::int64_t gv_index(const GVData& g, const HodgeProfile& h) {
  validate_profile(h);
  if (static_cast<std::int64_t>(g.codims.size()) != h.dimension) {
    throw InputError("gv data needs one codimension per i = 1..d");
  }
  std::int64_t best = 0;
  for (std::size_t k = 0; k < g.codims.size(); ++k) {
    if (g.codims[k] < 0 || g.codims[k] > h.irregularity()) throw InputError("codimensions must lie in 0..q");
    const std::int64_t value = g.codims[k] - static_cast<std::int64_t>(k + 1);
    if (k == 0 || value < best) best = value;
  }
  return best;
}

InequalityReport gv_check(const GVData& g, const HodgeProfile& h) {
  const std::int64_t gv0 = gv_index(g, h);
  const Rational chi(euler_char(h));
  InequalityReport report;
  CheckRecord r;
  r.name = "gv_index_bound";
  r.lhs = chi;
  r.rhs.base = gv0;
  decide(r);
  report.checks.push_back(std::move(r));
  if (g.p_alpha) {
    if (*g.p_alpha < 0) throw InputError("p_alpha must be non-negative");
    CheckRecord iso;
    iso.name = "isolated_point_bound";
    iso.lhs = chi;
    iso.rhs.base = h.irregularity() - h.dimension + *g.p_alpha;
    decide(iso);
    report.checks.push_back(std::move(iso));
  }
  return report;
}

ExorbitanceResult exorbitance_verdict(const HodgeProfile& h) {
  validate_profile(h);
  ExorbitanceResult out;
  if (!h.isolated_origin) {
    out.reason = "isolated_origin not asserted";
    return out;
  }
  const std::int64_t chi = euler_char(h);
  const std::int64_t q = h.irregularity();
  const std::int64_t codim = h.geometric_genus() - chi;
  if (codim > q - 1) {
    if (chi > 0) {
      out.verdict = Exorbitance::exorbitant;
      out.reason = "p_g - chi > q - 1 with chi > 0";
    } else {
      out.reason = "p_g - chi > q - 1 with chi <= 0";
    }
    return out;
  }
  if (codim < 0) {
    out.reason = "p_g - chi < 0";
    return out;
  }
  const ChernData c = gamma_series(h);
  out.segre_index = codim;
  out.segre_value = segre_number(c, codim);
  out.verdict = *out.segre_value == 0 ? Exorbitance::exorbitant : Exorbitance::not_exorbitant;
  out.reason = "Segre number of the dual BGG bundle in codimension p_g - chi";
  return out;
}

InequalityReport check_all(const HodgeProfile& h, const std::optional<GVData>& gv) {
  InequalityReport report = check_chern_constraints(h);
  report.append(solved_bounds(h));
  report.append(surface_check(h));
  if (gv) report.append(gv_check(*gv, h));
  return report;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

std::string to_string(Exorbitance e) {
  switch (e) {
    case Exorbitance::exorbitant: return "exorbitant";
    case Exorbitance::not_exorbitant: return "not-exorbitant";
    case Exorbitance::outside_criterion: return "outside-criterion";
  }
  return "unknown";
}

std::string to_string(const Partition& lam) {
  std::string s = "(";
  for (std::size_t i = 0; i < lam.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lam.parts[i]);
  }
  return s + ")";
}

std::string to_string(const BoundExpr& b) {
  if (!b.radicand) return to_string(b.base);
  return to_string(b.base) + " + sqrt(" + to_string(*b.radicand) + ")/2";
}

}  // namespace bggkit
