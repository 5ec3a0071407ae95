#include "bggkit/io.hpp"

#include <algorithm>
#include <limits>

#include "bggkit/error.hpp"

namespace bggkit {

namespace {

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

std::string child(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

const Json& require(const Json& obj, const std::string& where, const std::string& key) {
  if (!obj.is_object()) fail_at(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(where, "missing key \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) fail_at(where, "expected an integer");
  return value.get<std::int64_t>();
}

bool as_bool(const Json& value, const std::string& where) {
  if (!value.is_boolean()) fail_at(where, "expected true or false");
  return value.get<bool>();
}

const Json& as_array(const Json& value, const std::string& where) {
  if (!value.is_array()) fail_at(where, "expected an array");
  return value;
}

std::vector<std::int64_t> as_int_list(const Json& value, const std::string& where) {
  std::vector<std::int64_t> out;
  const Json& arr = as_array(value, where);
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(as_int(arr[k], child(where, k)));
  return out;
}

void reject_unknown(const Json& obj, const std::string& where, std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return it.key() == k; })) {
      fail_at(where, "unknown key \"" + it.key() + "\"");
    }
  }
}

template <class Fn>
auto rethrow_at(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const ModuleAxiomError&) {
    throw;
  } catch (const InputError& e) {
    fail_at(where, e.what());
  }
}

Json matrix_to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixQ matrix_from_json(const Json& value, std::int64_t rows, std::int64_t cols, const std::string& where) {
  const Json& arr = as_array(value, where);
  if (static_cast<std::int64_t>(arr.size()) != rows) {
    fail_at(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(arr.size()));
  }
  MatrixQ m = MatrixQ::Zero(rows, cols);
  for (std::int64_t r = 0; r < rows; ++r) {
    const std::string row_at = child(where, static_cast<std::size_t>(r));
    const Json& row = as_array(arr[static_cast<std::size_t>(r)], row_at);
    if (static_cast<std::int64_t>(row.size()) != cols) {
      fail_at(row_at, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    }
    for (std::int64_t c = 0; c < cols; ++c) {
      m(r, c) = rational_from_json(row[static_cast<std::size_t>(c)], child(row_at, static_cast<std::size_t>(c)));
    }
  }
  return m;
}

Json position_to_json(const std::optional<SlicePosition>& pos) {
  if (!pos) return nullptr;
  return Json{{"spot", pos->spot}, {"degree", pos->degree}};
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": malformed JSON");
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json rational_to_json(const Rational& x) { return to_string(x); }

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return to_string(x);
}

Rational rational_from_json(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) fail_at(where, "expected a rational string \"p/q\" or an integer");
  return rethrow_at(where, [&] { return parse_rational(value.get<std::string>()); });
}

HodgeProfile profile_from_json(const Json& doc) {
  if (!doc.is_object()) fail_at("", "expected a profile object");
  reject_unknown(doc, "", {"dimension", "h0", "no_irregular_fibrations", "isolated_origin", "h11"});
  HodgeProfile h;
  h.dimension = as_int(require(doc, "", "dimension"), "/dimension");
  h.h0 = as_int_list(require(doc, "", "h0"), "/h0");
  if (doc.contains("no_irregular_fibrations")) {
    h.no_irregular_fibrations = as_bool(doc["no_irregular_fibrations"], "/no_irregular_fibrations");
  }
  if (doc.contains("isolated_origin")) h.isolated_origin = as_bool(doc["isolated_origin"], "/isolated_origin");
  if (doc.contains("h11")) h.h11 = as_int(doc["h11"], "/h11");
  rethrow_at("", [&] {
    validate_profile(h);
    return 0;
  });
  return h;
}

Json to_json(const HodgeProfile& h) {
  Json doc{{"dimension", h.dimension},
           {"h0", h.h0},
           {"no_irregular_fibrations", h.no_irregular_fibrations},
           {"isolated_origin", h.isolated_origin}};
  if (h.h11) doc["h11"] = *h.h11;
  return doc;
}

GVData gv_from_json(const Json& doc) {
  if (!doc.is_object()) fail_at("", "expected a gv object");
  reject_unknown(doc, "", {"codims", "p_alpha"});
  GVData g;
  g.codims = as_int_list(require(doc, "", "codims"), "/codims");
  if (doc.contains("p_alpha") && !doc["p_alpha"].is_null()) g.p_alpha = as_int(doc["p_alpha"], "/p_alpha");
  return g;
}

Json to_json(const GVData& g) {
  Json doc{{"codims", g.codims}};
  if (g.p_alpha) doc["p_alpha"] = *g.p_alpha;
  return doc;
}

ExteriorModule module_from_json(const Json& doc) {
  if (!doc.is_object()) fail_at("", "expected a module object");
  reject_unknown(doc, "", {"q", "piece_dims", "actions"});
  ExteriorModule m;
  m.q = as_int(require(doc, "", "q"), "/q");
  m.piece_dims = as_int_list(require(doc, "", "piece_dims"), "/piece_dims");
  if (m.q < 1) fail_at("/q", "q must be positive");
  if (m.piece_dims.empty()) fail_at("/piece_dims", "at least one piece is required");
  for (std::size_t j = 0; j < m.piece_dims.size(); ++j) {
    if (m.piece_dims[j] < 0) fail_at(child("/piece_dims", j), "dimension must be non-negative");
  }
  const Json& actions = as_array(require(doc, "", "actions"), "/actions");
  if (static_cast<std::int64_t>(actions.size()) != m.q) {
    fail_at("/actions", "expected one list of matrices per generator (" + std::to_string(m.q) + ")");
  }
  const std::size_t maps = m.piece_dims.size() - 1;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const std::string at = child("/actions", i);
    const Json& list = as_array(actions[i], at);
    if (list.size() != maps) fail_at(at, "expected " + std::to_string(maps) + " matrices");
    std::vector<MatrixQ> per_piece;
    for (std::size_t j = 0; j < maps; ++j) {
      per_piece.push_back(matrix_from_json(list[j], m.piece_dims[j + 1], m.piece_dims[j], child(at, j)));
    }
    m.actions.push_back(std::move(per_piece));
  }
  return m;
}

Json to_json(const ExteriorModule& m) {
  Json actions = Json::array();
  for (const auto& per_piece : m.actions) {
    Json list = Json::array();
    for (const auto& a : per_piece) list.push_back(matrix_to_json(a));
    actions.push_back(std::move(list));
  }
  return Json{{"q", m.q}, {"piece_dims", m.piece_dims}, {"actions", std::move(actions)}};
}

LinFormMatrix tensor_from_json(const Json& doc) {
  if (!doc.is_object()) fail_at("", "expected a tensor object");
  reject_unknown(doc, "", {"a", "b", "q", "entries", "form_space"});
  const std::int64_t a = as_int(require(doc, "", "a"), "/a");
  const std::int64_t b = as_int(require(doc, "", "b"), "/b");
  const std::int64_t q = as_int(require(doc, "", "q"), "/q");
  if (a < 0) fail_at("/a", "must be non-negative");
  if (b < 0) fail_at("/b", "must be non-negative");
  if (q < 1) fail_at("/q", "must be positive");
  FormSpace space = FormSpace::affine;
  if (doc.contains("form_space")) {
    const Json& s = doc["form_space"];
    if (s == "affine") {
      space = FormSpace::affine;
    } else if (s == "projective") {
      space = FormSpace::projective;
    } else {
      fail_at("/form_space", "expected \"affine\" or \"projective\"");
    }
  }
  LinFormMatrix u(a, b, q, space);
  const Json& rows = as_array(require(doc, "", "entries"), "/entries");
  if (static_cast<std::int64_t>(rows.size()) != a) fail_at("/entries", "expected " + std::to_string(a) + " rows");
  for (std::int64_t r = 0; r < a; ++r) {
    const std::string row_at = child("/entries", static_cast<std::size_t>(r));
    const Json& row = as_array(rows[static_cast<std::size_t>(r)], row_at);
    if (static_cast<std::int64_t>(row.size()) != b) fail_at(row_at, "expected " + std::to_string(b) + " entries");
    for (std::int64_t c = 0; c < b; ++c) {
      const std::string cell_at = child(row_at, static_cast<std::size_t>(c));
      const Json& cell = as_array(row[static_cast<std::size_t>(c)], cell_at);
      if (static_cast<std::int64_t>(cell.size()) != q) fail_at(cell_at, "expected " + std::to_string(q) + " coefficients");
      for (std::int64_t i = 0; i < q; ++i) {
        u(r, c, i) = rational_from_json(cell[static_cast<std::size_t>(i)], child(cell_at, static_cast<std::size_t>(i)));
      }
    }
  }
  return u;
}

Json to_json(const LinFormMatrix& u) {
  Json rows = Json::array();
  for (std::int64_t r = 0; r < u.rows(); ++r) {
    Json row = Json::array();
    for (std::int64_t c = 0; c < u.cols(); ++c) {
      Json cell = Json::array();
      for (std::int64_t i = 0; i < u.vars(); ++i) cell.push_back(to_string(u(r, c, i)));
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"a", u.rows()},
              {"b", u.cols()},
              {"q", u.vars()},
              {"entries", std::move(rows)},
              {"form_space", u.form_space() == FormSpace::affine ? "affine" : "projective"}};
}

Json to_json(const ChernData& c) {
  Json gamma = Json::array();
  for (const auto& g : c.gamma) gamma.push_back(integer_to_json(g));
  return Json{{"gamma", std::move(gamma)}, {"rank", integer_to_json(c.rank)}};
}

Json to_json(const CheckRecord& r) {
  Json rhs{{"base", rational_to_json(r.rhs.base)}};
  rhs["radicand"] = r.rhs.radicand ? integer_to_json(*r.rhs.radicand) : Json(nullptr);
  Json doc{{"name", r.name},
           {"hypotheses", r.hypotheses},
           {"status", to_string(r.status)},
           {"rhs", std::move(rhs)},
           {"witness", r.witness},
           {"note", r.note}};
  doc["lhs"] = rational_to_json(r.lhs);
  doc["equality"] = r.status == CheckStatus::not_applicable ? Json(nullptr) : Json(r.equality);
  return doc;
}

Json to_json(const InequalityReport& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const ExorbitanceResult& e) {
  return Json{{"verdict", to_string(e.verdict)},
              {"segre_index", e.segre_index ? Json(*e.segre_index) : Json(nullptr)},
              {"segre_value", e.segre_value ? integer_to_json(*e.segre_value) : Json(nullptr)},
              {"reason", e.reason}};
}

Json to_json(const ExactnessReport& r) {
  return Json{{"p_max", r.p_max},
              {"homology", r.homology},
              {"term_dims", r.term_dims},
              {"first_failure", position_to_json(r.first_failure)},
              {"regularity", r.regularity ? Json(*r.regularity) : Json(nullptr)},
              {"ledger_consistent", r.ledger_consistent}};
}

Json to_json(const RegularityResult& r) {
  return Json{{"regularity", r.value}, {"witness", position_to_json(r.witness)}, {"p_max", r.p_max}};
}

Json to_json(const RankDropReport& r) {
  return Json{{"generic_rank", r.generic_rank},
              {"sampled_ranks", r.sampled},
              {"seed", r.seed},
              {"constant", r.constant},
              {"label", r.label()}};
}

Json to_json(const BilinearForm& f) {
  Json arr = Json::array();
  for (const auto& t : f) {
    arr.push_back(Json{{"projective", t.projective}, {"affine", t.affine}, {"coeff", rational_to_json(t.coeff)}});
  }
  return arr;
}

}  // namespace bggkit
