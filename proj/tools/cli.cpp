#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bggkit/bgg.hpp"
#include "bggkit/error.hpp"
#include "bggkit/examples.hpp"
#include "bggkit/inequality.hpp"
#include "bggkit/io.hpp"

namespace bggkit::cli {

namespace {

struct RunConfig {
  std::string format = "table";
  std::uint64_t seed = kDefaultSeed;
  std::string out_path;
};

struct Outcome {
  Json report;
  int exit_code = kExitPass;
  std::vector<std::string> warnings;
};

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json(text, path);
}

template <class Reader>
auto read_with(const std::string& path, Reader reader) {
  const Json doc = read_json_file(path);
  try {
    return reader(doc);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Table rendering. Every table is a view of the JSON report.

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + scalar_text(v[k]);
    return s + ")";
  }
  if (v.is_object()) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.value().is_null()) continue;
      s += (s.empty() ? "" : " ") + it.key() + "=" + scalar_text(it.value());
    }
    return s.empty() ? "-" : s;
  }
  return v.dump();
}

bool is_record_list(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

void render_records(const Json& rows, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) columns.push_back(it.key());
    }
  }
  const std::vector<std::string> leading = {"name", "status", "lhs", "rhs", "equality", "witness"};
  std::stable_sort(columns.begin(), columns.end(), [&](const std::string& a, const std::string& b) {
    auto rank = [&](const std::string& c) { return std::find(leading.begin(), leading.end(), c) - leading.begin(); };
    return rank(a) < rank(b);
  });

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? scalar_text(row[columns[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

void render_table(const Json& report, std::ostream& out) {
  if (is_record_list(report)) {
    render_records(report, out);
    return;
  }
  if (!report.is_object()) {
    out << scalar_text(report) << '\n';
    return;
  }
  std::size_t key_width = 0;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (!is_record_list(it.value())) key_width = std::max(key_width, it.key().size());
  }
  std::vector<std::pair<std::string, const Json*>> nested;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (is_record_list(it.value())) {
      nested.emplace_back(it.key(), &it.value());
      continue;
    }
    out << it.key() << std::string(key_width - it.key().size() + 2, ' ') << scalar_text(it.value()) << '\n';
  }
  for (const auto& [key, rows] : nested) {
    out << '\n' << key << ":\n";
    render_records(*rows, out);
  }
}

// Commands.

Outcome cmd_invariants(const std::string& profile_path) {
  const HodgeProfile h = read_with(profile_path, profile_from_json);
  const ChernData c = gamma_series(h);
  Json gamma = Json::array();
  for (std::size_t k = 1; k < c.gamma.size(); ++k) gamma.push_back(integer_to_json(c.gamma[k]));
  Outcome o;
  o.report = Json{{"dimension", h.dimension},
                  {"q", h.irregularity()},
                  {"p_g", h.geometric_genus()},
                  {"chi", euler_char(h)},
                  {"gamma", std::move(gamma)}};
  return o;
}

Outcome cmd_check(const std::string& profile_path, const std::string& gv_path) {
  const HodgeProfile h = read_with(profile_path, profile_from_json);
  std::optional<GVData> gv;
  if (!gv_path.empty()) gv = read_with(gv_path, gv_from_json);
  const InequalityReport report = check_all(h, gv);
  Outcome o;
  o.report = to_json(report);
  if (report.any_failure()) o.exit_code = kExitCheckFailed;
  const bool all_gated_na = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckRecord& r) {
    return r.hypotheses.empty() || r.status == CheckStatus::not_applicable;
  });
  if (!h.isolated_origin && !h.no_irregular_fibrations && all_gated_na) {
    o.warnings.push_back("no hypothesis flag asserted; every gated check is not-applicable");
  }
  return o;
}

Outcome cmd_betti(const std::string& profile_path, const std::string& module_path, std::int64_t max_twist) {
  if (max_twist < 0) throw InputError("--max-twist must be non-negative");
  const HodgeProfile h = read_with(profile_path, profile_from_json);
  std::optional<ExteriorModule> m;
  if (!module_path.empty()) {
    m = read_with(module_path, module_from_json);
    validate_module(*m);
  }
  Json values = Json::array();
  for (std::int64_t i = 0; i <= max_twist; ++i) {
    values.push_back(integer_to_json(m ? betti_linear(*m, h, i) : betti_linear(h, i)));
  }
  Outcome o;
  o.report = Json{{"max_twist", max_twist}, {"betti", std::move(values)}, {"source", m ? "module" : "profile"}};
  return o;
}

std::int64_t window_for(const ExteriorModule& m, std::optional<std::int64_t> p_max) {
  if (!p_max) return default_window(m);
  if (*p_max < 0) throw InputError("--pmax must be non-negative");
  return *p_max;
}

Outcome cmd_regularity(const std::string& module_path, std::optional<std::int64_t> p_max) {
  const ExteriorModule m = read_with(module_path, module_from_json);
  validate_module(m);
  Outcome o;
  o.report = to_json(regularity(m, window_for(m, p_max)));
  return o;
}

Outcome cmd_exactness(const std::string& module_path, std::optional<std::int64_t> p_max, std::int64_t samples,
                      std::uint64_t seed) {
  const ExteriorModule m = read_with(module_path, module_from_json);
  validate_module(m);
  const LinearComplex c = bgg_complex(m);
  Outcome o;
  o.report = to_json(exactness_profile(c, window_for(m, p_max)));
  Json ranks = Json::array();
  for (std::size_t j = 0; j < c.diffs.size(); ++j) {
    Json r = to_json(analyze_rank(c.diffs[j], samples, seed));
    r["spot"] = j;
    ranks.push_back(std::move(r));
  }
  o.report["differential_ranks"] = std::move(ranks);
  o.report["seed"] = seed;
  return o;
}

Outcome cmd_flip(const std::string& tensor_path, const std::string& tensor_out) {
  const LinFormMatrix u = read_with(tensor_path, tensor_from_json);
  const LinFormMatrix f = flip(u);
  const bool equations_match = bilinear_equations(u) == bilinear_equations(f);
  const bool involution = flip(f) == u;
  if (!tensor_out.empty()) {
    std::ofstream file(tensor_out, std::ios::binary);
    if (!file) throw InputError(tensor_out + ": cannot write file");
    file << dump(to_json(f));
  }
  Outcome o;
  o.report = Json{{"equations_match", equations_match}, {"involution", involution}, {"tensor", to_json(f)}};
  if (!equations_match || !involution) o.exit_code = kExitCheckFailed;
  return o;
}

Outcome cmd_bott(std::int64_t n, std::int64_t p, std::int64_t k) {
  Json h = Json::array();
  for (const auto& v : bott_dimension(n, p, k)) h.push_back(integer_to_json(v));
  Outcome o;
  o.report = Json{{"n", n}, {"p", p}, {"k", k}, {"h", std::move(h)}};
  return o;
}

Outcome cmd_exorbitance(const std::string& profile_path) {
  const HodgeProfile h = read_with(profile_path, profile_from_json);
  Outcome o;
  o.report = to_json(exorbitance_verdict(h));
  return o;
}

std::string basis_name(ValueBasis b) {
  switch (b) {
    case ValueBasis::published: return "published";
    case ValueBasis::elementary: return "elementary";
    case ValueBasis::independent_check: return "independent-check";
  }
  return "unknown";
}

Outcome cmd_example(const std::string& name) {
  const auto catalog = example_catalog();
  Outcome o;
  if (name.empty()) {
    Json names = Json::array();
    for (const auto& e : catalog) names.push_back(e.name);
    o.report = Json{{"examples", std::move(names)}};
    return o;
  }
  auto it = std::find_if(catalog.begin(), catalog.end(), [&](const ExampleCase& e) { return e.name == name; });
  if (it == catalog.end()) throw InputError("unknown example \"" + name + "\"");
  Json expected = Json::object();
  for (const auto& [op, value] : it->expected) expected[op] = Json{{"value", value.value}, {"basis", basis_name(value.basis)}};
  o.report = Json{{"name", it->name},
                  {"module", it->module ? to_json(*it->module) : Json(nullptr)},
                  {"profile", it->profile ? to_json(*it->profile) : Json(nullptr)},
                  {"expected", std::move(expected)}};
  return o;
}

void emit(const Outcome& o, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  for (const auto& w : o.warnings) err << "warning: " << w << '\n';
  std::ostringstream text;
  if (cfg.format == "json") {
    text << dump(o.report);
  } else {
    render_table(o.report, text);
  }
  if (cfg.out_path.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw InputError(cfg.out_path + ": cannot write file");
  file << text.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact BGG, Chern-class and inequality computations for irregular Kaehler manifolds"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for rank sampling");
  app.add_option("--out", cfg.out_path, "Write the report to this file");

  std::string profile_path, gv_path, module_path, tensor_path, tensor_out, example_name;
  std::int64_t max_twist = 0, samples = 3, n = 0, p = 0, k = 0;
  std::optional<std::int64_t> p_max;

  auto* invariants = app.add_subcommand("invariants", "Euler characteristic and gamma coefficients");
  invariants->add_option("profile", profile_path, "Profile JSON")->required();

  auto* check = app.add_subcommand("check", "Run every applicable inequality check");
  check->add_option("profile", profile_path, "Profile JSON")->required();
  check->add_option("gv", gv_path, "Generic-vanishing JSON");

  auto* betti = app.add_subcommand("betti", "Betti numbers of the linear resolution");
  betti->add_option("profile", profile_path, "Profile JSON")->required();
  betti->add_option("--max-twist", max_twist, "Largest twist listed")->required();
  betti->add_option("--module", module_path, "Cohomology module JSON");

  auto* reg = app.add_subcommand("regularity", "Regularity of an exterior module");
  reg->add_option("module", module_path, "Module JSON")->required();
  reg->add_option("--pmax", p_max, "Largest internal degree examined (default 2(d+q))");

  auto* exact = app.add_subcommand("exactness", "Homology of the BGG complex by degree");
  exact->add_option("module", module_path, "Module JSON")->required();
  exact->add_option("--pmax", p_max, "Largest internal degree examined (default 2(d+q))");
  exact->add_option("--samples", samples, "Sample points per differential")->check(CLI::PositiveNumber);

  auto* flip_cmd = app.add_subcommand("flip", "Flip a matrix of linear forms");
  flip_cmd->add_option("tensor", tensor_path, "Tensor JSON")->required();
  flip_cmd->add_option("--tensor-out", tensor_out, "Write the flipped tensor to this file");

  auto* bott = app.add_subcommand("bott", "Cohomology of twisted differentials on projective space");
  bott->add_option("N", n, "Dimension of projective space")->required();
  bott->add_option("P", p, "Form degree")->required();
  bott->add_option("K", k, "Twist")->required();

  auto* exorb = app.add_subcommand("exorbitance", "Exorbitance of the canonical series");
  exorb->add_option("profile", profile_path, "Profile JSON")->required();

  auto* example = app.add_subcommand("example", "Export a worked example (omit NAME to list)");
  example->add_option("name", example_name, "Example name");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    Outcome o;
    if (*invariants) {
      o = cmd_invariants(profile_path);
    } else if (*check) {
      o = cmd_check(profile_path, gv_path);
    } else if (*betti) {
      o = cmd_betti(profile_path, module_path, max_twist);
    } else if (*reg) {
      o = cmd_regularity(module_path, p_max);
    } else if (*exact) {
      o = cmd_exactness(module_path, p_max, samples, cfg.seed);
    } else if (*flip_cmd) {
      o = cmd_flip(tensor_path, tensor_out);
    } else if (*bott) {
      o = cmd_bott(n, p, k);
    } else if (*exorb) {
      o = cmd_exorbitance(profile_path);
    } else {
      o = cmd_example(example_name);
    }
    emit(o, cfg, out, err);
    return o.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace bggkit::cli
