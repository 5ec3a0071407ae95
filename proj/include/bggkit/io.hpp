#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bggkit/bgg.hpp"
#include "bggkit/chern.hpp"
#include "bggkit/exterior.hpp"
#include "bggkit/inequality.hpp"
#include "bggkit/linforms.hpp"

namespace bggkit {

/// Keys are kept sorted, so dump() output is canonical.
using Json = nlohmann::json;

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json(std::string_view text, std::string_view source = "<input>");

/// Two-space indented canonical text with a trailing newline.
std::string dump(const Json& doc);

// Interchange formats. Readers throw InputError naming the offending JSON
// pointer; they validate shapes but not module axioms.
HodgeProfile profile_from_json(const Json& doc);
Json to_json(const HodgeProfile& h);

GVData gv_from_json(const Json& doc);
Json to_json(const GVData& g);

ExteriorModule module_from_json(const Json& doc);
Json to_json(const ExteriorModule& m);

LinFormMatrix tensor_from_json(const Json& doc);
Json to_json(const LinFormMatrix& u);

// Reports.
Json to_json(const ChernData& c);
Json to_json(const CheckRecord& r);
Json to_json(const InequalityReport& r);
Json to_json(const ExorbitanceResult& e);
Json to_json(const ExactnessReport& r);
Json to_json(const RegularityResult& r);
Json to_json(const RankDropReport& r);
Json to_json(const BilinearForm& f);

/// Rationals travel as "p/q" strings; integral values also accept bare numbers.
Json rational_to_json(const Rational& x);
Json integer_to_json(const Integer& x);
Rational rational_from_json(const Json& value, const std::string& where);

}  // namespace bggkit
