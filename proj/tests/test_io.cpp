#include <doctest.h>

#include <random>

#include "bggkit/error.hpp"
#include "bggkit/examples.hpp"
#include "bggkit/io.hpp"

using namespace bggkit;

namespace {

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("profiles round-trip") {
  HodgeProfile h = theta_profile(3);
  h.h11 = 7;
  const Json doc = to_json(h);
  const HodgeProfile back = profile_from_json(doc);
  CHECK(back.h0 == h.h0);
  CHECK(back.dimension == 3);
  CHECK(back.no_irregular_fibrations);
  CHECK(back.isolated_origin);
  CHECK(back.h11 == 7);
  CHECK(dump(to_json(back)) == dump(doc));
}

TEST_CASE("profile flags default to false and unknown keys are rejected") {
  const HodgeProfile h = profile_from_json(parse_json(R"({"dimension": 2, "h0": [1, 2, 1]})"));
  CHECK_FALSE(h.no_irregular_fibrations);
  CHECK_FALSE(h.isolated_origin);
  CHECK(message_of([] { profile_from_json(parse_json(R"({"dimension": 2, "h0": [1, 2, 1], "q": 2})")); })
            .find("unknown key \"q\"") != std::string::npos);
}

TEST_CASE("schema errors name the JSON pointer") {
  CHECK(message_of([] { profile_from_json(parse_json(R"({"dimension": 2, "h0": [1, "x", 1]})")); })
            .starts_with("/h0/1:"));
  CHECK(message_of([] { profile_from_json(parse_json(R"({"h0": [1, 2, 1]})")); }).find("dimension") !=
        std::string::npos);
  CHECK_THROWS_AS(profile_from_json(parse_json(R"({"dimension": 2, "h0": [2, 2, 1]})")), InputError);
  CHECK(message_of([] {
          module_from_json(parse_json(R"({"q": 1, "piece_dims": [1, 1], "actions": [[[["1", "2"]]]]})"));
        }).starts_with("/actions/0/0/0:"));
  CHECK(message_of([] {
          tensor_from_json(parse_json(R"({"a": 1, "b": 1, "q": 2, "entries": [[["1", "1/0"]]]})"));
        }).starts_with("/entries/0/0/1:"));
}

TEST_CASE("malformed JSON reports line and column") {
  const std::string msg = message_of([] { parse_json("{\n  \"a\": [1,\n  2,,\n]}", "file.json"); });
  CHECK(msg.starts_with("file.json:3:"));
}

TEST_CASE("modules round-trip and keep rational entries exact") {
  ExteriorModule m = koszul_module(3);
  m.actions[0][0] *= Rational(1, 3);
  const Json doc = to_json(m);
  const ExteriorModule back = module_from_json(doc);
  CHECK(back.piece_dims == m.piece_dims);
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    for (std::size_t j = 0; j < m.actions[i].size(); ++j) CHECK(back.actions[i][j] == m.actions[i][j]);
  CHECK(dump(to_json(back)) == dump(doc));
  CHECK(doc["actions"][0][0][0][0] == "1/3");
}

TEST_CASE("tensors round-trip with their form space") {
  LinFormMatrix u(2, 3, 2);
  u(1, 2, 0) = Rational(-5, 4);
  u(0, 0, 1) = 2;
  const LinFormMatrix f = flip(u);
  CHECK(tensor_from_json(to_json(u)) == u);
  CHECK(tensor_from_json(to_json(f)) == f);
  CHECK(to_json(f)["form_space"] == "projective");
  // integers are accepted as entries and canonicalized on output
  const LinFormMatrix g = tensor_from_json(parse_json(R"({"a": 1, "b": 1, "q": 1, "entries": [[[4]]]})"));
  CHECK(g(0, 0, 0) == 4);
  CHECK(to_json(g)["entries"][0][0][0] == "4");
  CHECK(tensor_from_json(parse_json(R"({"a": 1, "b": 1, "q": 1, "entries": [[["-6/4"]]]})"))(0, 0, 0) ==
        Rational(-3, 2));
}

TEST_CASE("reports serialize rationals as strings and integers as numbers") {
  const InequalityReport r = check_all(theta_profile(3));
  const Json doc = to_json(r);
  REQUIRE(doc.is_array());
  const std::string text = dump(doc);
  CHECK(dump(parse_json(text)) == text);
  bool saw_half = false;
  for (const auto& rec : doc) {
    CHECK(rec["lhs"].is_string());
    CHECK(rec["rhs"]["base"].is_string());
    if (rec["rhs"]["base"] == "9/2") saw_half = true;
  }
  CHECK(saw_half);
  CHECK(to_json(gamma_series(theta_profile(3)))["gamma"] == Json::array({1, 1, 0, 0}));
  CHECK(integer_to_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("gv data") {
  const GVData g = gv_from_json(parse_json(R"({"codims": [1, 2, 3], "p_alpha": 2})"));
  CHECK(g.codims == std::vector<std::int64_t>{1, 2, 3});
  CHECK(g.p_alpha == 2);
  CHECK_FALSE(gv_from_json(parse_json(R"({"codims": [1]})")).p_alpha.has_value());
  CHECK(dump(to_json(g)) == dump(parse_json(R"({"codims": [1, 2, 3], "p_alpha": 2})")));
}
