#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "grpn/notation.hpp"

using namespace grpn;

namespace {

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected grpn::Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("parse one-line notation") {
  CHECK(parse_element("[z1*5,1,z2*3,6,z2*7,z1*4,2,8]", 4) == fixtures::running_example());
  CHECK(parse_element(" [ z1*5, 1, z2*3, 6, z2*7, z1*4, 2, 8 ] ", 4) ==
        fixtures::running_example());
  CHECK(parse_element("[z6*1,2]", 4) == make_element(GroupParams::make(4, 1, 2), {1, 2}, {2, 0}));
  CHECK(parse_element("[z-1*1]", 4).color_at(1) == 3);
  CHECK(parse_element("[1,2]", 4, 2).params() == GroupParams{4, 2, 2});

  CHECK(code_of([] { parse_element("1,2]", 2); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("[1,2", 2); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("[z*1]", 2); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("[z1 1]", 2); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("[1,2]x", 2); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("[]", 2); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element("[1,1]", 2); }) == Errc::NotAPermutation);
}

TEST_CASE("format_element round trips") {
  CHECK(format_element(fixtures::running_example()) == "[z1*5,1,z2*3,6,z2*7,z1*4,2,8]");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 7);
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> colors(n);
    for (int& a : colors) a = static_cast<int>(rng() % r);
    const GroupElement w = make_element(GroupParams::make(r, 1, n), perm, colors);
    REQUIRE(parse_element(format_element(w), r) == w);
  }
}

TEST_CASE("format_value") {
  CHECK(format_value(OneDimValue(1, 2, 4)) == "+z^2");
  CHECK(format_value(OneDimValue(-1, 0, 4)) == "-z^0");
}

TEST_CASE("multitableau JSON") {
  const char* text = "[[[1,3],[2]],[[4],[5]],[[6,7,10],[8,9,11]]]";
  const Multitableau t = multitableau_from_json(nlohmann::json::parse(text));
  CHECK(to_json(t).dump() == text);
  CHECK(to_json(multitableau_from_json(nlohmann::json::parse("[[],[[1]]]"))).dump() ==
        "[[],[[1]]]");
  CHECK(code_of([] { multitableau_from_json(nlohmann::json::parse("[[1]]")); }) ==
        Errc::ParseError);
  CHECK(code_of([] { multitableau_from_json(nlohmann::json::parse("{}")); }) == Errc::ParseError);
  CHECK(code_of([] { multitableau_from_json(nlohmann::json::parse("[[[\"a\"]]]")); }) ==
        Errc::ParseError);

  const RSPair pair = rs_map(fixtures::running_example());
  CHECK(rs_pair_from_json(to_json(pair)) == pair);
  CHECK(rs_pair_from_json(nlohmann::json::array({to_json(pair.P), to_json(pair.Q)})) == pair);
  CHECK(code_of([] { rs_pair_from_json(nlohmann::json::parse("[1]")); }) == Errc::ParseError);
}

TEST_CASE("report JSON") {
  VerificationReport report;
  report.sweep = "theorem";
  report.params = GroupParams{4, 1, 8};
  report.elements_checked = 3;
  report.i_values_checked = 12;
  report.total_failures = 1;
  report.counterexamples.push_back(
      Counterexample{2, fixtures::running_example(), 1, "pi_i = sgn_i", "+z^2", "-z^2"});
  report.elapsed = std::chrono::microseconds(1500);
  const nlohmann::json j = to_json(report);
  CHECK(j["params"] == nlohmann::json{{"r", 4}, {"p", 1}, {"n", 8}});
  CHECK(j["checked"] == 3);
  CHECK(j["passed"] == false);
  CHECK(j["elapsed_ms"] == 1.5);
  REQUIRE(j["failures"].size() == 1);
  CHECK(j["failures"][0]["element"] == "[z1*5,1,z2*3,6,z2*7,z1*4,2,8]");
  CHECK(j["failures"][0]["i"] == 1);
  CHECK(j["failures"][0]["expected"] == "+z^2");
  CHECK(j["failures"][0]["got"] == "-z^2");
}
