#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "burnside/counting.hpp"
#include "burnside/problem_spec.hpp"

using burnside::build_action;
using burnside::GroupAction;
using burnside::ProblemSpec;

TEST_CASE("natural action spec") {
  ProblemSpec spec = ProblemSpec::parse_text(
      R"json({"degree": 3, "generators": ["(0 1)"], "action": "natural"})json");
  CHECK(spec.degree == 3);
  CHECK(spec.generators == std::vector<std::string>{"(0 1)"});
  CHECK(spec.action == ProblemSpec::ActionKind::Natural);
  CHECK(spec.max_order == burnside::kDefaultMaxOrder);
  CHECK(spec.space_cap == burnside::kDefaultSpaceCap);

  GroupAction action = build_action(spec);
  CHECK(action.group().order() == 2);
  CHECK(action.size() == 3);
}

TEST_CASE("action defaults to natural when omitted") {
  ProblemSpec spec = ProblemSpec::parse_text(R"json({"degree": 4})json");
  GroupAction action = build_action(spec);
  CHECK(action.group().order() == 1);
  CHECK(action.size() == 4);
}

TEST_CASE("colorings spec") {
  ProblemSpec spec = ProblemSpec::parse_text(
      R"json({"degree": 4, "generators": ["(0 1 2 3)"],
              "action": {"colorings": {"colors": 2}}})json");
  CHECK(spec.action == ProblemSpec::ActionKind::Colorings);
  CHECK(spec.colors == 2);

  GroupAction action = build_action(spec);
  CHECK(action.size() == 16);
  CHECK(burnside::count_orbits_direct(action) == 6);
}

TEST_CASE("table spec") {
  ProblemSpec spec = ProblemSpec::parse_text(
      R"json({"degree": 2, "generators": ["(0 1)"],
              "action": {"table": [[0, 1], [1, 0]]}})json");
  CHECK(spec.action == ProblemSpec::ActionKind::Table);

  GroupAction action = build_action(spec);
  CHECK(action.size() == 2);
  CHECK(action.apply(1, 0) == 1);
}

TEST_CASE("options may be nested or top-level, top-level wins") {
  ProblemSpec nested = ProblemSpec::parse_text(
      R"json({"degree": 3, "options": {"max_order": 10, "space_cap": 20}})json");
  CHECK(nested.max_order == 10);
  CHECK(nested.space_cap == 20);

  ProblemSpec both = ProblemSpec::parse_text(
      R"json({"degree": 3, "max_order": 99, "options": {"max_order": 10}})json");
  CHECK(both.max_order == 99);
}

TEST_CASE("max_order flows into generation") {
  ProblemSpec spec = ProblemSpec::parse_text(
      R"json({"degree": 4, "generators": ["(0 1)", "(0 1 2 3)"], "max_order": 10})json");
  CHECK_THROWS_AS(build_action(spec), burnside::CapExceededError);
}

TEST_CASE("space_cap flows into colorings") {
  ProblemSpec spec = ProblemSpec::parse_text(
      R"json({"degree": 4, "action": {"colorings": {"colors": 10}}, "space_cap": 100})json");
  CHECK_THROWS_AS(build_action(spec), burnside::CapExceededError);
}

TEST_CASE("diagnostics name the offending field") {
  auto message_of = [](const std::string& text) {
    try {
      ProblemSpec::parse_text(text);
    } catch (const burnside::Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  CHECK(message_of(R"json({"generators": []})json").find("'degree'") !=
        std::string::npos);
  CHECK(message_of(R"json({"degree": 0})json").find("'degree'") !=
        std::string::npos);
  CHECK(message_of(R"json({"degree": 3, "degre": 1})json").find("'degre'") !=
        std::string::npos);
  CHECK(message_of(R"json({"degree": 3, "generators": "(0 1)"})json")
            .find("generators") != std::string::npos);
  CHECK(message_of(R"json({"degree": 3, "action": "wild"})json").find("action") !=
        std::string::npos);
  CHECK(message_of(R"json({"degree": 3, "action": {"table": []}})json")
            .find("table") != std::string::npos);
}

TEST_CASE("JSON syntax errors carry a position") {
  CHECK_THROWS_AS(ProblemSpec::parse_text("{\"degree\": }"),
                  burnside::ParseError);
}

TEST_CASE("generator errors name the generator and the point") {
  ProblemSpec spec = ProblemSpec::parse_text(
      R"json({"degree": 4, "generators": ["(0 1)", "(0 9)"]})json");
  try {
    build_action(spec);
    FAIL("expected an error");
  } catch (const burnside::Error& e) {
    const std::string message = e.what();
    CHECK(message.find("generator 1") != std::string::npos);
    CHECK(message.find("point 9 out of range") != std::string::npos);
  }
}

TEST_CASE("non-bijective generator is rejected with the duplicate point") {
  ProblemSpec spec = ProblemSpec::parse_text(
      R"json({"degree": 3, "generators": ["(0 1)(1 2)"]})json");
  try {
    build_action(spec);
    FAIL("expected an error");
  } catch (const burnside::Error& e) {
    CHECK(std::string(e.what()).find("duplicate point 1") != std::string::npos);
  }
}

TEST_CASE("invalid tables are rejected at build time") {
  ProblemSpec identity_violation = ProblemSpec::parse_text(
      R"json({"degree": 2, "action": {"table": [[1, 0]]}})json");
  CHECK_THROWS_AS(build_action(identity_violation),
                  burnside::InvalidActionError);

  ProblemSpec compat_violation = ProblemSpec::parse_text(
      R"json({"degree": 2, "generators": ["(0 1)"],
              "action": {"table": [[0, 1, 2], [1, 2, 0]]}})json");
  CHECK_THROWS_AS(build_action(compat_violation),
                  burnside::InvalidActionError);
}

TEST_CASE("missing file") {
  CHECK_THROWS(ProblemSpec::load("/nonexistent/spec.json"));
}
