#include <doctest.h>

#include "facsub/conditions.hpp"
#include "facsub/error.hpp"
#include "facsub/harness.hpp"
#include "facsub/json_io.hpp"

using namespace facsub;

namespace {

std::string domain_message(const char* text) {
  try {
    parse_instance(text);
  } catch (const DomainError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance JSON round-trips") {
  for (const auto& name : fixture_instance_names()) {
    const Instance inst = fixture_instance(name);
    const std::string text = instance_to_json(inst).dump();
    CHECK(parse_instance(text) == inst);
    CHECK(instance_to_json(parse_instance(text)).dump() == text);
  }
  GenParams p;
  for (std::size_t i = 0; i < 30; ++i) {
    const Instance inst = gen_instance(p, i);
    CHECK(parse_instance(instance_to_json(inst).dump()) == inst);
  }
}

TEST_CASE("instance JSON keeps the canonical field order") {
  const std::string text = instance_to_json(fixture_instance("ex1_6")).dump();
  CHECK(text == R"({"ambient":{"dim":2,"signs":["int","nat"],"grading":[0,1]},"gens":[[1,1],[0,1]],"unit_gens":[]})");
}

TEST_CASE("grading and unit_gens are optional") {
  const Instance inst = parse_instance(R"({"ambient":{"dim":1,"signs":["nat"]},"gens":[[2],[3]]})");
  CHECK(inst == fixture_instance("ex1_5"));
}

TEST_CASE("verdict JSON round-trips, including digit witnesses") {
  GenParams p;
  p.seed = 17;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto S = gen_instance(p, i).build();
    for (const auto& c : catalog()) {
      const Verdict v = eval(c.id, *S, SearchBound{8, 4});
      const Json j = verdict_to_json(v);
      const Verdict back = verdict_from_json(parse_json_text(j.dump()), S->dim());
      CHECK(back.condition == v.condition);
      CHECK(back.outcome == v.outcome);
      CHECK(back.witness == v.witness);
      CHECK(back.reason == v.reason);
      CHECK(verdict_to_json(back).dump() == j.dump());
    }
  }
  const Witness w{{{1, 0}}, {2, 1}, {{0, 1}, {1, 1}}};
  CHECK(witness_from_json(witness_to_json(w), 2) == w);
}

TEST_CASE("verdict layout") {
  const Verdict v = eval("P1_1_iv", *fixture_instance("ex1_5").build(), SearchBound{});
  CHECK(verdict_to_json(v).dump() ==
        R"({"condition":"P1_1_iv","outcome":"fails","bound":{"B":12,"K":6},"witness":[[2],[3]],"reason":null})");
}

TEST_CASE("malformed JSON reports a byte offset") {
  try {
    parse_instance(R"({"ambient": {"dim": 1,, "signs": ["nat"]}})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 22);
  }
  CHECK_THROWS_AS(parse_json_text(""), ParseError);
}

TEST_CASE("schema errors name the offending path") {
  CHECK(domain_message(R"({"gens":[]})").find("instance") != std::string::npos);
  CHECK(domain_message(R"({"ambient":{"dim":2,"signs":["nat"]},"gens":[]})").find("ambient.signs") !=
        std::string::npos);
  CHECK(domain_message(R"({"ambient":{"dim":1,"signs":["real"]},"gens":[]})").find("ambient.signs[0]") !=
        std::string::npos);
  CHECK(domain_message(R"({"ambient":{"dim":1,"signs":["nat"]},"gens":[[1,2]]})").find("gens[0]") !=
        std::string::npos);
  CHECK(domain_message(R"({"ambient":{"dim":1,"signs":["nat"]},"gens":[["a"]]})").find("gens[0][0]") !=
        std::string::npos);
  CHECK(domain_message(R"({"ambient":{"dim":9,"signs":[]},"gens":[]})").find("ambient.dim") != std::string::npos);
  CHECK_THROWS_AS(witness_from_json(Json::parse("[3, [1]]"), 1), DomainError);
}

TEST_CASE("poly map JSON") {
  const PolyMap m = poly_map_from_json(Json::parse(R"({"vars":["x","y"],"polys":["x","x*y"]})"));
  CHECK(m.n() == 2);
  CHECK(m.r() == 2);
  const Json rep = minor_report_to_json(minor_report(m), m);
  CHECK(rep["gcd"] == "x");
  CHECK(rep["verdict"] == false);
  CHECK(rep["minors"][0]["columns"] == Json::parse(R"(["x","y"])"));
  CHECK_THROWS_AS(poly_map_from_json(Json::parse(R"({"vars":["x"]})")), DomainError);
  CHECK_THROWS_AS(poly_map_from_json(Json::parse(R"({"vars":["x"],"polys":["x^"]})")), ParseError);

  const Json b = bridge_report_to_json(bridge_check(m, SearchBound{}), m);
  CHECK(b["status"] == "CONSISTENT");
}
