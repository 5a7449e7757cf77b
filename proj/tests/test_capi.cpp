#include <doctest.h>

#include <json.hpp>
#include <string>

#include "facsub/facsub.h"

// Uses the shared library only, through the C header.

namespace {

using nlohmann::json;

struct Owned {
  char* s = nullptr;
  ~Owned() { facsub_string_free(s); }
  json parse() const { return json::parse(s); }
};

const char* kEx15 = R"({"ambient":{"dim":1,"signs":["nat"]},"gens":[[2],[3]]})";

struct Subring {
  facsub_subring* s = nullptr;
  explicit Subring(const char* text) { REQUIRE(facsub_subring_from_json(text, &s) == FACSUB_OK); }
  ~Subring() { facsub_subring_free(s); }
};

}  // namespace

TEST_CASE("defaults and version") {
  CHECK(std::string(facsub_version()).size() > 0);
  CHECK(facsub_default_bound().B == 12);
  CHECK(facsub_default_bound().K == 6);
  const facsub_gen_params p = facsub_default_gen_params();
  CHECK(p.seed == 1);
  CHECK(p.instance_count == 100);
}

TEST_CASE("subring round-trip and check") {
  Subring s(kEx15);
  Owned text;
  REQUIRE(facsub_subring_to_json(s.s, &text.s) == FACSUB_OK);
  CHECK(text.parse()["gens"] == json::parse("[[2],[3]]"));

  Owned verdict;
  facsub_outcome out = FACSUB_HOLDS;
  REQUIRE(facsub_check(s.s, "P1_1_iv", facsub_default_bound(), &verdict.s, &out) == FACSUB_OK);
  CHECK(out == FACSUB_FAILS);
  CHECK(verdict.parse()["witness"] == json::parse("[[2],[3]]"));

  int violated = 0;
  REQUIRE(facsub_replay(s.s, "P1_1_iv", "[[2],[3]]", facsub_default_bound(), &violated) == FACSUB_OK);
  CHECK(violated == 1);
  REQUIRE(facsub_replay(s.s, "P1_1_iv", "[[2],[4]]", facsub_default_bound(), &violated) == FACSUB_OK);
  CHECK(violated == 0);

  Owned all;
  facsub_outcome worst = FACSUB_HOLDS;
  REQUIRE(facsub_check_all(s.s, facsub_default_bound(), &all.s, &worst) == FACSUB_OK);
  CHECK(worst == FACSUB_FAILS);
  CHECK(all.parse().size() > 40);
}

TEST_CASE("lattice queries") {
  Subring s(kEx15);
  int member = -1;
  REQUIRE(facsub_member(s.s, "[5]", &member) == FACSUB_OK);
  CHECK(member == 1);
  REQUIRE(facsub_member(s.s, "[1]", &member) == FACSUB_OK);
  CHECK(member == 0);

  Owned atoms;
  REQUIRE(facsub_atoms(s.s, 10, &atoms.s) == FACSUB_OK);
  CHECK(atoms.parse() == json::parse("[[2],[3]]"));

  Owned rep;
  REQUIRE(facsub_element_report(s.s, "[2]", facsub_default_bound(), &rep.s) == FACSUB_OK);
  const json r = rep.parse();
  CHECK(r["member"] == true);
  CHECK(r["atom"] == true);
  CHECK(r["prime"]["outcome"] == "fails");
}

TEST_CASE("error codes") {
  facsub_subring* s = nullptr;
  CHECK(facsub_subring_from_json("{\"ambient\": [", &s) == FACSUB_ERR_PARSE);
  CHECK(facsub_last_error_position() >= 0);
  CHECK(std::string(facsub_last_error()).find("malformed JSON") != std::string::npos);
  CHECK(s == nullptr);

  CHECK(facsub_subring_from_json(R"({"ambient":{"dim":1,"signs":["nat"]},"gens":[[-1]]})", &s) ==
        FACSUB_ERR_DOMAIN);
  CHECK(facsub_last_error_position() == -1);
  CHECK(facsub_subring_from_json(nullptr, &s) == FACSUB_ERR_ARG);
  CHECK(facsub_subring_from_json(kEx15, nullptr) == FACSUB_ERR_ARG);

  Subring ok(kEx15);
  Owned v;
  facsub_outcome out;
  CHECK(facsub_check(ok.s, "no_such_condition", facsub_default_bound(), &v.s, &out) == FACSUB_ERR_DOMAIN);
  CHECK(facsub_check(ok.s, "P1_1_iv", facsub_bound{0, 6}, &v.s, &out) == FACSUB_ERR_ARG);
  int m;
  CHECK(facsub_member(ok.s, "[1, 2]", &m) == FACSUB_ERR_DOMAIN);

  Owned shr;
  CHECK(facsub_shrink(kEx15, "P1_1_iv", "[[2],[4]]", facsub_default_bound(), &shr.s) == FACSUB_ERR_INTERNAL);
}

TEST_CASE("jacobian through the C API") {
  Owned rep;
  int verdict = -1;
  REQUIRE(facsub_jacobian_report(R"({"vars":["x","y"],"polys":["x","x*y"]})", &rep.s, &verdict) == FACSUB_OK);
  CHECK(verdict == 0);
  CHECK(rep.parse()["gcd"] == "x");

  Owned dep;
  CHECK(facsub_jacobian_report(R"({"vars":["x","y"],"polys":["x+y","(x+y)^2"]})", &dep.s, &verdict) ==
        FACSUB_ERR_DOMAIN);
  CHECK(facsub_jacobian_report(R"({"vars":["x","y"],"polys":["x+*y"]})", &dep.s, &verdict) == FACSUB_ERR_PARSE);
  CHECK(facsub_last_error_position() == 2);

  Owned br;
  int consistent = -1;
  REQUIRE(facsub_bridge_check(R"({"vars":["x","y"],"polys":["x^2","y^2"]})", facsub_default_bound(), &br.s,
                              &consistent) == FACSUB_OK);
  CHECK(consistent == 1);
}

TEST_CASE("harness through the C API") {
  facsub_gen_params p = facsub_default_gen_params();
  p.instance_count = 10;
  Owned a, b;
  int passed = 0;
  REQUIRE(facsub_run_suite("4_5", &p, facsub_bound{8, 4}, 0, &a.s, &passed) == FACSUB_OK);
  CHECK(passed == 1);
  p.threads = 2;
  REQUIRE(facsub_run_suite("4_5", &p, facsub_bound{8, 4}, 0, &b.s, &passed) == FACSUB_OK);
  CHECK(std::string(a.s) == std::string(b.s));
  Owned bad;
  CHECK(facsub_run_suite("9_9", &p, facsub_bound{8, 4}, 0, &bad.s, &passed) == FACSUB_ERR_DOMAIN);

  Owned names;
  REQUIRE(facsub_suite_names(&names.s) == FACSUB_OK);
  CHECK(names.parse().size() >= 12);

  Owned inst1, inst2;
  REQUIRE(facsub_gen_instance(&p, 3, &inst1.s) == FACSUB_OK);
  REQUIRE(facsub_gen_instance(&p, 3, &inst2.s) == FACSUB_OK);
  CHECK(std::string(inst1.s) == std::string(inst2.s));

  Owned shr;
  REQUIRE(facsub_shrink(kEx15, "P1_1_iv", "[[8],[9]]", facsub_default_bound(), &shr.s) == FACSUB_OK);
  CHECK(shr.parse()["witness"] == json::parse("[[2],[3]]"));

  Owned rows, table;
  REQUIRE(facsub_run_fixtures(&rows.s, &table.s, &passed) == FACSUB_OK);
  CHECK(passed == 1);
  Owned fx;
  REQUIRE(facsub_fixture_instance("ex1_8", &fx.s) == FACSUB_OK);
  CHECK(fx.parse()["gens"].size() == 3);
}
