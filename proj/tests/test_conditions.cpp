#include <doctest.h>

#include <set>

#include "facsub/conditions.hpp"
#include "facsub/error.hpp"
#include "facsub/harness.hpp"
#include "facsub/transport.hpp"
#include "support.hpp"

using namespace facsub;

namespace {

const SearchBound kDefault{};

Verdict run(const char* fixture, const char* id) { return eval(id, *fixture_instance(fixture).build(), kDefault); }

Witness pts(std::vector<Point> p, std::vector<std::int64_t> ints = {}) { return {std::move(p), std::move(ints), {}}; }

bool replays(const char* fixture, const char* id, const Witness& w) {
  return replay(id, *fixture_instance(fixture).build(), w, kDefault).violated;
}

}  // namespace

TEST_CASE("catalog contents") {
  std::set<std::string> ids;
  for (const auto& c : catalog()) ids.insert(c.id);
  for (const char* id :
       {"P1_1_iii", "P1_1_iv", "P1_2_i", "P1_2_ii", "P1_2_iii", "P1_3_i", "P1_3_ii", "P1_3_iii", "P1_3_iv",
        "D2_1_Bfc_self", "D2_1_Bfc_full", "D2_1_Bfc_p2", "P2_2_ii", "P2_2_iii", "P2_2_iv_p2", "T3_4_ii_sqfc",
        "root_closed", "SETINCL_IrrR_IrrA", "SETINCL_PrimeR_IrrA", "SETINCL_PrimeR_PrimeA", "SETINCL_IrrR_SqfA",
        "SETINCL_PrimeR_SqfA", "SETINCL_PrimeR_GprA", "SETINCL_SqfR_SqfA", "SETINCL_GprR_SqfA",
        "SETINCL_GprR_GprA", "P4_1_i", "P4_1_ii", "P4_1_iii", "P4_2_i", "P4_2_ii", "P4_3_i", "P4_3_ii",
        "P4_3_iii", "P4_4_i", "P4_4_ii", "P4_5_i", "P4_5_ii", "P4_5_iii", "P4_5_iv", "P4_5_v", "P4_5_vi",
        "P4_6_i", "P4_6_ii", "P4_6_iii", "P4_6_iv", "P4_6_v", "T2_4_ii_mono", "T2_4_iii_mono"}) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
  }
  CHECK(find_condition("D2_1_Bfc_p5").has_value());
  CHECK(find_condition("H_units_equal").has_value());
  CHECK_FALSE(find_condition("P9_9_i").has_value());
  CHECK_THROWS_AS(eval("nonsense", *fixture_instance("axis").build(), kDefault), DomainError);
  CHECK_THROWS_AS(eval("D2_1_Bfc_p4", *fixture_instance("axis").build(), kDefault), DomainError);
}

TEST_CASE("divisor closedness on <2,3>") {
  const auto iv = run("ex1_5", "P1_1_iv");
  REQUIRE(iv.is_fails());
  CHECK(iv.witness->points == std::vector<Point>{{2}, {3}});
  const auto iii = run("ex1_5", "P1_1_iii");
  REQUIRE(iii.is_fails());
  CHECK(iii.witness->points == std::vector<Point>{{2}, {1}});
  CHECK(run("ex1_5", "P1_3_ii").is_holds());
  CHECK(run("ex1_8", "P1_1_iv").is_holds());
  CHECK(run("plane", "P1_1_iv").is_holds());
}

TEST_CASE("unit closedness") {
  CHECK(run("ex1_6", "P1_2_ii").is_holds());
  CHECK(run("ex1_6", "P1_2_iii").is_holds());
  CHECK(run("plane", "P1_2_iii").is_holds());
  // Laurent line with S = N: a = b = 1 are rpr in A but not in R.
  const auto lau = Instance{AmbientLattice({CoordSign::Int}), {{1}}, {}}.build();
  const auto v = eval("P1_2_iii", *lau, kDefault);
  REQUIRE(v.is_fails());
  CHECK(v.witness->points[0] == Point{1});
  CHECK(v.witness->points[1] == Point{1});
}

TEST_CASE("P1_3 on the examples") {
  CHECK(run("ex1_6", "P1_3_ii").is_fails());
  const auto v = run("ex1_9", "P1_3_iv");
  REQUIRE(v.is_fails());
  CHECK(v.witness->points[0] == Point{1, 1});
}

TEST_CASE("factorial closedness") {
  const auto full = run("ex1_8", "D2_1_Bfc_full");
  REQUIRE(full.is_fails());
  CHECK(replays("ex1_8", "D2_1_Bfc_full", *full.witness));
  // The pair a = (1,0), b = (1,2) is an equally valid failure.
  CHECK(replays("ex1_8", "D2_1_Bfc_full", pts({{1, 0}, {1, 2}})));
  CHECK(run("axis", "D2_1_Bfc_self").is_holds());
  CHECK(run("plane", "D2_1_Bfc_full").is_holds());
}

TEST_CASE("square-factorial and root closedness") {
  const auto root = run("ex1_5", "root_closed");
  REQUIRE(root.is_fails());
  CHECK(root.witness->points == std::vector<Point>{{1}});
  CHECK(root.witness->ints == std::vector<std::int64_t>{2});
  const auto sqfc = run("ex1_5", "T3_4_ii_sqfc");
  REQUIRE(sqfc.is_fails());
  CHECK(sqfc.witness->points == std::vector<Point>{{1}, {0}});
  CHECK(run("axis", "T3_4_ii_sqfc").is_holds());
  CHECK(run("axis", "root_closed").is_holds());
}

TEST_CASE("element-level inclusions") {
  const auto v = run("x_squared", "SETINCL_SqfR_SqfA");
  REQUIRE(v.is_fails());
  CHECK(v.witness->points == std::vector<Point>{{2, 0}});
  const auto ex19 = run("ex1_9", "P1_3_iv");
  CHECK(ex19.is_fails());
  for (const auto& c : catalog()) {
    if (c.id.rfind("SETINCL_", 0) == 0) CHECK_MESSAGE(run("plane", c.id.c_str()).is_holds(), c.id);
  }
}

TEST_CASE("fourth-section conditions") {
  const auto v45 = run("ex1_8", "P4_5_ii");
  REQUIRE(v45.is_fails());
  CHECK(v45.witness->points == std::vector<Point>{{1, 0}, {0, 0}});

  const auto v46 = run("ex1_5", "P4_6_i");
  REQUIRE(v46.is_fails());
  CHECK(replays("ex1_5", "P4_6_i", *v46.witness));
  CHECK(replays("ex1_5", "P4_6_i", pts({{1}, {2}})));

  CHECK(run("axis", "P4_1_ii").is_holds());
  CHECK(run("ex1_9", "P4_1_i").outcome == Outcome::HypothesisViolated);
  CHECK(run("ex1_6", "P4_3_ii").outcome == Outcome::HypothesisViolated);
}

TEST_CASE("hypothesis report") {
  const auto h = hypotheses(*fixture_instance("ex1_8").build(), kDefault);
  CHECK(h.units_equal.is_holds());
  CHECK(h.fraction_closed.is_holds());
  CHECK(h.ufd_ambient);
  CHECK(hypotheses(*fixture_instance("ex1_6").build(), kDefault).units_equal.is_fails());
}

TEST_CASE("replay rejects a non-violating witness") {
  CHECK_FALSE(replays("ex1_5", "P1_1_iv", pts({{2}, {4}})));
  CHECK_FALSE(replays("plane", "SETINCL_SqfR_SqfA", pts({{1, 1}})));
}

TEST_CASE("every Fails verdict replays on random instances") {
  GenParams gp;
  gp.seed = 41;
  const SearchBound b{8, 4};
  std::size_t fails = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    const auto S = gen_instance(gp, i).build();
    for (const auto& c : catalog()) {
      const auto v = eval(c.id, *S, b);
      if (!v.is_fails()) continue;
      ++fails;
      REQUIRE(v.witness.has_value());
      const auto r = replay(c.id, *S, *v.witness, b);
      CHECK_MESSAGE(r.violated, c.id << " on instance " << i << ": " << r.detail);
      CHECK_MESSAGE(r.in_domain(b), c.id << " witness outside the bound");
    }
  }
  CHECK(fails > 0);
}

TEST_CASE("P1_1 (iii) and (iv) agree on random instances") {
  GenParams gp;
  gp.seed = 43;
  for (const SearchBound b : {SearchBound{6, 3}, SearchBound{12, 6}}) {
    for (std::size_t i = 0; i < 40; ++i) {
      const auto S = gen_instance(gp, i).build();
      CHECK(eval("P1_1_iii", *S, b).outcome == eval("P1_1_iv", *S, b).outcome);
    }
  }
}
