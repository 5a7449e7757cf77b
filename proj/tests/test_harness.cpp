#include <doctest.h>

#include "facsub/conditions.hpp"
#include "facsub/error.hpp"
#include "facsub/harness.hpp"

using namespace facsub;

namespace {

GenParams small(std::uint64_t seed, std::size_t count) {
  GenParams p;
  p.seed = seed;
  p.instance_count = count;
  return p;
}

bool coordinatewise_le(const Witness& a, const Witness& b) {
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    for (std::size_t t = 0; t < a.points[i].size(); ++t) {
      if (std::llabs(a.points[i][t]) > std::llabs(b.points[i][t])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("gen_instance is deterministic and valid") {
  const GenParams p = small(1, 50);
  for (std::size_t i = 0; i < 50; ++i) {
    const Instance a = gen_instance(p, i);
    CHECK(a == gen_instance(p, i));
    CHECK_NOTHROW(a.build());
    CHECK(a.ambient.dim() >= 1);
    CHECK(a.ambient.dim() <= 3);
    CHECK(a.gens.size() >= 1);
    CHECK(a.gens.size() <= 5);
    for (const auto& g : a.gens) CHECK(g.max_abs() <= 4);
  }
  CHECK_FALSE(gen_instance(small(1, 1), 0) == gen_instance(small(2, 1), 0));
}

TEST_CASE("generator shapes") {
  GenParams p = small(7, 60);
  p.n_max = 1;
  bool saw_numerical = false;
  for (std::size_t i = 0; i < 60; ++i) {
    const Instance a = gen_instance(p, i);
    CHECK(a.ambient.dim() == 1);
    CHECK_FALSE(a.ambient.has_unit_directions());
    saw_numerical = saw_numerical || a.gens.size() >= 2;
  }
  CHECK(saw_numerical);

  p.n_max = 3;
  bool saw_localized = false;
  for (std::size_t i = 0; i < 60; ++i) saw_localized = saw_localized || gen_instance(p, i).ambient.has_unit_directions();
  CHECK(saw_localized);

  p.unit_dirs = 0;
  for (std::size_t i = 0; i < 30; ++i) CHECK_FALSE(gen_instance(p, i).ambient.has_unit_directions());
}

TEST_CASE("with_pth_powers puts A^p inside R") {
  for (std::size_t i = 0; i < 30; ++i) {
    const Instance a = with_pth_powers(gen_instance(small(3, 30), i), 3);
    CHECK(contains_pth_powers(*a.build(), 3));
  }
}

TEST_CASE("suite reports are identical across runs and thread counts") {
  const GenParams p = small(5, 20);
  const SearchBound b{8, 4};
  const auto one = run_implication_suite(p, b, {1, true}).to_json().dump();
  CHECK(one == run_implication_suite(p, b, {1, true}).to_json().dump());
  CHECK(one == run_implication_suite(p, b, {3, true}).to_json().dump());
  const auto e1 = run_equivalence_suite("4_5", p, b, 2, {1, true}).to_json().dump();
  CHECK(e1 == run_equivalence_suite("4_5", p, b, 2, {2, true}).to_json().dump());
}

TEST_CASE("suite reports count skipped instances") {
  const auto r = run_equivalence_suite("4_1", small(1, 30), SearchBound{8, 4});
  std::size_t skipped = 0;
  for (const auto& o : r.instances) skipped += o.skipped ? 1 : 0;
  CHECK(r.skipped() == skipped);
  CHECK(r.instances.size() == 30);
  const Json j = r.to_json();
  CHECK(j["skipped"] == skipped);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(r.to_json(true).contains("seconds"));
}

TEST_CASE("lemma suite on a small sweep") {
  const auto r = run_lemma_suite(small(2, 20), SearchBound{8, 4});
  CHECK(r.passed());
  CHECK(r.edges.size() == lemma_edges().size());
}

TEST_CASE("shrink an inflated divisor-closedness witness on <2,3>") {
  const Instance s23 = fixture_instance("ex1_5");
  const Witness inflated{{{8}, {9}}, {}, {}};
  REQUIRE(replay("P1_1_iv", *s23.build(), inflated, SearchBound{}).violated);
  const Shrunk out = shrink(s23, "P1_1_iv", inflated, SearchBound{});
  CHECK(out.witness.points == std::vector<Point>{{2}, {3}});
  CHECK(out.instance == s23);
}

TEST_CASE("an already minimal witness is a fixed point") {
  const Instance s23 = fixture_instance("ex1_5");
  const Witness w{{{2}, {3}}, {}, {}};
  const Shrunk out = shrink(s23, "P1_1_iv", w, SearchBound{});
  CHECK(out.witness == w);
  CHECK(out.instance == s23);
}

TEST_CASE("shrunk witnesses replay and never grow") {
  const Instance ex18 = fixture_instance("ex1_8");
  const Witness w{{{1, 0}, {1, 2}}, {}, {}};
  const Shrunk out = shrink(ex18, "D2_1_Bfc_full", w, SearchBound{});
  CHECK(replay("D2_1_Bfc_full", *out.instance.build(), out.witness, SearchBound{}).violated);
  CHECK(coordinatewise_le(out.witness, w));

  GenParams p = small(11, 40);
  std::size_t shrunk = 0;
  for (std::size_t i = 0; i < 40; ++i) {
    const Instance inst = gen_instance(p, i);
    const auto S = inst.build();
    for (const char* id : {"P1_1_iv", "SETINCL_SqfR_SqfA", "P4_5_ii", "root_closed"}) {
      const auto v = eval(id, *S, SearchBound{});
      if (!v.is_fails()) continue;
      const Shrunk s = shrink(inst, id, *v.witness, SearchBound{});
      CHECK(replay(id, *s.instance.build(), s.witness, SearchBound{}).violated);
      CHECK(coordinatewise_le(s.witness, *v.witness));
      CHECK(s.instance.gens.size() <= inst.gens.size());
      ++shrunk;
    }
  }
  CHECK(shrunk > 0);
}

TEST_CASE("shrink rejects a witness that does not replay") {
  CHECK_THROWS_AS(shrink(fixture_instance("ex1_5"), "P1_1_iv", Witness{{{2}, {4}}, {}, {}}, SearchBound{}),
                  InternalError);
}

TEST_CASE("fixture corpus") {
  const auto rows = run_fixtures();
  CHECK(rows.size() >= 12);
  for (const auto& r : rows) CHECK_MESSAGE(r.pass, r.id << ": expected " << r.expected << ", got " << r.actual);
  const Json j = fixtures_to_json(rows);
  CHECK(j["passed"] == true);
  CHECK(fixtures_to_text(rows).find("ex1_5") != std::string::npos);
  for (const auto& name : fixture_instance_names()) CHECK_NOTHROW(fixture_instance(name).build());
  CHECK_THROWS_AS(fixture_instance("nope"), DomainError);
}
