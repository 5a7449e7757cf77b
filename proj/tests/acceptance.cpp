// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "facsub/harness.hpp"
#include "facsub/jacobian.hpp"
#include "support.hpp"

using namespace facsub;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

std::string fixed(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

bool report(int n, const std::string& name, Outcome& o, const std::string& summary) {
  std::cout << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << summary;
  if (!o.pass) std::cout << " [" << o.detail.str() << "]";
  std::cout << std::endl;
  return o.pass;
}

bool criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto rows = run_fixtures();
  const double s = since(t0);
  std::size_t ok = 0;
  for (const auto& r : rows) {
    if (r.pass) {
      ++ok;
    } else {
      o.require(false, r.id + " expected " + r.expected + " got " + r.actual);
    }
  }
  std::set<std::string> ids;
  for (const auto& r : rows) ids.insert(r.id);
  for (const char* id : {"ex1_5", "ex1_6", "ex1_7", "ex1_8", "ex1_9"}) o.require(ids.count(id) == 1, std::string("missing row ") + id);
  o.require(s < 5.0, "runtime " + fixed(s) + " >= 5 s");
  return report(1, "fixture corpus", o, std::to_string(ok) + "/" + std::to_string(rows.size()) + " rows in " + fixed(s));
}

std::string tally(const SuiteReport& r) {
  std::size_t consistent = 0, artifacts = 0;
  for (const auto& e : r.edges) {
    consistent += e.count(EdgeStatus::Consistent);
    artifacts += e.count(EdgeStatus::BoundArtifact);
  }
  return std::to_string(r.violation_count()) + " violations, " + std::to_string(consistent) + " transported, " +
         std::to_string(artifacts) + " bound artifacts, " + std::to_string(r.skipped()) + " skipped";
}

bool suite_criterion(int n, const std::string& name, double limit, const std::function<SuiteReport()>& run) {
  Outcome o;
  const auto t0 = Clock::now();
  const SuiteReport r = run();
  const double s = since(t0);
  o.require(r.instances.size() == 100, "expected 100 instances");
  o.require(r.passed(), std::to_string(r.violation_count()) + " violations");
  for (const auto& v : r.violations) {
    o.require(false, "instance " + std::to_string(v.instance_index) + " " + v.premise + " => " + v.conclusion);
  }
  o.require(s < limit, "runtime " + fixed(s));
  return report(n, name, o, tally(r) + " in " + fixed(s));
}

bool criterion4(const GenParams& gp, const SearchBound& b) {
  Outcome o;
  std::ostringstream summary;
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, std::int64_t>> suites;
  for (const auto& prop : equivalence_props()) {
    if (prop == "2_2") {
      suites.emplace_back(prop, 2);
      suites.emplace_back(prop, 3);
    } else {
      suites.emplace_back(prop, 2);
    }
  }
  std::size_t total_skipped = 0, total_checked = 0;
  for (const auto& [prop, p] : suites) {
    const SuiteReport r = run_equivalence_suite(prop, gp, b, p);
    o.require(r.passed(), r.suite + ": " + std::to_string(r.violation_count()) + " violations");
    // Skips are itemized per instance with a reason.
    std::size_t listed = 0;
    for (const auto& inst : r.instances) {
      if (inst.skipped) {
        ++listed;
        o.require(!inst.skip_reason.empty(), r.suite + ": skipped instance without a reason");
      }
    }
    o.require(listed == r.skipped(), r.suite + ": skip count mismatch");
    o.require(r.to_json()["skipped"] == r.skipped(), r.suite + ": skips missing from the report");
    total_skipped += r.skipped();
    total_checked += r.instances.size() - r.skipped();
    summary << r.suite.substr(r.suite.find('_') + 1) << " " << r.violation_count() << "v/" << r.skipped() << "s ";
  }
  summary << "(" << total_checked << " checked, " << total_skipped << " skipped) in " << fixed(since(t0));
  return report(4, "equivalence suites", o, summary.str());
}

bool criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::string> xy = {"x", "y"};
  const auto one = parse_poly("1", xy);

  const auto a = minor_report(PolyMap::parse(xy, {"x+y", "x-y"}));
  o.require(a.verdict && a.minors.size() == 1 && a.minors[0] == parse_poly("-2", xy) && a.gcd == one,
            "(x+y, x-y)");
  const auto b = minor_report(PolyMap::parse(xy, {"x", "x*y"}));
  o.require(!b.verdict && b.gcd == parse_poly("x", xy), "(x, xy)");
  const auto c = minor_report(PolyMap::parse(xy, {"x^2+y^2"}));
  o.require(c.verdict && c.gcd == one, "x^2+y^2");

  std::mt19937_64 rng(20260501);
  std::size_t constant = 0;
  for (int i = 0; i < 50; ++i) {
    const PolyMap m = testing::random_square_map(rng, 2);
    const auto base = minor_report(m);
    constant += base.verdict ? 1 : 0;
    const auto L = testing::unimodular2(rng);
    const std::int64_t det = L[0][0] * L[1][1] - L[0][1] * L[1][0];
    const auto lin = minor_report(compose_linear(m, L));
    o.require(lin.minors[0] == base.minors[0] * MultiPoly::constant(2, Rational(det)) && lin.verdict == base.verdict,
              "linear change on map " + std::to_string(i));
    const auto perm = minor_report(permute_variables(m, {1, 0}));
    const auto renamed = permute_variables(PolyMap(m.vars(), {base.minors[0]}), {1, 0}).fs()[0];
    o.require(perm.minors[0] == -renamed && perm.verdict == base.verdict,
              "permutation on map " + std::to_string(i));
  }
  const double s = since(t0);
  o.require(s < 30.0, "runtime " + fixed(s));
  return report(5, "jacobian", o,
                "3 examples, 50 maps invariant (" + std::to_string(constant) + " with constant gcd) in " + fixed(s));
}

bool criterion6(const SearchBound& bound) {
  Outcome o;
  const std::vector<std::string> xy = {"x", "y"};
  const auto a = bridge_check(PolyMap::parse(xy, {"x", "x*y"}), bound);
  o.require(a.consistent && a.fragment.is_fails() && a.fragment.witness->points == std::vector<Point>{{2, 1}},
            "(x, xy)");
  const auto b = bridge_check(PolyMap::parse(xy, {"x^2", "y^2"}), bound);
  o.require(b.consistent && b.fragment.is_fails() && b.fragment.witness->points == std::vector<Point>{{2, 0}},
            "(x^2, y^2)");

  std::mt19937_64 rng(20260502);
  std::size_t fragment_fails = 0;
  for (int i = 0; i < 100; ++i) {
    const PolyMap m = testing::random_monomial_map(rng);
    const auto r = bridge_check(m, bound);
    fragment_fails += r.fragment.is_fails() ? 1 : 0;
    o.require(r.consistent, "INCONSISTENT on map " + std::to_string(i));
  }
  return report(6, "bridge", o,
                "2 pinned examples, 100 random maps, " + std::to_string(fragment_fails) + " with a fragment witness");
}

bool criterion7(const GenParams& gp) {
  Outcome o;
  const auto t0 = Clock::now();
  constexpr std::int64_t kRadius = 6, kNatWindow = 14, kIntWindow = 40, kGrade = 6;

  std::vector<std::pair<std::string, Instance>> instances;
  for (std::size_t i = 0; i < gp.instance_count; ++i) {
    Instance inst = gen_instance(gp, i);
    if (inst.ambient.dim() <= 2) instances.emplace_back("instance " + std::to_string(i), std::move(inst));
  }
  for (const auto& name : fixture_instance_names()) {
    Instance inst = fixture_instance(name);
    if (inst.ambient.dim() <= 2) instances.emplace_back(name, std::move(inst));
  }

  std::size_t points = 0;
  for (const auto& [label, inst] : instances) {
    const auto S = inst.build();
    const testing::ClosureOracle oracle(inst, kNatWindow, kIntWindow);
    std::set<Point> oracle_atoms;
    for (const auto& v : testing::cube(inst.ambient, kRadius)) {
      ++points;
      const bool mem = S->member(v);
      if (mem != oracle.member(v)) {
        o.require(false, label + " member " + v.to_string());
        continue;
      }
      if (!mem) continue;
      if (S->is_squarefree(v) != oracle.squarefree(v)) o.require(false, label + " squarefree " + v.to_string());
      if (oracle.atom(v) && S->search_grade(v) <= kGrade) oracle_atoms.insert(S->reduce(v));
    }
    // Atom representatives inside the cube must be exactly the reduced
    // oracle atoms; each returned atom must be an oracle atom.
    std::set<Point> returned;
    for (const auto& a : S->atoms_up_to(kGrade)) {
      if (!oracle.inside(a)) {
        o.require(false, label + " atom " + a.to_string() + " outside the oracle window");
        continue;
      }
      if (!oracle.atom(a)) o.require(false, label + " spurious atom " + a.to_string());
      returned.insert(a);
    }
    for (const auto& a : oracle_atoms) {
      if (!returned.count(a)) o.require(false, label + " missing atom " + a.to_string());
    }
  }

  std::mt19937_64 rng(20260503);
  std::size_t sqf_agree = 0;
  for (int i = 0; i < 200; ++i) {
    const auto c = testing::factored_case(rng);
    if (is_squarefree(c.f) == c.squarefree) {
      ++sqf_agree;
    } else {
      o.require(false, "squarefree_in_A case " + std::to_string(i));
    }
  }
  return report(7, "oracle equivalences", o,
                std::to_string(instances.size()) + " instances, " + std::to_string(points) + " points, " +
                    std::to_string(sqf_agree) + "/200 factored cases in " + fixed(since(t0)));
}

}  // namespace

int main() {
  const GenParams gp;  // seed 1, 100 instances
  const SearchBound b;  // B = 12, K = 6
  bool ok = true;
  ok &= criterion1();
  ok &= suite_criterion(2, "lemma suite", 60.0, [&] { return run_lemma_suite(gp, b); });
  ok &= suite_criterion(3, "implication suite", 120.0, [&] { return run_implication_suite(gp, b); });
  ok &= criterion4(gp, b);
  ok &= criterion5();
  ok &= criterion6(b);
  ok &= criterion7(gp);
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << std::endl;
  return ok ? 0 : 1;
}
