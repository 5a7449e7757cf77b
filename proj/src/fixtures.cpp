#include <iomanip>
#include <sstream>

#include "facsub/error.hpp"
#include "facsub/harness.hpp"
#include "facsub/jacobian.hpp"

namespace facsub {
namespace {

Instance make(std::vector<CoordSign> signs, std::vector<Point> gens) {
  return Instance{AmbientLattice(std::move(signs)), std::move(gens), {}};
}

constexpr auto N = CoordSign::Nat;
constexpr auto Z = CoordSign::Int;

std::string text(const Verdict& v) {
  std::string s(outcome_name(v.outcome));
  if (v.witness) s += " " + witness_to_json(*v.witness).dump();
  return s;
}

std::string text(const std::optional<Witness>& w) { return w ? witness_to_json(*w).dump() : "none"; }

Witness pts(std::vector<Point> ps, std::vector<std::int64_t> ints = {}) { return Witness{std::move(ps), std::move(ints), {}}; }

struct Ctx {
  std::vector<FixtureRow> rows;
  SearchBound bound;

  void add(std::string id, std::string example, std::string expected, std::string actual, bool pass) {
    rows.push_back({std::move(id), std::move(example), std::move(expected), std::move(actual), pass});
  }
};

bool fails_with(const Verdict& v, const Witness& w) { return v.is_fails() && v.witness && *v.witness == w; }

void divisibility_rows(Ctx& c) {
  const auto S = fixture_instance("ex1_5").build();
  const Verdict iv = eval("P1_1_iv", *S, c.bound);
  const Verdict ii = eval("P1_3_ii", *S, c.bound);
  c.add("ex1_5", "k[x^2,x^3] in k[x]", "P1_1_iv fails [[2],[3]]; P1_3_ii holds",
        "P1_1_iv " + text(iv) + "; P1_3_ii " + text(ii),
        fails_with(iv, pts({Point{2}, Point{3}})) && ii.is_holds());
  const Verdict iii = eval("P1_1_iii", *S, c.bound);
  c.add("ex1_5_iii", "k[x^2,x^3] in k[x]", "P1_1_iii fails [[2],[1]]", "P1_1_iii " + text(iii),
        fails_with(iii, pts({Point{2}, Point{1}})));
}

void units_rows(Ctx& c) {
  {
    const auto S = fixture_instance("ex1_6").build();
    const Verdict ii = eval("P1_3_ii", *S, c.bound);
    const Verdict u = eval("P1_2_iii", *S, c.bound);
    c.add("ex1_6", "k[xy,y] in k(x)[y]", "P1_3_ii fails; P1_2_iii holds",
          "P1_3_ii " + text(ii) + "; P1_2_iii " + text(u), ii.is_fails() && u.is_holds());
  }
  {
    // A field modeled by the Laurent line, R = k[x] inside it.
    const auto S = fixture_instance("ex1_7").build();
    const Verdict u = eval("P1_2_iii", *S, c.bound);
    const Verdict irr = eval("P1_3_iv", *S, c.bound);
    bool irr_empty = true;
    for (const Point& v : S->ambient().box(c.bound.B)) irr_empty = irr_empty && !S->ambient().is_irreducible(v);
    const bool ab_atom = u.is_fails() && u.witness && u.witness->points.size() >= 2 &&
                         u.witness->points[0] == Point{1} && u.witness->points[1] == Point{1} && S->is_atom(Point{1});
    c.add("ex1_7", "k[x] in the Laurent line (field model)", "P1_2_iii fails with a = b = [1] irreducible; Irr A empty; P1_3_iv holds",
          "P1_2_iii " + text(u) + "; Irr A " + (irr_empty ? "empty" : "nonempty") + "; P1_3_iv " + text(irr),
          ab_atom && irr_empty && irr.is_holds());
  }
}

void ex18_rows(Ctx& c) {
  const auto S = fixture_instance("ex1_8").build();
  const Verdict iv = eval("P1_1_iv", *S, c.bound);
  const Verdict ue = eval("H_units_equal", *S, c.bound);
  const auto f = S->atom_factorizations(Point{2, 2});
  std::string fs;
  for (const auto& fac : f) {
    fs += "{";
    for (std::size_t i = 0; i < fac.size(); ++i) fs += (i ? " " : "") + fac[i].to_string();
    fs += "}";
  }
  c.add("ex1_8", "k[x^2,y^2,xy] in k[x,y]", "P1_1_iv holds; units equal; (2,2) has 2 atom factorizations",
        "P1_1_iv " + text(iv) + "; H_units_equal " + text(ue) + "; " + std::to_string(f.size()) + " " + fs,
        iv.is_holds() && ue.is_holds() && f.size() == 2);
  const Verdict p45 = eval("P4_5_ii", *S, c.bound);
  c.add("ex1_8_p4_5", "k[x^2,y^2,xy] in k[x,y]", "P4_5_ii fails [[1,0],[0,0]]", "P4_5_ii " + text(p45),
        fails_with(p45, pts({Point{1, 0}, Point{0, 0}})));
  const Verdict full = eval("D2_1_Bfc_full", *S, c.bound);
  c.add("ex1_8_bfc", "k[x^2,y^2,xy] in k[x,y]", "D2_1_Bfc_full fails", "D2_1_Bfc_full " + text(full), full.is_fails());
}

void ex19_rows(Ctx& c) {
  const auto S = fixture_instance("ex1_9").build();
  const Verdict irr = eval("P1_3_iv", *S, c.bound);
  const bool first = irr.is_fails() && irr.witness && !irr.witness->points.empty() && irr.witness->points[0] == Point{1, 1};
  c.add("ex1_9", "k[x,y] in k(x)[y]", "P1_3_iv fails with witness [1,1]", "P1_3_iv " + text(irr), first);
  const Verdict gated = eval("P4_1_i", *S, c.bound);
  c.add("ex1_9_gate", "k[x,y] in k(x)[y]", "P4_1_i hypothesis_violated", "P4_1_i " + text(gated),
        gated.outcome == Outcome::HypothesisViolated);
}

void strictness_rows(Ctx& c) {
  const auto S = fixture_instance("ex1_5").build();
  const Point two{2};
  const auto pw = S->prime_counterexample(two, c.bound);
  c.add("s23_atom_not_prime", "k[x^2,x^3]", "x^2 atom; prime fails [[3],[3]]",
        std::string("x^2 ") + (S->is_atom(two) ? "atom" : "not atom") + "; prime " + text(pw),
        S->is_atom(two) && pw && *pw == pts({Point{3}, Point{3}}));
  const auto gw = S->gpr_counterexample(two, c.bound);
  c.add("s23_sqf_not_gpr", "k[x^2,x^3]", "x^2 square-free; gpr fails [[3],2]",
        std::string("x^2 ") + (S->is_squarefree(two) ? "square-free" : "not square-free") + "; gpr " + text(gw),
        S->is_squarefree(two) && gw && *gw == pts({Point{3}}, {2}));
  const Verdict root = eval("root_closed", *S, c.bound);
  const Verdict sqfc = eval("T3_4_ii_sqfc", *S, c.bound);
  c.add("s23_closure", "k[x^2,x^3]", "root_closed fails [[1],2]; T3_4_ii_sqfc fails [[1],[0]]",
        "root_closed " + text(root) + "; T3_4_ii_sqfc " + text(sqfc),
        fails_with(root, pts({Point{1}}, {2})) && fails_with(sqfc, pts({Point{1}, Point{0}})));
}

void bridge_rows(Ctx& c) {
  const std::vector<std::string> xy = {"x", "y"};
  struct Case {
    const char* id;
    std::vector<std::string> polys;
    Point witness;
  };
  for (const Case& k : {Case{"bridge_x_xy", {"x", "x*y"}, Point{2, 1}}, Case{"bridge_x2_y2", {"x^2", "y^2"}, Point{2, 0}}}) {
    const PolyMap m = PolyMap::parse(xy, k.polys);
    const BridgeReport r = bridge_check(m, c.bound);
    const std::string gcd = r.minors.gcd.to_string(xy);
    const bool pass = r.consistent && !r.minors.verdict && fails_with(r.fragment, pts({k.witness}));
    c.add(k.id, "(" + k.polys[0] + ", " + k.polys[1] + ")",
          "CONSISTENT; fragment fails " + witness_to_json(pts({k.witness})).dump() + "; gcd nonconstant",
          std::string(r.consistent ? "CONSISTENT" : "INCONSISTENT") + "; fragment " + text(r.fragment) + "; gcd " + gcd,
          pass);
  }
}

void trivial_rows(Ctx& c) {
  {
    const auto S = fixture_instance("axis").build();
    bool all = true;
    std::string actual;
    for (const char* id : {"D2_1_Bfc_self", "T3_4_ii_sqfc", "root_closed", "P4_1_ii"}) {
      const Verdict v = eval(id, *S, c.bound);
      all = all && v.is_holds();
      actual += (actual.empty() ? "" : "; ") + std::string(id) + " " + text(v);
    }
    c.add("axis", "k[x] in k[x,y]", "D2_1_Bfc_self, T3_4_ii_sqfc, root_closed, P4_1_ii hold", actual, all);
  }
  {
    const auto S = fixture_instance("x_squared").build();
    const Verdict v = eval("SETINCL_SqfR_SqfA", *S, c.bound);
    c.add("x_squared", "k[x^2] in k[x,y]", "SETINCL_SqfR_SqfA fails [[2,0]]", "SETINCL_SqfR_SqfA " + text(v),
          fails_with(v, pts({Point{2, 0}})));
  }
  {
    const auto S = fixture_instance("plane").build();
    std::string failing;
    for (const auto& info : catalog()) {
      if (!eval(info.id, *S, c.bound).is_holds()) failing += " " + info.id;
    }
    c.add("plane", "k[x,y] in k[x,y]", "every catalog condition holds",
          failing.empty() ? "every catalog condition holds" : "not holding:" + failing, failing.empty());
  }
}

}  // namespace

const std::vector<std::string>& fixture_instance_names() {
  static const std::vector<std::string> names = {"ex1_5", "ex1_6", "ex1_7", "ex1_8", "ex1_9", "axis", "x_squared", "plane"};
  return names;
}

Instance fixture_instance(const std::string& name) {
  if (name == "ex1_5") return make({N}, {Point{2}, Point{3}});
  if (name == "ex1_6") return make({Z, N}, {Point{1, 1}, Point{0, 1}});
  if (name == "ex1_7") return make({Z}, {Point{1}});
  if (name == "ex1_8") return make({N, N}, {Point{2, 0}, Point{0, 2}, Point{1, 1}});
  if (name == "ex1_9") return make({Z, N}, {Point{1, 0}, Point{0, 1}});
  if (name == "axis") return make({N, N}, {Point{1, 0}});
  if (name == "x_squared") return make({N, N}, {Point{2, 0}});
  if (name == "plane") return make({N, N}, {Point{1, 0}, Point{0, 1}});
  throw DomainError("unknown fixture instance '" + name + "'");
}

std::vector<FixtureRow> run_fixtures() {
  Ctx c;
  divisibility_rows(c);
  units_rows(c);
  ex18_rows(c);
  ex19_rows(c);
  strictness_rows(c);
  bridge_rows(c);
  trivial_rows(c);
  return std::move(c.rows);
}

Json fixtures_to_json(const std::vector<FixtureRow>& rows) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    arr.push_back(Json{{"id", r.id}, {"example", r.example}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
    all = all && r.pass;
  }
  return Json{{"rows", arr}, {"passed", all}};
}

std::string fixtures_to_text(const std::vector<FixtureRow>& rows) {
  std::size_t wid = 2, wex = 7;
  for (const auto& r : rows) {
    wid = std::max(wid, r.id.size());
    wex = std::max(wex, r.example.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(4) << "" << std::setw(static_cast<int>(wid) + 2) << "id" << std::setw(static_cast<int>(wex) + 2)
     << "example" << "actual\n";
  for (const auto& r : rows) {
    os << std::setw(4) << (r.pass ? "ok" : "FAIL") << std::setw(static_cast<int>(wid) + 2) << r.id
       << std::setw(static_cast<int>(wex) + 2) << r.example << r.actual << "\n";
    if (!r.pass) os << std::setw(static_cast<int>(wid + wex) + 8) << "" << "expected: " << r.expected << "\n";
  }
  return os.str();
}

}  // namespace facsub
