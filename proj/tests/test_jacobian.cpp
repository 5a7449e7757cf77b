#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "facsub/error.hpp"
#include "facsub/jacobian.hpp"
#include "facsub/lattice.hpp"
#include "support.hpp"

using namespace facsub;

namespace {

const std::vector<std::string> XY = {"x", "y"};

PolyMap M(std::vector<std::string> polys, const std::vector<std::string>& vars = XY) {
  return PolyMap::parse(vars, polys);
}

MultiPoly P(const char* s) { return parse_poly(s, XY); }

}  // namespace

TEST_CASE("PolyMap validation") {
  CHECK_THROWS_AS(M({"x", "y", "x*y"}), DomainError);
  CHECK_THROWS_AS(M({"0"}), DomainError);
  CHECK_THROWS_AS(M({"x +"}), ParseError);
  CHECK(M({"x", "x*y"}).is_monomial());
  CHECK_FALSE(M({"x+y"}).is_monomial());
}

TEST_CASE("jacobian_matrix") {
  CHECK(jacobian_matrix(M({"x+y", "x-y"})) == PolyMatrix{{P("1"), P("1")}, {P("1"), P("-1")}});
  CHECK(jacobian_matrix(M({"x", "x*y"})) == PolyMatrix{{P("1"), P("0")}, {P("y"), P("x")}});
  CHECK(jacobian_matrix(M({"x^2+y^2"})) == PolyMatrix{{P("2*x"), P("2*y")}});
}

TEST_CASE("independence_rank") {
  const auto r2 = independence_rank(M({"x+y", "x-y"}));
  CHECK(r2.rank == 2);
  REQUIRE(r2.certificate.has_value());
  CHECK(*r2.certificate == P("-2"));
  CHECK(independence_rank(M({"x+y", "(x+y)^2"})).rank == 1);
  CHECK_FALSE(independence_rank(M({"x+y", "(x+y)^2"})).certificate.has_value());
  CHECK(independence_rank(M({"x"})).rank == 1);
}

TEST_CASE("minor_report examples") {
  const auto a = minor_report(M({"x+y", "x-y"}));
  CHECK(a.minors.size() == 1);
  CHECK(a.minors[0] == P("-2"));
  CHECK(a.gcd == P("1"));
  CHECK(a.verdict);

  const auto b = minor_report(M({"x", "x*y"}));
  CHECK(b.gcd == P("x"));
  CHECK_FALSE(b.verdict);

  const auto c = minor_report(M({"x^2+y^2"}));
  CHECK(c.indices == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(c.gcd == P("1"));
  CHECK(c.verdict);

  CHECK_THROWS_AS(minor_report(M({"x+y", "(x+y)^2"})), DomainError);

  const std::vector<std::string> xyz = {"x", "y", "z"};
  const auto d = minor_report(M({"x*y", "z"}, xyz));
  CHECK(d.minors.size() == 3);
  CHECK(d.gcd == parse_poly("1", xyz));
}

TEST_CASE("bridge examples") {
  const auto a = bridge_check(M({"x", "x*y"}), SearchBound{});
  CHECK(a.consistent);
  REQUIRE(a.fragment.is_fails());
  CHECK(a.fragment.witness->points == std::vector<Point>{{2, 1}});
  CHECK(a.minors.gcd == P("x"));

  const auto b = bridge_check(M({"x^2", "y^2"}), SearchBound{});
  CHECK(b.consistent);
  REQUIRE(b.fragment.is_fails());
  CHECK(b.fragment.witness->points == std::vector<Point>{{2, 0}});
  CHECK(b.minors.gcd == P("x*y"));

  const auto c = bridge_check(M({"x", "y"}), SearchBound{});
  CHECK(c.consistent);
  CHECK(c.fragment.is_holds());
  CHECK(c.minors.verdict);

  CHECK_THROWS_AS(bridge_check(M({"x+y"}), SearchBound{}), DomainError);
  CHECK_THROWS_AS(bridge_check(M({"x^2", "x^3"}), SearchBound{}), DomainError);
}

TEST_CASE("monomial_instance") {
  const Instance inst = monomial_instance(M({"x^2", "x*y"}));
  CHECK(inst.ambient == AmbientLattice::naturals(2));
  CHECK(inst.gens == std::vector<Point>{{2, 0}, {1, 1}});
}

TEST_CASE("linear change of the fs scales the minor by det L") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    const PolyMap m = testing::random_square_map(rng, 2);
    const auto L = testing::unimodular2(rng);
    const std::int64_t det = L[0][0] * L[1][1] - L[0][1] * L[1][0];
    const auto base = minor_report(m);
    const auto changed = minor_report(compose_linear(m, L));
    CHECK(changed.minors[0] == base.minors[0] * MultiPoly::constant(2, Rational(det)));
    CHECK(changed.verdict == base.verdict);
  }
}

TEST_CASE("permuting variables permutes the minors") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    const PolyMap m = testing::random_square_map(rng, 2);
    const auto swapped = permute_variables(m, {1, 0});
    const auto a = minor_report(m);
    const auto b = minor_report(swapped);
    // Chain rule: the swapped minor is minus the original with x and y exchanged.
    const auto renamed = permute_variables(PolyMap(m.vars(), {a.minors[0]}), {1, 0}).fs()[0];
    CHECK(b.minors[0] == -renamed);
    CHECK(b.verdict == a.verdict);
  }
}

TEST_CASE("independence_rank agrees with the symbolic minor scan") {
  std::mt19937_64 rng(57);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int i = 0; i < 60; ++i) {
    const auto n = static_cast<std::size_t>(dim(rng));
    const auto r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, static_cast<int>(n))(rng));
    std::vector<MultiPoly> fs;
    for (std::size_t k = 0; k < r; ++k) {
      // Occasionally reuse a power of an earlier polynomial to force dependence.
      if (k > 0 && dim(rng) == 1) {
        fs.push_back(pow(fs[0], 2));
      } else {
        fs.push_back(testing::random_poly(rng, n, 3, 2));
      }
    }
    const PolyMap m(testing::var_names(n), fs);
    CHECK(independence_rank(m).rank == testing::symbolic_rank(jacobian_matrix(m)));
  }
}

TEST_CASE("the minor gcd divides every minor") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    const auto m = i % 2 == 0 ? testing::random_square_map(rng, 2) : testing::random_monomial_map(rng);
    const auto rep = minor_report(m);
    for (const auto& mi : rep.minors) {
      if (!mi.is_zero()) CHECK(divide_exact(mi, rep.gcd).has_value());
    }
  }
}
