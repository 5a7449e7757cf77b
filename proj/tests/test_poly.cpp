#include <doctest.h>

#include <random>

#include "facsub/error.hpp"
#include "facsub/poly.hpp"
#include "support.hpp"

using namespace facsub;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

MultiPoly P(const char* s, const std::vector<std::string>& vars = XY) { return parse_poly(s, vars); }

Exponent E(std::vector<std::uint32_t> e) { return Exponent(std::move(e)); }

}  // namespace

TEST_CASE("parse_poly builds the canonical sparse form") {
  const MultiPoly f = P("x^2*y + 3/2");
  CHECK(f.term_count() == 2);
  CHECK(f.coefficient(E({2, 1})) == 1);
  CHECK(f.coefficient(E({0, 0})) == Rational(3, 2));

  CHECK(P("x^2 - x^2").is_zero());

  const MultiPoly sq = P("(x+y)^2");
  CHECK(sq.term_count() == 3);
  CHECK(sq.coefficient(E({2, 0})) == 1);
  CHECK(sq.coefficient(E({1, 1})) == 2);
  CHECK(sq.coefficient(E({0, 2})) == 1);

  CHECK(P("3x") == P("3*x"));
  CHECK(P("-(x - y)") == P("y - x"));
}

TEST_CASE("parse then print then parse is a fixed point") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly f = testing::random_poly(rng, 3, 5, 4);
    const std::string s = f.to_string(XYZ);
    CHECK(parse_poly(s, XYZ) == f);
    CHECK(parse_poly(s, XYZ).to_string(XYZ) == s);
  }
  CHECK(P("0").to_string(XY) == "0");
}

TEST_CASE("parse errors carry the offending byte offset") {
  auto pos = [](const char* s) -> std::size_t {
    try {
      parse_poly(s, XY);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(pos("x + * y") == 4);
  CHECK(pos("x + w") == 4);     // unknown variable
  CHECK(pos("x^-2") == 2);      // negative exponent
  CHECK(pos("(x + y") == 6);    // missing ')'
  CHECK(pos("") == 0);
  CHECK(pos("x / y") == 2);
}

TEST_CASE("arithmetic examples") {
  CHECK((P("x") + P("-x")).is_zero());
  CHECK(P("x+y") * P("x-y") == P("x^2 - y^2"));
  CHECK(pow(P("x+1"), 0) == MultiPoly::constant(2, 1));
  CHECK_THROWS_AS(P("x") + parse_poly("x", XYZ), DomainError);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto f = testing::random_poly(rng, 2, 4, 3);
    const auto g = testing::random_poly(rng, 2, 4, 3);
    const auto h = testing::random_poly(rng, 2, 4, 3);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("divide_exact") {
  CHECK(*divide_exact(P("x^2 - y^2"), P("x + y")) == P("x - y"));
  CHECK(*divide_exact(P("x^3"), P("x^2")) == P("x"));
  CHECK_FALSE(divide_exact(P("x + 1"), P("y")).has_value());
  CHECK_THROWS_AS(divide_exact(P("x"), P("0")), DomainError);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    const auto f = testing::random_poly(rng, 3, 4, 3);
    const auto g = testing::random_poly(rng, 3, 4, 3);
    const auto q = divide_exact(f * g, g);
    REQUIRE(q.has_value());
    CHECK(*q == f);
  }
}

TEST_CASE("derivative") {
  CHECK(derivative(P("x^2*y"), 0) == P("2*x*y"));
  CHECK(derivative(P("y^3"), 0).is_zero());
  CHECK(derivative(P("x^2 + y^2"), 1) == P("2*y"));
  CHECK_THROWS_AS(derivative(P("x"), 2), DomainError);
}

TEST_CASE("gcd examples and normalization") {
  CHECK(gcd(P("x^2 - y^2"), P("(x + y)^2")) == P("x + y"));
  CHECK(gcd(P("2*x"), P("2*y")) == P("1"));
  const MultiPoly f = P("-6*x^2*y + 4*y");
  CHECK(gcd(f, f) == P("3*x^2*y - 2*y"));
  CHECK(gcd(f, P("0")) == normalize(f));
  CHECK(gcd(P("1/2*x + 1/3"), P("0")) == P("3*x + 2"));
  CHECK_THROWS_AS(gcd(P("0"), P("0")), DomainError);
}

TEST_CASE("gcd divides both arguments and commutes with a common factor") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto f = testing::random_poly(rng, 2, 3, 3);
    const auto g = testing::random_poly(rng, 2, 3, 3);
    const auto h = testing::random_poly(rng, 2, 3, 2);
    const auto d = gcd(f, g);
    CHECK(divide_exact(f, d).has_value());
    CHECK(divide_exact(g, d).has_value());
    CHECK(gcd(f * h, g * h) == normalize(d * h));
  }
}

TEST_CASE("squarefree_in_A") {
  CHECK_FALSE(is_squarefree(P("x^2*y + x^2")));
  CHECK(is_squarefree(P("x + 1")));
  CHECK(is_squarefree(P("5")));
  CHECK_THROWS_AS(is_squarefree(P("0")), DomainError);
}

TEST_CASE("squarefree_in_A agrees with factored univariate constructions") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    const auto c = testing::factored_case(rng);
    CAPTURE(c.f.to_string(std::vector<std::string>{"x"}));
    CHECK(is_squarefree(c.f) == c.squarefree);
  }
}

TEST_CASE("a square factor is never square-free") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const auto f = testing::random_poly(rng, 2, 3, 2);
    const auto g = testing::random_poly(rng, 2, 3, 2);
    CHECK_FALSE(is_squarefree(f * f * g));
  }
}

TEST_CASE("det_fraction_free") {
  CHECK(det_fraction_free({{P("1"), P("0")}, {P("y"), P("x")}}) == P("x"));
  CHECK(det_fraction_free({{P("1"), P("1")}, {P("1"), P("-1")}}) == P("-2"));
  CHECK(det_fraction_free({{P("x")}}) == P("x"));
  CHECK_THROWS_AS(det_fraction_free({{P("1"), P("1")}}), DomainError);
  // A zero pivot forces a row exchange.
  CHECK(det_fraction_free({{P("0"), P("1")}, {P("1"), P("0")}}) == P("-1"));
}

TEST_CASE("det_fraction_free agrees with cofactor expansion up to 4 x 4") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> zero(0, 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      PolyMatrix m(n);
      for (auto& row : m) {
        for (std::size_t j = 0; j < n; ++j) {
          row.push_back(zero(rng) == 0 ? MultiPoly(2) : testing::random_poly(rng, 2, 2, 2));
        }
      }
      CHECK(det_fraction_free(m) == testing::cofactor_det(m));
    }
  }
}
