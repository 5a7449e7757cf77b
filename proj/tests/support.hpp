#pragma once

// Brute-force oracles and random inputs shared by the unit tests and the
// acceptance binary. The oracles use only generator arithmetic, never the
// library's search.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "facsub/error.hpp"
#include "facsub/jacobian.hpp"
#include "facsub/lattice.hpp"
#include "facsub/poly.hpp"

namespace facsub::testing {

// Members of S inside a window, by closure under adding generators and
// +-unit generators. Natural coordinates lie in [0, nat_max] and integer
// ones in [-int_max, int_max].
//
// Exact for points well inside the window: natural parts only grow along a
// sum, and the summands of a representation can be ordered so that the
// integer partial sums stay within |target| + max|summand|.
class ClosureOracle {
 public:
  ClosureOracle(const Instance& inst, std::int64_t nat_max, std::int64_t int_max)
      : amb_(inst.ambient), nat_max_(nat_max), int_max_(int_max) {
    std::vector<Point> steps = inst.gens;
    for (const auto& u : inst.unit_gens) {
      steps.push_back(u);
      steps.push_back(-u);
    }
    std::vector<Point> frontier{Point(amb_.dim())};
    members_.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<Point> next;
      for (const auto& p : frontier) {
        for (const auto& s : steps) {
          Point q = p + s;
          if (inside(q) && members_.insert(q).second) next.push_back(q);
        }
      }
      frontier = std::move(next);
    }
  }

  bool inside(const Point& p) const {
    for (std::size_t t = 0; t < p.size(); ++t) {
      const std::int64_t lim = amb_.is_nat(t) ? nat_max_ : int_max_;
      if (p[t] > lim || p[t] < (amb_.is_nat(t) ? 0 : -lim)) return false;
    }
    return true;
  }
  bool member(const Point& p) const { return members_.count(p) > 0; }
  bool unit(const Point& p) const { return member(p) && member(-p); }
  const std::set<Point>& members() const { return members_; }

  // Double loop: v = u + w with u, w non-unit members.
  bool atom(const Point& v) const {
    if (!member(v) || unit(v)) return false;
    for (const auto& u : members_) {
      if (!unit(u) && member(v - u) && !unit(v - u)) return false;
    }
    return true;
  }
  // v = 2u + w with u a non-unit member and w a member.
  bool squarefree(const Point& v) const {
    for (const auto& u : members_) {
      if (!unit(u) && member(v - 2 * u)) return false;
    }
    return true;
  }

 private:
  AmbientLattice amb_;
  std::int64_t nat_max_;
  std::int64_t int_max_;
  std::set<Point> members_;
};

// All points with natural coordinates in [0, r] and integer ones in [-r, r].
inline std::vector<Point> cube(const AmbientLattice& amb, std::int64_t r) {
  std::vector<Point> out{Point(amb.dim())};
  for (std::size_t t = 0; t < amb.dim(); ++t) {
    std::vector<Point> next;
    for (const auto& p : out) {
      for (std::int64_t v = amb.is_nat(t) ? 0 : -r; v <= r; ++v) {
        Point q = p;
        q[t] = v;
        next.push_back(q);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Distinct monic-up-to-scale irreducibles of degree <= 2 over Q.
inline std::vector<MultiPoly> univariate_irreducibles() {
  const std::vector<std::string> x = {"x"};
  std::vector<MultiPoly> out;
  for (const char* s : {"x", "x+1", "x-2", "2*x+3", "x^2+1", "x^2+x+1", "x^2-2", "x^2+3", "x^2-x+5", "3*x^2+2"}) {
    out.push_back(parse_poly(s, x));
  }
  return out;
}

struct FactoredCase {
  MultiPoly f;
  bool squarefree;  // every exponent <= 1
};

// c * prod p_i^e_i with e_i in [0, 3] on a random subset of irreducibles.
inline FactoredCase factored_case(std::mt19937_64& rng) {
  const auto irr = univariate_irreducibles();
  std::uniform_int_distribution<int> e(0, 3), pick(0, 2), c(1, 9);
  MultiPoly f = MultiPoly::constant(1, Rational(c(rng) * (pick(rng) == 0 ? -1 : 1)));
  bool sqf = true;
  for (const auto& p : irr) {
    if (pick(rng) != 0) continue;
    const int k = e(rng);
    f = f * pow(p, static_cast<unsigned>(k));
    sqf = sqf && k <= 1;
  }
  return {f, sqf};
}

inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_terms, unsigned max_deg) {
  std::uniform_int_distribution<int> terms(1, max_terms), coef(-3, 3), deg(0, static_cast<int>(max_deg));
  for (;;) {
    MultiPoly f(nvars);
    const int nt = terms(rng);
    for (int i = 0; i < nt; ++i) {
      Exponent e(nvars);
      for (std::size_t v = 0; v < nvars; ++v) e[v] = static_cast<std::uint32_t>(deg(rng));
      if (e.degree() > max_deg) continue;
      f.add_term(e, Rational(coef(rng)));
    }
    if (!f.is_zero() && !f.is_constant()) return f;
  }
}

inline std::vector<std::string> var_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

inline bool independent(const PolyMap& m) { return independence_rank(m).rank == m.r(); }

// Random independent map with r = n.
inline PolyMap random_square_map(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    std::vector<MultiPoly> fs;
    for (std::size_t i = 0; i < n; ++i) fs.push_back(random_poly(rng, n, 3, 3));
    PolyMap m(var_names(n), std::move(fs));
    if (independent(m)) return m;
  }
}

// Random independent monomial map, n <= 3, r <= n, exponents in [0, 3].
inline PolyMap random_monomial_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(1, 3), ex(0, 3);
  for (;;) {
    const auto n = static_cast<std::size_t>(dim(rng));
    const auto r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, static_cast<int>(n))(rng));
    std::vector<MultiPoly> fs;
    for (std::size_t i = 0; i < r; ++i) {
      Exponent e(n);
      for (std::size_t v = 0; v < n; ++v) e[v] = static_cast<std::uint32_t>(ex(rng));
      if (e.is_zero()) e[0] = 1;
      fs.push_back(MultiPoly::monomial(e, Rational(1)));
    }
    PolyMap m(var_names(n), std::move(fs));
    if (independent(m)) return m;
  }
}

// Integer 2 x 2 matrix with determinant +-1, as a product of shears and an
// optional row swap.
inline std::vector<std::vector<std::int64_t>> unimodular2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> a(-3, 3), s(0, 1);
  const std::int64_t p = a(rng), q = a(rng);
  std::vector<std::vector<std::int64_t>> L = {{1 + p * q, p}, {q, 1}};
  if (s(rng) == 1) std::swap(L[0], L[1]);
  return L;
}

// Largest k with a nonzero k x k minor, scanning every row and column subset.
inline std::size_t symbolic_rank(const PolyMatrix& jac) {
  const std::size_t r = jac.size(), n = jac.empty() ? 0 : jac[0].size();
  std::size_t best = 0;
  for (std::uint32_t rows = 1; rows < (1u << r); ++rows) {
    for (std::uint32_t cols = 1; cols < (1u << n); ++cols) {
      std::vector<std::size_t> ri, ci;
      for (std::size_t i = 0; i < r; ++i) {
        if (rows >> i & 1u) ri.push_back(i);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (cols >> j & 1u) ci.push_back(j);
      }
      if (ri.size() != ci.size() || ri.size() <= best) continue;
      if (!minor(jac, ri, ci).is_zero()) best = ri.size();
    }
  }
  return best;
}

// Determinant by cofactor expansion along the first row.
inline MultiPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly acc(m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(std::move(row));
    }
    MultiPoly term = m[0][j] * cofactor_det(sub);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace facsub::testing
