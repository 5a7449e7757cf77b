#include "facsub/jacobian.hpp"

#include <algorithm>
#include <random>

#include "facsub/conditions.hpp"
#include "facsub/error.hpp"
#include "facsub/lattice.hpp"

namespace facsub {
namespace {

// Rank and pivot columns of a rational matrix by Gaussian elimination.
std::pair<std::size_t, std::vector<std::size_t>> rank_with_pivots(std::vector<std::vector<Rational>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {r, pivots};
}

// Next r-subset of {0..n-1} in lex order; false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PolyMap::PolyMap(std::vector<std::string> vars, std::vector<MultiPoly> fs)
    : vars_(std::move(vars)), fs_(std::move(fs)) {
  if (vars_.empty()) throw DomainError("polynomial map needs at least one variable");
  if (fs_.empty()) throw DomainError("polynomial map needs at least one polynomial");
  if (fs_.size() > vars_.size()) {
    throw DomainError("polynomial map has more polynomials (" + std::to_string(fs_.size()) +
                      ") than variables (" + std::to_string(vars_.size()) + ")");
  }
  for (std::size_t i = 0; i < fs_.size(); ++i) {
    if (fs_[i].nvars() != vars_.size()) throw DomainError("polynomial " + std::to_string(i) + " has the wrong arity");
    if (fs_[i].is_zero()) throw DomainError("polynomial " + std::to_string(i) + " is zero");
  }
}

PolyMap PolyMap::parse(const std::vector<std::string>& vars, const std::vector<std::string>& polys) {
  std::vector<MultiPoly> fs;
  for (const auto& p : polys) fs.push_back(parse_poly(p, vars));
  return PolyMap(vars, std::move(fs));
}

bool PolyMap::is_monomial() const noexcept {
  return std::all_of(fs_.begin(), fs_.end(), [](const MultiPoly& f) { return f.term_count() == 1; });
}

PolyMatrix jacobian_matrix(const PolyMap& m) {
  PolyMatrix jac(m.r());
  for (std::size_t i = 0; i < m.r(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) jac[i].push_back(derivative(m.fs()[i], j));
  }
  return jac;
}

MultiPoly minor(const PolyMatrix& jac, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw DomainError("minor needs as many rows as columns");
  PolyMatrix sub;
  for (auto i : rows) {
    std::vector<MultiPoly> row;
    for (auto j : cols) row.push_back(jac.at(i).at(j));
    sub.push_back(std::move(row));
  }
  return det_fraction_free(sub);
}

RankResult independence_rank(const PolyMap& m, std::uint64_t seed) {
  const PolyMatrix jac = jacobian_matrix(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);

  constexpr int kAgree = 3;
  constexpr int kMaxRounds = 24;
  std::size_t best = 0;
  int agree = 0;
  std::vector<std::size_t> best_pivots;
  std::vector<Rational> pt(m.n());
  for (int round = 0; round < kMaxRounds && agree < kAgree; ++round) {
    for (auto& x : pt) x = Rational(coord(rng));
    std::vector<std::vector<Rational>> val(m.r(), std::vector<Rational>(m.n()));
    for (std::size_t i = 0; i < m.r(); ++i) {
      for (std::size_t j = 0; j < m.n(); ++j) val[i][j] = jac[i][j].evaluate(pt);
    }
    auto [rk, piv] = rank_with_pivots(std::move(val));
    if (rk > best) {
      best = rk;
      best_pivots = std::move(piv);
      agree = 1;
    } else if (rk == best) {
      ++agree;
    }
  }

  RankResult out;
  out.rank = best;
  if (best == m.r()) {
    std::vector<std::size_t> rows(m.r());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    MultiPoly cert = minor(jac, rows, best_pivots);
    // Nonzero at a sample point, so nonzero symbolically; checked anyway.
    if (cert.is_zero()) throw InternalError("rank certificate minor vanished");
    out.columns = best_pivots;
    out.certificate = std::move(cert);
  }
  return out;
}

MinorReport minor_report(const PolyMap& m) {
  const RankResult rk = independence_rank(m);
  if (rk.rank < m.r()) {
    throw DomainError("polynomials are algebraically dependent (Jacobian rank " + std::to_string(rk.rank) + " < " +
                      std::to_string(m.r()) + ")");
  }
  const PolyMatrix jac = jacobian_matrix(m);
  std::vector<std::size_t> rows(m.r());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;

  MinorReport rep;
  std::optional<MultiPoly> g;
  std::vector<std::size_t> cols = rows;
  do {
    MultiPoly d = minor(jac, rows, cols);
    if (!d.is_zero()) g = g ? gcd(*g, d) : normalize(d);
    rep.indices.push_back(cols);
    rep.minors.push_back(std::move(d));
  } while (next_combination(cols, m.n()));
  if (!g) throw InternalError("every maximal minor is zero despite a certified full rank");
  rep.gcd = std::move(*g);
  rep.verdict = rep.gcd.is_constant() && !rep.gcd.is_zero();
  return rep;
}

Instance monomial_instance(const PolyMap& m) {
  if (!m.is_monomial()) throw DomainError("bridge needs every polynomial to be a single monomial");
  if (m.n() > kMaxDim) throw DomainError("bridge supports at most " + std::to_string(kMaxDim) + " variables");
  Instance inst{AmbientLattice::naturals(m.n()), {}, {}};
  for (const auto& f : m.fs()) {
    const Exponent& e = f.leading_exponent();
    Point p(m.n());
    for (std::size_t j = 0; j < m.n(); ++j) p[j] = e[j];
    inst.gens.push_back(p);
  }
  return inst;
}

BridgeReport bridge_check(const PolyMap& m, const SearchBound& bound) {
  const Instance inst = monomial_instance(m);
  BridgeReport rep;
  rep.minors = minor_report(m);
  const auto S = inst.build();
  rep.fragment = eval("SETINCL_SqfR_SqfA", *S, bound);
  // A fragment failure refutes Sqf R in Sqf A, hence the gcd condition.
  rep.consistent = !rep.fragment.is_fails() || !rep.minors.verdict;
  return rep;
}

PolyMap compose_linear(const PolyMap& m, const std::vector<std::vector<std::int64_t>>& L) {
  if (L.size() != m.r()) throw DomainError("linear map must be r x r");
  std::vector<MultiPoly> gs;
  for (const auto& row : L) {
    if (row.size() != m.r()) throw DomainError("linear map must be r x r");
    MultiPoly g(m.n());
    for (std::size_t j = 0; j < m.r(); ++j) g += m.fs()[j] * Rational(row[j]);
    gs.push_back(std::move(g));
  }
  return PolyMap(m.vars(), std::move(gs));
}

PolyMap permute_variables(const PolyMap& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.n()) throw DomainError("permutation length must equal the variable count");
  std::vector<bool> seen(m.n());
  for (auto p : perm) {
    if (p >= m.n() || seen[p]) throw DomainError("not a permutation");
    seen[p] = true;
  }
  std::vector<MultiPoly> gs;
  for (const auto& f : m.fs()) {
    MultiPoly g(m.n());
    for (const auto& [e, c] : f.terms()) {
      Exponent e2(m.n());
      for (std::size_t j = 0; j < m.n(); ++j) e2[perm[j]] = e[j];
      g.add_term(e2, c);
    }
    gs.push_back(std::move(g));
  }
  return PolyMap(m.vars(), std::move(gs));
}

}  // namespace facsub
