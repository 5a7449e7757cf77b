#pragma once

// Gcd of the maximal Jacobian minors of R = k[f1..fr] in Q[x1..xn], and a
// cross-check against the monomial catalog for monomial maps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facsub/poly.hpp"
#include "facsub/verdict.hpp"

namespace facsub {

struct Instance;

/// r polynomials in n named variables with 1 <= r <= n, all nonzero.
class PolyMap {
 public:
  /// Throws DomainError when the shape or a polynomial is invalid.
  PolyMap(std::vector<std::string> vars, std::vector<MultiPoly> fs);
  /// Parses each polynomial over `vars`; ParseError on bad syntax.
  static PolyMap parse(const std::vector<std::string>& vars, const std::vector<std::string>& polys);

  std::size_t n() const noexcept { return vars_.size(); }
  std::size_t r() const noexcept { return fs_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<MultiPoly>& fs() const noexcept { return fs_; }
  bool is_monomial() const noexcept;

 private:
  std::vector<std::string> vars_;
  std::vector<MultiPoly> fs_;
};

/// Entry (i, j) is d f_i / d x_j.
PolyMatrix jacobian_matrix(const PolyMap& m);

/// Determinant of the rows `rows` and columns `cols` of `jac`.
MultiPoly minor(const PolyMatrix& jac, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

struct RankResult {
  std::size_t rank = 0;
  /// Columns of a nonzero r x r minor, present when rank = r.
  std::optional<std::vector<std::size_t>> columns;
  std::optional<MultiPoly> certificate;
};

inline constexpr std::uint64_t kRankSeed = 0x5eed'ca11'ab1e'f00dULL;

/// Rank of the Jacobian over Q(x). The rank is the largest one seen at
/// integer points drawn from [-1000, 1000], confirmed by three agreeing
/// evaluations; full rank is certified by a symbolic nonzero minor.
RankResult independence_rank(const PolyMap& m, std::uint64_t seed = kRankSeed);

struct MinorReport {
  std::vector<std::vector<std::size_t>> indices;  // column tuples, lex order
  std::vector<MultiPoly> minors;
  MultiPoly gcd;
  bool verdict = false;  // gcd is a nonzero constant
};

/// All C(n, r) maximal minors and their gcd. Throws DomainError when the
/// f_i are dependent.
MinorReport minor_report(const PolyMap& m);

struct BridgeReport {
  bool consistent = true;
  Verdict fragment;  // Sqf R in Sqf A on the exponent semigroup
  MinorReport minors;
};

/// Exponent semigroup of a monomial map, as a subring of N^n.
Instance monomial_instance(const PolyMap& m);

/// For a monomial map: a fragment failure of Sqf R in Sqf A must come with
/// a nonconstant minor gcd. Throws DomainError for non-monomial or
/// dependent input.
BridgeReport bridge_check(const PolyMap& m, const SearchBound& bound);

/// g_i = sum_j L[i][j] f_j. L must be r x r.
PolyMap compose_linear(const PolyMap& m, const std::vector<std::vector<std::int64_t>>& L);
/// Renames x_j to x_perm[j] in every f_i; variable names stay in place.
PolyMap permute_variables(const PolyMap& m, const std::vector<std::size_t>& perm);

}  // namespace facsub
