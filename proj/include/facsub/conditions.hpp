#pragma once

// Catalog of subring conditions as bounded predicates on monomial subrings.
//
// Ring statements are translated to the lattice: products become sums,
// a^k b becomes k*a + b, "in R" is membership in S, A-units are points with
// zero natural part, Irr A is natural part of total 1 and Sqf A is natural
// coordinates <= 1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facsub/lattice.hpp"
#include "facsub/verdict.hpp"

namespace facsub {

struct ConditionInfo {
  std::string id;
  std::string statement;
  /// Layout of a failure witness, e.g. "points [a, b]; ints [k]".
  std::string witness;
  /// Evaluated only when every unit of A in the monomial fragment is a unit
  /// of R; otherwise the verdict is HypothesisViolated.
  bool needs_units_equal = false;
};

/// Every condition id, in catalog order.
const std::vector<ConditionInfo>& catalog();
/// Catalog entry, also resolving parametrized ids such as D2_1_Bfc_p5 and
/// the hypothesis check H_units_equal.
std::optional<ConditionInfo> find_condition(std::string_view id);

/// Throws DomainError for an unknown id.
Verdict eval(std::string_view id, const MonomialSubring& S, const SearchBound& bound);

/// Substitution of a witness into a condition's defining formula.
struct Replay {
  bool violated = false;
  /// Largest |coordinate| over the witness and every point the premise
  /// mentions; the witness is inside the search domain iff extent <= B.
  std::int64_t extent = 0;
  /// Largest exponent the premise uses; must be <= K to be in the domain.
  std::int64_t max_exp = 0;
  std::string detail;

  bool in_domain(const SearchBound& b) const noexcept { return extent <= b.B && max_exp <= b.K; }
};

/// Replays `w` against condition `id`. Quantifiers over exponents inside a
/// premise ("for all k >= 1") are taken up to bound.K.
Replay replay(std::string_view id, const MonomialSubring& S, const Witness& w, const SearchBound& bound);

struct HypothesisReport {
  Verdict units_equal;
  Verdict fraction_closed;
  bool ufd_ambient = true;
};

HypothesisReport hypotheses(const MonomialSubring& S, const SearchBound& bound);

}  // namespace facsub
