#pragma once

// Directed implications between catalog conditions, each carrying the
// witness construction from its proof. For an edge P => Q, a failure of Q
// is mapped to candidate failures of P; the first candidate that replays is
// the transported witness.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "facsub/conditions.hpp"

namespace facsub {

using TransportMap =
    std::function<std::vector<Witness>(const MonomialSubring&, const Witness&, const SearchBound&)>;

struct TransportEdge {
  std::string premise;     // P
  std::string conclusion;  // Q
  std::string rule;        // the construction, in words
  TransportMap map;
};

enum class EdgeStatus {
  Holds,          // Q holds within the bound
  Strict,         // Q holds, P fails: the arrow is not reversible here
  Consistent,     // Q fails and the transported witness replays for P
  BoundArtifact,  // transported witness replays but leaves the bound, P Holds
  Skipped,        // a hypothesis of the statement is not satisfied
  Violation,
};

std::string_view edge_status_name(EdgeStatus s) noexcept;

struct EdgeResult {
  std::string premise;
  std::string conclusion;
  EdgeStatus status = EdgeStatus::Holds;
  std::optional<Witness> conclusion_witness;
  std::optional<Witness> premise_witness;
  std::string detail;
};

/// Per-instance memo of verdicts so each condition is evaluated once.
class VerdictCache {
 public:
  VerdictCache(const MonomialSubring& S, const SearchBound& bound) : S_(S), bound_(bound) {}
  const Verdict& get(const std::string& id);
  const MonomialSubring& subring() const noexcept { return S_; }
  const SearchBound& bound() const noexcept { return bound_; }

 private:
  const MonomialSubring& S_;
  SearchBound bound_;
  std::map<std::string, Verdict> verdicts_;
};

EdgeResult check_edge(const TransportEdge& edge, VerdictCache& cache);

/// Element-level inclusion grid (Irr/Prime/Sqf/Gpr of R inside Irr/Prime/
/// Sqf/Gpr of A), the units chain to R cap Irr A in Irr R, and the chain
/// divisibility => associates => rpr => irreducibility.
const std::vector<TransportEdge>& implication_edges();

/// Equivalence suites: "1_1", "1_2", "2_2", "3_4", "4_1", "4_2", "4_3",
/// "4_4", "4_5", "4_6". `p` is used by "2_2" only.
std::vector<TransportEdge> equivalence_edges(const std::string& prop, std::int64_t p = 2);
const std::vector<std::string>& equivalence_props();

/// Pairs of conditions whose bounded verdicts must coincide exactly.
std::vector<std::pair<std::string, std::string>> agreement_pairs(const std::string& prop, std::int64_t p = 2);

/// Reason the statement's standing hypotheses fail on S, if they do.
std::optional<std::string> suite_hypothesis(const std::string& prop, VerdictCache& cache, std::int64_t p = 2);

/// True iff p*e_i lies in S for every coordinate i (and -p*e_j for unit
/// directions), i.e. A^p is contained in R on the monomial fragment.
bool contains_pth_powers(const MonomialSubring& S, std::int64_t p);

}  // namespace facsub
