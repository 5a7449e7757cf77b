#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "facsub/lattice.hpp"

namespace facsub {

enum class Outcome { Holds, Fails, HypothesisViolated };

std::string_view outcome_name(Outcome o) noexcept;
std::optional<Outcome> parse_outcome(std::string_view s) noexcept;

/// Result of a bounded check. Holds means "no counterexample within the
/// bound", never an unconditional proof.
struct Verdict {
  std::string condition;
  Outcome outcome = Outcome::Holds;
  SearchBound bound;
  std::optional<Witness> witness;
  std::optional<std::string> reason;

  static Verdict holds(std::string id, const SearchBound& bound);
  static Verdict fails(std::string id, const SearchBound& bound, Witness w);
  static Verdict hypothesis_violated(std::string id, const SearchBound& bound, std::string why);

  bool is_holds() const noexcept { return outcome == Outcome::Holds; }
  bool is_fails() const noexcept { return outcome == Outcome::Fails; }
};

}  // namespace facsub
