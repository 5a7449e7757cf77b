#include "facsub/verdict.hpp"

namespace facsub {

std::string_view outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::HypothesisViolated: return "hypothesis_violated";
  }
  return "holds";
}

std::optional<Outcome> parse_outcome(std::string_view s) noexcept {
  if (s == "holds") return Outcome::Holds;
  if (s == "fails") return Outcome::Fails;
  if (s == "hypothesis_violated") return Outcome::HypothesisViolated;
  return std::nullopt;
}

Verdict Verdict::holds(std::string id, const SearchBound& bound) {
  return Verdict{std::move(id), Outcome::Holds, bound, std::nullopt, std::nullopt};
}

Verdict Verdict::fails(std::string id, const SearchBound& bound, Witness w) {
  return Verdict{std::move(id), Outcome::Fails, bound, std::move(w), std::nullopt};
}

Verdict Verdict::hypothesis_violated(std::string id, const SearchBound& bound, std::string why) {
  return Verdict{std::move(id), Outcome::HypothesisViolated, bound, std::nullopt, std::move(why)};
}

}  // namespace facsub
