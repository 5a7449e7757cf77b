#pragma once

// Seeded random instances, the lemma / implication / equivalence suites,
// witness shrinking and the pinned example fixtures.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facsub/json_io.hpp"
#include "facsub/transport.hpp"

namespace facsub {

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t n_max = 3;          // ambient dimension in [1, n_max]
  std::size_t gen_count = 5;      // generators in [1, gen_count]
  std::int64_t coord_max = 4;     // |coordinate| <= coord_max
  std::size_t unit_dirs = 1;      // integer coordinates, at most n - 1
  std::size_t instance_count = 100;
};

/// Deterministic in (params, index); invalid draws are resampled from the
/// same stream.
Instance gen_instance(const GenParams& params, std::size_t index);

/// The instance with p*e_t (and -p*e_t on integer coordinates) added, so
/// that A^p lies in R.
Instance with_pth_powers(const Instance& inst, std::int64_t p);

struct Violation {
  std::size_t instance_index = 0;
  std::string premise;
  std::string conclusion;
  std::string detail;
  Instance instance;
  std::optional<Witness> conclusion_witness;
  std::optional<Witness> premise_witness;
  // Shrunk failure of the conclusion, with the instance it replays on.
  std::optional<Instance> shrunk_instance;
  std::optional<Witness> shrunk_witness;
};

struct EdgeTally {
  std::string kind = "edge";  // "edge" or "agreement"
  std::string premise;
  std::string conclusion;
  // Indexed by EdgeStatus. Agreement rows count Holds when both verdicts
  // hold, Consistent when both fail and Violation otherwise.
  std::array<std::size_t, 6> counts{};

  std::size_t count(EdgeStatus s) const { return counts[static_cast<std::size_t>(s)]; }
};

struct InstanceOutcome {
  std::size_t index = 0;
  bool skipped = false;
  std::string skip_reason;
  std::size_t checks = 0;
  std::size_t violations = 0;
};

struct SuiteReport {
  std::string suite;
  GenParams params;
  SearchBound bound;
  std::vector<InstanceOutcome> instances;
  std::vector<EdgeTally> edges;
  std::vector<Violation> violations;
  double seconds = 0;

  std::size_t skipped() const;
  std::size_t violation_count() const { return violations.size(); }
  bool passed() const { return violations.empty(); }
  /// Timing is omitted unless asked for, so equal inputs give equal JSON.
  Json to_json(bool with_timing = false) const;
};

struct SuiteOptions {
  unsigned threads = 1;
  bool shrink = true;
};

/// Irr in Sqf, Prime in Irr, Prime in Gpr and Gpr in Sqf of R, checked on
/// every non-unit member in the box: a failure of the larger class is
/// transported to a failure of the smaller one.
SuiteReport run_lemma_suite(const GenParams& params, const SearchBound& bound, const SuiteOptions& opt = {});

/// Every edge of implication_edges().
SuiteReport run_implication_suite(const GenParams& params, const SearchBound& bound, const SuiteOptions& opt = {});

/// Edges of equivalence_edges(prop, p) plus exact verdict agreement of
/// agreement_pairs. Suite "2_2" runs on with_pth_powers(instance, p).
SuiteReport run_equivalence_suite(const std::string& prop, const GenParams& params, const SearchBound& bound,
                                  std::int64_t p = 2, const SuiteOptions& opt = {});

/// Edge names of the "lemma" suite, in report order.
const std::vector<std::pair<std::string, std::string>>& lemma_edges();

struct Shrunk {
  Instance instance;
  Witness witness;
};

/// Greedy shrinking of a failure witness of `condition`: single coordinates
/// toward 0, joint shifts of one coordinate across all points, integer
/// parameters downward, then generator removal. Every step keeps the
/// witness replaying. Throws InternalError if the input does not replay.
Shrunk shrink(const Instance& instance, const std::string& condition, const Witness& witness,
              const SearchBound& bound);

// Pinned example instances: "ex1_5", "ex1_6", "ex1_7", "ex1_8", "ex1_9",
// "axis", "x_squared", "plane".
Instance fixture_instance(const std::string& name);
const std::vector<std::string>& fixture_instance_names();

struct FixtureRow {
  std::string id;
  std::string example;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<FixtureRow> run_fixtures();
Json fixtures_to_json(const std::vector<FixtureRow>& rows);
/// Aligned text table, one row per line.
std::string fixtures_to_text(const std::vector<FixtureRow>& rows);

}  // namespace facsub
