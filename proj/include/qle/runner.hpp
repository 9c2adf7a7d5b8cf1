#pragma once

// Batch runner and command-line front end.
//
// Trace files are JSONL, one line per round in trial order:
//   {"trial":0,"round":1,"k":6,"branch":"inconsistent","s_bit":0,
//    "values":[0,0,1,1,1,1],"k_after":4}
// "trial" is the 0-based trial index, "s_bit" is null for rounds without a
// consistency check, and tournament rounds carry an extra "byes" count.
// Summary files are CSV with the header
//   algorithm,n,trials,mean_rounds,max_rounds,chi_square,budget_exhausted

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qle/baseline.hpp"
#include "qle/metrics.hpp"
#include "qle/transcript.hpp"

namespace qle::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kCapacity = 2,
  kIo = 3,
  kVerificationFailure = 4,
};

struct RunSpec {
  Algorithm algorithm = Algorithm::Tani2;
  int n = 2;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> trace_path;
  std::optional<std::filesystem::path> summary_path;
  int max_rounds = baseline::kDefaultMaxRounds;

  /// Throws qsim::ContractError for bad counts and qsim::CapacityError when
  /// n exceeds the algorithm's processor limit.
  void validate() const;
};

/// Largest n each algorithm accepts.
int capacity_limit(Algorithm algorithm);

ElectionTranscript run_single(Algorithm algorithm, int n, Rng& rng, int max_rounds);

/// Trial i runs with Rng(derive_trial_seed(spec.seed, i)).
std::vector<ElectionTranscript> run_trials(const RunSpec& spec);

std::string format_trace_line(std::size_t trial, const RoundRecord& round);
std::string format_trace(std::span<const ElectionTranscript> transcripts);
std::string format_summary_csv(const metrics::TrialStats& stats);
std::string format_stats(const metrics::TrialStats& stats);

/// Full `qle` command line. Returns one of ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qle::cli
