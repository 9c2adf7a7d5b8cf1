#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qle/qsim.hpp"
#include "qle/transcript.hpp"

namespace qle::metrics {

inline constexpr double kDefaultConsensusTolerance = 1e-9;

struct ConsensusResult {
  bool consensus;
  /// <Z> of each qubit, in qubit order.
  std::vector<double> expectations;
  double max_difference;
};

/// sigma-expectation consensus for a pure state: every qubit has the same
/// <Z> up to tol. Throws qsim::ContractError for tol <= 0.
ConsensusResult sigma_z_consensus(const qsim::StateVector& state,
                                  double tol = kDefaultConsensusTolerance);

struct TrialStats {
  Algorithm algorithm;
  int n;
  std::size_t trials;
  double mean_rounds;
  int max_rounds;
  /// Wins per processor index; sums to trials - budget_exhausted_count.
  std::vector<std::size_t> winner_histogram;
  /// Pearson statistic of the histogram against the uniform distribution.
  double chi_square;
  std::size_t budget_exhausted_count;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

/// Throws qsim::ContractError on an empty batch or mixed (algorithm, n).
TrialStats summarize_trials(std::span<const ElectionTranscript> transcripts);

/// |count_i - N/n| / sqrt(N p (1 - p)) for each bin, p = 1/n, N = total.
std::vector<double> uniformity_z_scores(std::span<const std::size_t> histogram);

}  // namespace qle::metrics
