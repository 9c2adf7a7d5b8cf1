#include "qle/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

namespace qle::metrics {

ConsensusResult sigma_z_consensus(const qsim::StateVector& state, double tol) {
  if (!(tol > 0.0)) {
    throw qsim::ContractError(fmt::format("consensus tolerance must be > 0, got {}", tol));
  }
  ConsensusResult result{true, {}, 0.0};
  result.expectations.reserve(static_cast<std::size_t>(state.num_qubits()));
  for (int q = 0; q < state.num_qubits(); ++q) {
    result.expectations.push_back(qsim::expectation_z(state, q));
  }
  if (!result.expectations.empty()) {
    const auto [lo, hi] =
        std::minmax_element(result.expectations.begin(), result.expectations.end());
    result.max_difference = *hi - *lo;
  }
  result.consensus = result.max_difference <= tol;
  return result;
}

TrialStats summarize_trials(std::span<const ElectionTranscript> transcripts) {
  if (transcripts.empty()) throw qsim::ContractError("no transcripts to summarize");
  const Algorithm algorithm = transcripts.front().algorithm;
  const int n = transcripts.front().n;

  TrialStats stats{algorithm, n, transcripts.size(), 0.0, 0,
                   std::vector<std::size_t>(static_cast<std::size_t>(n), 0), 0.0, 0};
  // Integer accumulation keeps the result independent of transcript order.
  std::uint64_t total_rounds = 0;
  for (const auto& t : transcripts) {
    if (t.algorithm != algorithm || t.n != n) {
      throw qsim::ContractError(fmt::format(
          "mixed batch: {} n={} alongside {} n={}", to_string(algorithm), n,
          to_string(t.algorithm), t.n));
    }
    total_rounds += static_cast<std::uint64_t>(t.round_count());
    stats.max_rounds = std::max(stats.max_rounds, t.round_count());
    if (t.leader_index) {
      ++stats.winner_histogram.at(*t.leader_index);
    } else {
      ++stats.budget_exhausted_count;
    }
  }
  stats.mean_rounds =
      static_cast<double>(total_rounds) / static_cast<double>(transcripts.size());

  const double completed =
      static_cast<double>(transcripts.size() - stats.budget_exhausted_count);
  if (completed > 0) {
    const double expected = completed / n;
    for (std::size_t c : stats.winner_histogram) {
      const double d = static_cast<double>(c) - expected;
      stats.chi_square += d * d / expected;
    }
  }
  return stats;
}

std::vector<double> uniformity_z_scores(std::span<const std::size_t> histogram) {
  const double total =
      static_cast<double>(std::accumulate(histogram.begin(), histogram.end(), std::size_t{0}));
  const double p = 1.0 / static_cast<double>(histogram.size());
  const double se = std::sqrt(total * p * (1.0 - p));
  std::vector<double> z;
  z.reserve(histogram.size());
  for (std::size_t c : histogram) {
    z.push_back(se > 0 ? std::abs(static_cast<double>(c) - total * p) / se : 0.0);
  }
  return z;
}

}  // namespace qle::metrics
