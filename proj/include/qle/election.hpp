#pragma once

/**
 * @file
 * Quantum leader election protocols as round-based state machines over the
 * simulated network.
 *
 * - W-state election: one shared W_n, every processor measures its qubit and
 *   the unique holder of a 1 leads. Always one round.
 * - Consistency-check election: each round the eligible processors build a
 *   uniform register, flag consistency into S, and either collapse to an
 *   inconsistent string or apply a symmetry breaker that removes every
 *   consistent outcome. Each round strictly shrinks the candidate set, so at
 *   most n - 1 rounds are needed on every seed.
 * - Tournament: random pairing rounds, each pair decided by a two-party
 *   consistency-check round.
 */

#include <span>

#include "qle/network.hpp"
#include "qle/rng.hpp"
#include "qle/transcript.hpp"

namespace qle::election {

inline constexpr int kMaxWStateProcessors = 20;
inline constexpr int kMaxTaniProcessors = 8;
inline constexpr int kMaxTournamentProcessors = 64;

/// The per-processor transition. Takes only local state and the anonymous
/// broadcast; no processor index is visible here.
Status next_status(Status current, Branch branch, int local_value,
                   const network::Multiset& received);

struct TaniRoundOutcome {
  RoundRecord record;
  /// Measured value of each eligible processor, in the order given.
  std::vector<int> local_values;
  std::vector<Status> next;
};

/// One consistency-check round among the given eligible processors.
TaniRoundOutcome play_tani_round(const network::NetworkConfig& config,
                                 std::span<const std::size_t> eligible,
                                 int round_index, Rng& rng);

/// One round among k anonymous eligible processors.
RoundRecord run_tani_round(int k, Rng& rng);

ElectionTranscript run_w_state_election(int n, Rng& rng);

struct ElectionOptions {
  /// Hand registers to the eligible processors in descending rather than
  /// ascending bookkeeping order. Outcomes must be identically distributed
  /// either way.
  bool reverse_register_order = false;
};

ElectionTranscript run_tani_election(int n, Rng& rng,
                                     const ElectionOptions& options = {});

ElectionTranscript run_tournament(int n, Rng& rng);

}  // namespace qle::election
