#pragma once

// Classical anonymous election by repeated fair coin flips. Heads stay
// eligible; a round with no heads (or all heads) eliminates nobody, so the
// round count is unbounded and only almost-surely finite.

#include "qle/rng.hpp"
#include "qle/transcript.hpp"

namespace qle::baseline {

inline constexpr int kDefaultMaxRounds = 10'000;

/// Runs until one processor remains or max_rounds rounds have been played.
/// In the latter case the transcript has no leader_index
/// (ElectionTranscript::budget_exhausted()).
ElectionTranscript run_classical_election(int n, Rng& rng,
                                          int max_rounds = kDefaultMaxRounds);

}  // namespace qle::baseline
