#include "qle/baseline.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/core.h>

#include "qle/election.hpp"
#include "qle/network.hpp"
#include "qle/qsim.hpp"

namespace qle::baseline {

ElectionTranscript run_classical_election(int n, Rng& rng, int max_rounds) {
  if (n < 1) {
    throw qsim::ContractError(fmt::format("classical election needs n >= 1, got {}", n));
  }
  if (max_rounds < 1) {
    throw qsim::ContractError(fmt::format("round budget must be >= 1, got {}", max_rounds));
  }

  ElectionTranscript transcript{n, Algorithm::Classical, rng.seed(), {}, {}};
  std::vector<std::size_t> eligible(static_cast<std::size_t>(n));
  std::iota(eligible.begin(), eligible.end(), std::size_t{0});

  std::vector<int> flips;
  while (eligible.size() > 1 && transcript.round_count() < max_rounds) {
    flips.clear();
    for (std::size_t i = 0; i < eligible.size(); ++i) flips.push_back(rng.coin() ? 1 : 0);
    const network::Multiset received = network::broadcast(flips);

    std::vector<std::size_t> survivors;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      if (election::next_status(Status::Eligible, Branch::Classical, flips[i],
                                received) == Status::Eligible) {
        survivors.push_back(eligible[i]);
      }
    }
    transcript.rounds.push_back(RoundRecord{transcript.round_count() + 1,
                                            static_cast<int>(eligible.size()),
                                            Branch::Classical, std::nullopt,
                                            received.sorted(),
                                            static_cast<int>(survivors.size()), 0});
    eligible = std::move(survivors);
  }
  if (eligible.size() == 1) transcript.leader_index = eligible.front();
  return transcript;
}

}  // namespace qle::baseline
