#include "qle/election.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include <fmt/core.h>

#include "qle/circuits.hpp"

namespace qle::election {

using network::Multiset;
using network::NetworkConfig;
using network::Role;
using qsim::StateVector;

namespace {

std::vector<std::size_t> all_processors(int n) {
  std::vector<std::size_t> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return ids;
}

void check_count(int n, int lo, int hi, std::string_view what) {
  if (n < lo) {
    throw qsim::ContractError(
        fmt::format("{} needs at least {} processors, got {}", what, lo, n));
  }
  if (n > hi) {
    throw qsim::CapacityError(
        fmt::format("{} supports at most {} processors, got {}", what, hi, n));
  }
}

// Applies the same single-site unitary to each listed group of qubits.
StateVector apply_locally(StateVector state, const qsim::UnitaryMatrix& u,
                          const std::vector<qsim::QubitList>& sites) {
  for (const auto& site : sites) state = qsim::apply_unitary(state, u, site);
  return state;
}

std::vector<qsim::QubitList> singletons(const qsim::QubitList& qubits) {
  std::vector<qsim::QubitList> out;
  out.reserve(qubits.size());
  for (int q : qubits) out.push_back({q});
  return out;
}

}  // namespace

Status next_status(Status current, Branch branch, int local_value,
                   const Multiset& received) {
  if (current == Status::Ineligible) return Status::Ineligible;
  switch (branch) {
    case Branch::ConsistentOdd:
      return local_value == received.max() ? Status::Eligible
                                           : Status::Ineligible;
    case Branch::Classical:
      // Nobody flipped heads: the round is wasted and everyone stays.
      if (received.count(1) == 0) return Status::Eligible;
      [[fallthrough]];
    case Branch::Inconsistent:
    case Branch::ConsistentEven:
    case Branch::WState:
    case Branch::Tournament:
      return local_value == 1 ? Status::Eligible : Status::Ineligible;
  }
  return Status::Ineligible;
}

TaniRoundOutcome play_tani_round(const NetworkConfig& config,
                                 std::span<const std::size_t> eligible,
                                 int round_index, Rng& rng) {
  const int k = static_cast<int>(eligible.size());
  if (k < 2) {
    throw qsim::ContractError(
        fmt::format("a consistency-check round needs k >= 2, got {}", k));
  }

  // Uniform R register and S = |0^k>, then flag consistency into S.
  const auto rs_layout = network::assign_registers(config, eligible, {Role::R, Role::S});
  const qsim::QubitList r_qubits = rs_layout.qubits(Role::R);
  const qsim::QubitList s_qubits = rs_layout.qubits(Role::S);
  StateVector state = qsim::tensor_product(circuits::prepare_uniform_register(k),
                                           StateVector::basis(k, 0));
  state = qsim::apply_basis_permutation(state, circuits::consistency_oracle(k));

  const auto s_outcome = qsim::measure_qubits(state, s_qubits, rng);
  const int s_bit = s_outcome.bits.front();
  if (std::any_of(s_outcome.bits.begin(), s_outcome.bits.end(),
                  [&](int b) { return b != s_bit; })) {
    throw ProtocolViolation(
        fmt::format("S register measured {}; processors disagree",
                    s_outcome.bit_string()));
  }
  state = qsim::discard_qubits(s_outcome.post_state, s_qubits);

  Branch branch = Branch::Inconsistent;
  std::vector<int> values(eligible.size());
  if (s_bit == 0) {
    const auto r_outcome = qsim::measure_qubits(state, r_qubits, rng);
    values = r_outcome.bits;
  } else if (k % 2 == 0) {
    branch = Branch::ConsistentEven;
    const auto u = circuits::build_even_symmetry_breaker(circuits::PhaseParams::for_count(k));
    state = apply_locally(std::move(state), u, singletons(r_qubits));
    values = qsim::measure_qubits(state, r_qubits, rng).bits;
  } else {
    branch = Branch::ConsistentOdd;
    const auto rt_layout = network::assign_registers(config, eligible, {Role::R, Role::T});
    const auto rt_pairs = rt_layout.pairs(Role::R, Role::T);
    state = qsim::tensor_product(state, StateVector::basis(k, 0));
    state = apply_locally(std::move(state), circuits::cnot(), rt_pairs);
    const auto v = circuits::build_odd_symmetry_breaker(circuits::PhaseParams::for_count(k));
    state = apply_locally(std::move(state), v, rt_pairs);

    qsim::QubitList interleaved;
    for (const auto& pair : rt_pairs) interleaved.insert(interleaved.end(), pair.begin(), pair.end());
    const auto bits = qsim::measure_qubits(state, interleaved, rng).bits;
    for (int p = 0; p < k; ++p) values[p] = 2 * bits[2 * p] + bits[2 * p + 1];
  }

  const Multiset received = network::broadcast(values);
  TaniRoundOutcome outcome;
  outcome.local_values = values;
  outcome.next.reserve(values.size());
  for (int value : values) {
    outcome.next.push_back(next_status(Status::Eligible, branch, value, received));
  }
  const int k_after = static_cast<int>(
      std::count(outcome.next.begin(), outcome.next.end(), Status::Eligible));
  if (k_after < 1 || k_after >= k) {
    throw ProtocolViolation(fmt::format(
        "round {} went from {} to {} eligible processors", round_index, k, k_after));
  }
  outcome.record = RoundRecord{round_index, k,           branch, s_bit,
                               received.sorted(), k_after, 0};
  return outcome;
}

RoundRecord run_tani_round(int k, Rng& rng) {
  check_count(k, 2, kMaxTaniProcessors, "a consistency-check round");
  const NetworkConfig config{k, rng.seed(), 2};
  const auto ids = all_processors(k);
  return play_tani_round(config, ids, 1, rng).record;
}

ElectionTranscript run_w_state_election(int n, Rng& rng) {
  check_count(n, 1, kMaxWStateProcessors, "W-state election");
  const NetworkConfig config{n, rng.seed(), 1};
  const auto ids = all_processors(n);
  const auto layout = network::assign_registers(config, ids, {Role::R});

  const StateVector w = circuits::prepare_w_state(n);
  const auto outcome = qsim::measure_qubits(w, layout.qubits(Role::R), rng);
  const Multiset received = network::broadcast(outcome.bits);

  ElectionTranscript transcript{n, Algorithm::WState, rng.seed(), {}, {}};
  int leaders = 0;
  for (std::size_t slot = 0; slot < ids.size(); ++slot) {
    if (next_status(Status::Eligible, Branch::WState, outcome.bits[slot],
                    received) == Status::Eligible) {
      transcript.leader_index = layout.processors()[slot].processor;
      ++leaders;
    }
  }
  if (leaders != 1) {
    throw ProtocolViolation(
        fmt::format("W-state measurement {} produced {} leaders",
                    outcome.bit_string(), leaders));
  }
  transcript.rounds.push_back(
      RoundRecord{1, n, Branch::WState, std::nullopt, received.sorted(), 1, 0});
  return transcript;
}

ElectionTranscript run_tani_election(int n, Rng& rng,
                                     const ElectionOptions& options) {
  check_count(n, 1, kMaxTaniProcessors, "consistency-check election");
  const NetworkConfig config{n, rng.seed(), 2};
  ElectionTranscript transcript{n, Algorithm::Tani2, rng.seed(), {}, {}};

  std::vector<std::size_t> eligible = all_processors(n);
  while (eligible.size() > 1) {
    if (options.reverse_register_order) std::reverse(eligible.begin(), eligible.end());
    const int round_index = transcript.round_count() + 1;
    auto outcome = play_tani_round(config, eligible, round_index, rng);

    std::vector<std::size_t> survivors;
    for (std::size_t slot = 0; slot < eligible.size(); ++slot) {
      if (outcome.next[slot] == Status::Eligible) survivors.push_back(eligible[slot]);
    }
    std::sort(survivors.begin(), survivors.end());
    eligible = std::move(survivors);
    transcript.rounds.push_back(std::move(outcome.record));
  }
  transcript.leader_index = eligible.front();
  return transcript;
}

ElectionTranscript run_tournament(int n, Rng& rng) {
  check_count(n, 2, kMaxTournamentProcessors, "tournament");
  ElectionTranscript transcript{n, Algorithm::Tournament, rng.seed(), {}, {}};
  const NetworkConfig match_config{2, rng.seed(), 2};
  const std::vector<std::size_t> match_slots{0, 1};

  std::vector<std::size_t> alive = all_processors(n);
  while (alive.size() > 1) {
    // Random bracket each round; a fixed bracket would favour bye holders.
    for (std::size_t i = alive.size() - 1; i > 0; --i) {
      std::swap(alive[i], alive[rng.below(i + 1)]);
    }
    std::vector<std::size_t> advanced;
    std::vector<int> values;
    for (std::size_t i = 0; i + 1 < alive.size(); i += 2) {
      const auto match = play_tani_round(match_config, match_slots, 1, rng);
      for (int side = 0; side < 2; ++side) {
        const bool wins = match.next[side] == Status::Eligible;
        values.push_back(wins ? 1 : 0);
        if (wins) advanced.push_back(alive[i + side]);
      }
    }
    int byes = 0;
    if (alive.size() % 2 == 1) {
      advanced.push_back(alive.back());
      values.push_back(1);
      byes = 1;
    }
    std::sort(values.begin(), values.end());
    std::sort(advanced.begin(), advanced.end());
    transcript.rounds.push_back(RoundRecord{transcript.round_count() + 1,
                                            static_cast<int>(alive.size()),
                                            Branch::Tournament, std::nullopt,
                                            std::move(values),
                                            static_cast<int>(advanced.size()), byes});
    alive = std::move(advanced);
  }
  transcript.leader_index = alive.front();
  return transcript;
}

}  // namespace qle::election
