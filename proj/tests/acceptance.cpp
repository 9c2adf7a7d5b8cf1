// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "qle/baseline.hpp"
#include "qle/circuits.hpp"
#include "qle/election.hpp"
#include "qle/metrics.hpp"
#include "qle/runner.hpp"

using namespace qle;
using qsim::Complex;
using qsim::StateVector;

namespace {

constexpr double kAmplitudeTol = 1e-10;
constexpr double kUnitarityTol = 1e-10;
constexpr double kFidelityTol = 1e-10;
constexpr double kProbabilityTol = 1e-10;
constexpr double kConsensusTol = 1e-9;
constexpr double kStandardErrors = 4.0;
constexpr double kClassicalMeanRelTol = 0.10;
constexpr double kTaniRuntimeLimitSeconds = 120.0;

struct Verdict {
  bool passed;
  std::string detail;
};

StateVector apply_each(StateVector s, const qsim::UnitaryMatrix& u,
                       const std::vector<qsim::QubitList>& sites) {
  for (const auto& site : sites) s = qsim::apply_unitary(s, u, site);
  return s;
}

Verdict even_zero_amplitude() {
  double worst = 0.0;
  for (int k = 2; k <= 12; k += 2) {
    std::vector<qsim::QubitList> sites;
    for (int q = 0; q < k; ++q) sites.push_back({q});
    const auto u = circuits::build_even_symmetry_breaker(circuits::PhaseParams::for_count(k));
    const auto out = apply_each(circuits::prepare_ghz_state(k), u, sites);
    worst = std::max({worst, std::abs(out.amplitude(0)),
                      std::abs(out.amplitude((std::uint64_t{1} << k) - 1))});
  }
  return {worst < kAmplitudeTol, fmt::format("k=2..12 even, max |amp| = {:.2e}", worst)};
}

Verdict odd_zero_amplitude() {
  double worst = 0.0;
  for (int k = 3; k <= 9; k += 2) {
    std::vector<qsim::QubitList> pairs;
    for (int p = 0; p < k; ++p) pairs.push_back({p, k + p});
    auto s = qsim::tensor_product(circuits::prepare_ghz_state(k), StateVector::basis(k, 0));
    s = apply_each(s, circuits::cnot(), pairs);
    s = apply_each(s, circuits::build_odd_symmetry_breaker(circuits::PhaseParams::for_count(k)),
                   pairs);
    const std::uint64_t ones = (std::uint64_t{1} << k) - 1;
    for (int r = 0; r < 2; ++r) {
      for (int t = 0; t < 2; ++t) {
        const std::uint64_t index = ((r ? ones : 0) << k) | (t ? ones : 0);
        worst = std::max(worst, std::abs(s.amplitude(index)));
      }
    }
  }
  return {worst < kAmplitudeTol,
          fmt::format("k=3..9 odd, 4 patterns each, max |amp| = {:.2e}", worst)};
}

Verdict unitarity() {
  double worst = 0.0;
  for (int k = 2; k <= 12; k += 2) {
    worst = std::max(worst, circuits::even_symmetry_breaker_entries(k).unitarity_deviation());
  }
  for (int k = 3; k <= 9; k += 2) {
    worst = std::max(worst, circuits::odd_symmetry_breaker_entries(k).unitarity_deviation());
  }
  return {worst <= kUnitarityTol, fmt::format("max |M^dag M - I| = {:.2e}", worst)};
}

Verdict two_party_identity() {
  const auto u = circuits::build_even_symmetry_breaker(circuits::PhaseParams::for_count(2));
  const auto out = apply_each(circuits::prepare_ghz_state(2), u, {{0}, {1}});
  const double h = std::numbers::sqrt2 / 2;
  const auto expected = StateVector::from_amplitudes({0.0, Complex{0, -h}, Complex{0, -h}, 0.0});
  const double f = qsim::fidelity(out, expected);
  return {f >= 1.0 - kFidelityTol, fmt::format("fidelity = {:.15f}", f)};
}

Verdict deterministic_termination() {
  const auto start = std::chrono::steady_clock::now();
  int violations = 0;
  int worst_rounds = 0;
  for (int n = 2; n <= 8; ++n) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Rng rng(derive_trial_seed(static_cast<std::uint64_t>(n), i));
      const auto t = election::run_tani_election(n, rng);
      if (!t.leader_index || t.round_count() > n - 1) ++violations;
      worst_rounds = std::max(worst_rounds, t.round_count() - (n - 1));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {violations == 0 && seconds < kTaniRuntimeLimitSeconds,
          fmt::format("7000 trials, {} violations, {:.2f}s", violations, seconds)};
}

Verdict one_shot_w_state() {
  int violations = 0;
  for (int n = 2; n <= 8; ++n) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Rng rng(derive_trial_seed(static_cast<std::uint64_t>(n), i));
      const auto t = election::run_w_state_election(n, rng);
      if (!t.leader_index || t.round_count() != 1) ++violations;
    }
  }
  std::vector<std::size_t> histogram(6, 0);
  for (std::uint64_t i = 0; i < 6000; ++i) {
    Rng rng(derive_trial_seed(66, i));
    ++histogram[*election::run_w_state_election(6, rng).leader_index];
  }
  const auto z = metrics::uniformity_z_scores(histogram);
  const double worst_z = *std::max_element(z.begin(), z.end());
  return {violations == 0 && worst_z <= kStandardErrors,
          fmt::format("{} violations; n=6 histogram max z = {:.2f}", violations, worst_z)};
}

Verdict consistency_probability() {
  double worst = 0.0;
  for (int k = 2; k <= 8; ++k) {
    const auto state = qsim::apply_basis_permutation(
        qsim::tensor_product(circuits::prepare_uniform_register(k), StateVector::basis(k, 0)),
        circuits::consistency_oracle(k));
    qsim::QubitList s_qubits;
    for (int q = k; q < 2 * k; ++q) s_qubits.push_back(q);
    const double p_one = qsim::marginal_probabilities(state, s_qubits).back();
    worst = std::max(worst, std::abs(p_one - std::pow(2.0, 1 - k)));
  }
  return {worst < kProbabilityTol, fmt::format("k=2..8, max error = {:.2e}", worst)};
}

Verdict classical_contrast() {
  const std::size_t trials = 100'000;
  std::uint64_t total = 0;
  int classical_max = 0;
  int quantum_max = 0;
  int quantum_min = 1 << 30;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng c(derive_trial_seed(1, i));
    const auto t = baseline::run_classical_election(2, c);
    total += static_cast<std::uint64_t>(t.round_count());
    classical_max = std::max(classical_max, t.round_count());
    Rng q(derive_trial_seed(2, i));
    const int rounds = election::run_tani_election(2, q).round_count();
    quantum_max = std::max(quantum_max, rounds);
    quantum_min = std::min(quantum_min, rounds);
  }
  const double mean = static_cast<double>(total) / trials;
  const bool ok = classical_max > 10 && std::abs(mean - 2.0) <= kClassicalMeanRelTol * 2.0 &&
                  quantum_max == 1 && quantum_min == 1;
  return {ok, fmt::format("classical max={} mean={:.4f}; quantum rounds in [{}, {}]",
                          classical_max, mean, quantum_min, quantum_max)};
}

Verdict sigma_consensus() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    ok &= metrics::sigma_z_consensus(circuits::prepare_w_state(n), kConsensusTol).consensus;
    ok &= metrics::sigma_z_consensus(circuits::prepare_ghz_state(n), kConsensusTol).consensus;
  }
  const auto split = metrics::sigma_z_consensus(StateVector::basis(2, 0b01), kConsensusTol);
  ok &= !split.consensus && split.max_difference == 2.0;
  return {ok, fmt::format("W_n, GHZ_n (n<=6) agree; |01> difference = {}", split.max_difference)};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict reproducibility() {
  const auto dir = std::filesystem::temp_directory_path() / "qle_acceptance";
  std::filesystem::create_directories(dir);
  bool ok = true;
  std::size_t bytes = 0;
  for (const char* algorithm : {"w-state", "tani2", "classical", "tournament"}) {
    std::string outputs[2];
    for (int pass = 0; pass < 2; ++pass) {
      const auto trace = (dir / fmt::format("{}-{}.jsonl", algorithm, pass)).string();
      const auto summary = (dir / fmt::format("{}-{}.csv", algorithm, pass)).string();
      const char* argv[] = {"qle",     "run",   "--algorithm", algorithm,      "--n",
                            "6",       "--trials", "500",      "--seed",       "42",
                            "--trace", trace.c_str(), "--summary", summary.c_str()};
      std::ostringstream out;
      std::ostringstream err;
      ok &= cli::run_cli(static_cast<int>(std::size(argv)), argv, out, err) == cli::kSuccess;
      outputs[pass] = slurp(trace) + '\x1f' + slurp(summary);
    }
    ok &= outputs[0] == outputs[1] && !outputs[0].empty();
    bytes += outputs[0].size();
  }
  return {ok, fmt::format("4 algorithms, {} bytes compared", bytes)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1 zero-amplitude symmetry breaking (even k)", even_zero_amplitude},
      {"AC2 zero-amplitude symmetry breaking (odd k)", odd_zero_amplitude},
      {"AC3 unitarity of U and completed V_k", unitarity},
      {"AC4 two-party identity -i(|01>+|10>)/sqrt2", two_party_identity},
      {"AC5 deterministic termination of the consistency-check election", deterministic_termination},
      {"AC6 one-shot W-state election", one_shot_w_state},
      {"AC7 consistency probability 2^(1-k)", consistency_probability},
      {"AC8 classical contrast", classical_contrast},
      {"AC9 sigma-expectation consensus", sigma_consensus},
      {"AC10 reproducibility", reproducibility},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v{false, ""};
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, fmt::format("exception: {}", e.what())};
    }
    failures += v.passed ? 0 : 1;
    std::cout << (v.passed ? "PASS " : "FAIL ") << name << " -- " << v.detail << '\n';
  }
  std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
