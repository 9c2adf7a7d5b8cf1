#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qle/baseline.hpp"
#include "qle/metrics.hpp"

using namespace qle;
using baseline::run_classical_election;

TEST_CASE("classical election basics") {
  Rng rng(1);
  const auto single = run_classical_election(1, rng);
  CHECK(single.round_count() == 0);
  CHECK(*single.leader_index == 0);

  CHECK_THROWS_AS(run_classical_election(0, rng), qsim::ContractError);
  CHECK_THROWS_AS(run_classical_election(2, rng, 0), qsim::ContractError);
}

TEST_CASE("classical rounds obey the heads rule") {
  for (int n = 2; n <= 8; ++n) {
    for (std::size_t i = 0; i < 1000; ++i) {
      Rng rng(derive_trial_seed(static_cast<std::uint64_t>(n), i));
      const auto t = run_classical_election(n, rng);
      REQUIRE(t.leader_index.has_value());
      int k = n;
      for (const auto& r : t.rounds) {
        REQUIRE(r.k_before == k);
        const auto heads = std::count(r.measured_values.begin(), r.measured_values.end(), 1);
        const bool mixed = heads > 0 && heads < r.k_before;
        REQUIRE(r.k_after == (heads > 0 ? heads : r.k_before));
        // k decreases exactly when the flips are mixed.
        REQUIRE((r.k_after < r.k_before) == mixed);
        k = r.k_after;
      }
      REQUIRE(k == 1);
    }
  }
}

TEST_CASE("n = 2 rounds are geometric with mean 2") {
  // HT and TH resolve, HH and TT waste the round: success probability 1/2.
  const std::size_t trials = 100'000;
  std::size_t total = 0;
  std::size_t resolved_first = 0;
  int longest = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(derive_trial_seed(1, i));
    const auto t = run_classical_election(2, rng);
    total += static_cast<std::size_t>(t.round_count());
    resolved_first += t.round_count() == 1 ? 1 : 0;
    longest = std::max(longest, t.round_count());
  }
  CHECK(testing::within_standard_errors(resolved_first, trials, 0.5));
  CHECK(static_cast<double>(total) / trials == doctest::Approx(2.0).epsilon(0.1));
  CHECK(longest > 10);
}

TEST_CASE("mean rounds grow with n and exceed the quantum bound on some trial") {
  const std::size_t trials = 10'000;
  double previous_mean = 0.0;
  for (int n : {2, 4, 8}) {
    std::size_t total = 0;
    int longest = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      Rng rng(derive_trial_seed(static_cast<std::uint64_t>(800 + n), i));
      const auto t = run_classical_election(n, rng);
      total += static_cast<std::size_t>(t.round_count());
      longest = std::max(longest, t.round_count());
    }
    const double mean = static_cast<double>(total) / trials;
    CHECK(mean > previous_mean);
    previous_mean = mean;
    if (n == 8) CHECK(longest > n - 1);
  }
}

TEST_CASE("budget exhaustion is reported, not thrown") {
  std::size_t exhausted = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(derive_trial_seed(42, i));
    const auto t = run_classical_election(8, rng, 1);
    CHECK(t.round_count() == 1);
    if (t.budget_exhausted()) {
      ++exhausted;
      CHECK(t.rounds.back().k_after > 1);
    }
  }
  CHECK(exhausted > 0);
}
