#include "qle/verification.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <fmt/core.h>

#include "qle/circuits.hpp"

namespace qle::verification {

using qsim::Complex;
using qsim::ComplexMatrix;

namespace {

IdentityResult check(std::string name, double deviation, double tolerance) {
  // NaN deviations fail.
  return {std::move(name), deviation <= tolerance, deviation, tolerance};
}

// Amplitudes of matrix^{(x) sites} applied to the given state, without
// requiring the matrix to be unitary.
std::vector<Complex> apply_to_sites(const qsim::StateVector& state,
                                    const ComplexMatrix& matrix,
                                    const std::vector<qsim::QubitList>& sites) {
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (const auto& site : sites) {
    amps = qsim::transform_amplitudes(amps, state.num_qubits(), matrix, site);
  }
  return amps;
}

void verify_even(int k, const BreakerSource& source, VerificationReport& report) {
  const ComplexMatrix u = source.even(k);
  report.results.push_back(check(fmt::format("unitarity[U,k={}]", k),
                                 u.unitarity_deviation(), qsim::kTolerance));

  std::vector<qsim::QubitList> sites;
  for (int q = 0; q < k; ++q) sites.push_back({q});
  const auto amps = apply_to_sites(circuits::prepare_ghz_state(k), u, sites);
  const std::uint64_t ones = (std::uint64_t{1} << k) - 1;
  report.results.push_back(check(fmt::format("zero_amplitude[U,k={},|0^k>]", k),
                                 std::abs(amps[0]), qsim::kTolerance));
  report.results.push_back(check(fmt::format("zero_amplitude[U,k={},|1^k>]", k),
                                 std::abs(amps[ones]), qsim::kTolerance));
}

void verify_odd(int k, const BreakerSource& source, VerificationReport& report) {
  const ComplexMatrix v = source.odd(k);
  report.results.push_back(check(fmt::format("unitarity[V,k={}]", k),
                                 v.unitarity_deviation(), qsim::kTolerance));

  // R on [0, k), T on [k, 2k); CNOT-initialize T from a GHZ R register.
  std::vector<qsim::QubitList> pairs;
  for (int p = 0; p < k; ++p) pairs.push_back({p, k + p});
  const auto start = qsim::tensor_product(circuits::prepare_ghz_state(k),
                                          qsim::StateVector::basis(k, 0));
  const auto initialized = apply_to_sites(start, circuits::cnot().matrix(), pairs);
  const auto amps = apply_to_sites(qsim::StateVector::normalized(initialized), v, pairs);

  const std::uint64_t ones = (std::uint64_t{1} << k) - 1;
  static constexpr const char* kPatterns[4] = {"|00>^k", "|01>^k", "|10>^k", "|11>^k"};
  for (int pattern = 0; pattern < 4; ++pattern) {
    const std::uint64_t r_bits = (pattern & 2) ? ones : 0;
    const std::uint64_t t_bits = (pattern & 1) ? ones : 0;
    const std::uint64_t index = (r_bits << k) | t_bits;
    report.results.push_back(
        check(fmt::format("zero_amplitude[V,k={},{}]", k, kPatterns[pattern]),
              std::abs(amps[index]), qsim::kTolerance));
  }

  const auto params = circuits::PhaseParams::for_count(k);
  const double expected = std::sqrt(params.real) / std::sqrt(params.real + 1.0);
  const double deviation = std::max(std::abs(v(2, 0) - Complex{expected}),
                                    std::abs(v(2, 3) - Complex{-expected}));
  report.results.push_back(
      check(fmt::format("sign_cancellation[V,k={}]", k), deviation, 1e-12));
}

void verify_oracle(int k, VerificationReport& report) {
  const auto oracle = circuits::consistency_oracle(k);
  const bool involution = oracle.then(oracle).is_identity();
  report.results.push_back(
      check(fmt::format("oracle_involution[k={}]", k), involution ? 0.0 : 1.0, 0.0));
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const IdentityResult& r) { return r.passed; });
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> names;
  for (const auto& r : results) {
    if (!r.passed) names.push_back(r.name);
  }
  return names;
}

BreakerSource BreakerSource::standard() {
  return {circuits::even_symmetry_breaker_entries, circuits::odd_symmetry_breaker_entries};
}

BreakerSource BreakerSource::with_even_sign_flip() {
  BreakerSource source = standard();
  source.even = [](int k) {
    ComplexMatrix u = circuits::even_symmetry_breaker_entries(k);
    u(1, 0) = -u(1, 0);
    return u;
  };
  return source;
}

KSelection select_k(std::optional<std::pair<int, int>> range) {
  KSelection ks;
  if (!range) {
    for (int k = 2; k <= 12; k += 2) ks.even.push_back(k);
    for (int k = 3; k <= 9; k += 2) ks.odd.push_back(k);
    return ks;
  }
  const auto [lo, hi] = *range;
  if (lo < 2 || lo > hi) {
    throw qsim::ContractError(fmt::format("invalid k range {}..{}", lo, hi));
  }
  if (hi > kMaxVerifyK) {
    throw qsim::CapacityError(
        fmt::format("k range {}..{} exceeds capacity (k <= {})", lo, hi, kMaxVerifyK));
  }
  for (int k = lo; k <= hi; ++k) (k % 2 == 0 ? ks.even : ks.odd).push_back(k);
  return ks;
}

std::optional<std::pair<int, int>> parse_k_range(const std::string& text) {
  auto parse_int = [](std::string_view s) -> std::optional<int> {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
  };
  const std::string_view view(text);
  const auto dots = view.find("..");
  if (dots == std::string_view::npos) {
    const auto k = parse_int(view);
    if (!k) return std::nullopt;
    return std::pair{*k, *k};
  }
  const auto lo = parse_int(view.substr(0, dots));
  const auto hi = parse_int(view.substr(dots + 2));
  if (!lo || !hi) return std::nullopt;
  return std::pair{*lo, *hi};
}

VerificationReport verify_identities(const KSelection& ks, const BreakerSource& source) {
  VerificationReport report;
  for (int k : ks.even) verify_even(k, source, report);
  for (int k : ks.odd) verify_odd(k, source, report);
  std::vector<int> all = ks.even;
  all.insert(all.end(), ks.odd.begin(), ks.odd.end());
  std::sort(all.begin(), all.end());
  for (int k : all) verify_oracle(k, report);
  return report;
}

}  // namespace qle::verification
