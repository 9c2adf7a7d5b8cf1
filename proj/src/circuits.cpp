#include "qle/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

namespace qle::circuits {

using qsim::Complex;
using qsim::ContractError;

PhaseParams PhaseParams::for_count(int k) {
  if (k < 2) {
    throw ContractError(fmt::format("phase parameters need k >= 2, got {}", k));
  }
  const double angle = std::numbers::pi / k;
  return PhaseParams{k, std::cos(angle), std::sin(angle)};
}

StateVector prepare_w_state(int n) {
  if (n < 1) throw ContractError("W state needs at least one qubit");
  if (n > qsim::kMaxQubits) {
    throw qsim::CapacityError(fmt::format("W_{} exceeds capacity", n));
  }
  std::vector<Complex> amplitudes(std::size_t{1} << n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) amplitudes[std::size_t{1} << j] = a;
  return StateVector::from_amplitudes(std::move(amplitudes));
}

StateVector prepare_uniform_register(int k) {
  if (k < 1) throw ContractError("uniform register needs at least one qubit");
  if (k > qsim::kMaxQubits) {
    throw qsim::CapacityError(fmt::format("{}-qubit register exceeds capacity", k));
  }
  const std::size_t dim = std::size_t{1} << k;
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector::from_amplitudes(std::vector<Complex>(dim, a));
}

StateVector prepare_ghz_state(int k) {
  if (k < 1) throw ContractError("GHZ state needs at least one qubit");
  if (k > qsim::kMaxQubits) {
    throw qsim::CapacityError(fmt::format("GHZ_{} exceeds capacity", k));
  }
  std::vector<Complex> amplitudes(std::size_t{1} << k);
  amplitudes.front() = std::numbers::sqrt2 / 2;
  amplitudes.back() = std::numbers::sqrt2 / 2;
  return StateVector::from_amplitudes(std::move(amplitudes));
}

BasisPermutation consistency_oracle(int k) {
  if (k < 2) throw ContractError("consistency oracle needs k >= 2");
  if (2 * k > qsim::kMaxQubits) {
    throw qsim::CapacityError(
        fmt::format("consistency oracle on {} qubits exceeds capacity", 2 * k));
  }
  const std::uint32_t s_mask = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> images(std::size_t{1} << (2 * k));
  for (std::uint32_t i = 0; i < images.size(); ++i) {
    const std::uint32_t x = i >> k;
    images[i] = is_consistent(x, k) ? (i ^ s_mask) : i;
  }
  return BasisPermutation(std::move(images));
}

ComplexMatrix even_symmetry_breaker_entries(int k) {
  const PhaseParams p = PhaseParams::for_count(k);
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex phase = p.phase();
  return ComplexMatrix(2, {s, s * std::conj(phase),  //
                           -s * phase, s});
}

ComplexMatrix odd_symmetry_breaker_entries(int k) {
  const PhaseParams p = PhaseParams::for_count(k);
  const double scale = 1.0 / std::sqrt(p.real + 1.0);
  const double h = 1.0 / std::numbers::sqrt2;
  const double root_r = std::sqrt(p.real);
  const Complex phase = p.phase();

  ComplexMatrix v(4, std::vector<Complex>(16));
  const Complex col0[4] = {h, h, root_r, 0.0};
  const Complex col3[4] = {phase * h, std::conj(phase) * h, -root_r, 0.0};
  for (int r = 0; r < 4; ++r) {
    v(r, 0) = col0[r] * scale;
    v(r, 3) = col3[r] * scale;
  }
  v(3, 1) = 1.0;

  // Column 2: project |10> off the other three columns, normalize, then
  // rotate so the largest-magnitude entry is real and positive.
  Complex col2[4] = {0.0, 0.0, 1.0, 0.0};
  for (int other : {0, 1, 3}) {
    Complex overlap{};
    for (int r = 0; r < 4; ++r) overlap += std::conj(v(r, other)) * col2[r];
    for (int r = 0; r < 4; ++r) col2[r] -= overlap * v(r, other);
  }
  double norm = 0.0;
  for (const Complex& c : col2) norm += std::norm(c);
  norm = std::sqrt(norm);
  const auto* largest = std::max_element(
      std::begin(col2), std::end(col2),
      [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });
  const Complex unphase = std::conj(*largest) / std::abs(*largest);
  for (int r = 0; r < 4; ++r) v(r, 2) = col2[r] * unphase / norm;
  return v;
}

UnitaryMatrix build_even_symmetry_breaker(const PhaseParams& params) {
  if (params.k < 2 || params.k % 2 != 0) {
    throw ContractError(
        fmt::format("even symmetry breaker requested for k = {}", params.k));
  }
  return UnitaryMatrix::checked(even_symmetry_breaker_entries(params.k));
}

UnitaryMatrix build_odd_symmetry_breaker(const PhaseParams& params) {
  if (params.k < 3 || params.k % 2 == 0) {
    throw ContractError(
        fmt::format("odd symmetry breaker requested for k = {}", params.k));
  }
  return UnitaryMatrix::checked(odd_symmetry_breaker_entries(params.k));
}

UnitaryMatrix cnot() {
  return UnitaryMatrix::checked(ComplexMatrix(4, {1, 0, 0, 0,  //
                                                  0, 1, 0, 0,  //
                                                  0, 0, 0, 1,  //
                                                  0, 0, 1, 0}));
}

}  // namespace qle::circuits
