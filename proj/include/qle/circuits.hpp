#pragma once

// Protocol states and unitaries: W states, uniform registers, the
// consistency oracle, and the symmetry breakers for even and odd candidate
// counts.

#include "qle/qsim.hpp"

namespace qle::circuits {

using qsim::BasisPermutation;
using qsim::ComplexMatrix;
using qsim::StateVector;
using qsim::UnitaryMatrix;

/// Real and imaginary parts of e^{i pi / k} for the current eligible count.
struct PhaseParams {
  int k;
  double real;  // cos(pi / k)
  double imag;  // sin(pi / k)

  /// Throws qsim::ContractError for k < 2.
  static PhaseParams for_count(int k);

  qsim::Complex phase() const { return {real, imag}; }
};

/// (|10...0> + ... + |0...01>) / sqrt(n)
StateVector prepare_w_state(int n);

/// ((|0> + |1>) / sqrt(2))^{(x) k}
StateVector prepare_uniform_register(int k);

/// (|0^k> + |1^k>) / sqrt(2)
StateVector prepare_ghz_state(int k);

/// True when every bit of the k-bit string x is equal.
constexpr bool is_consistent(std::uint64_t x, int k) {
  const std::uint64_t all_ones = (std::uint64_t{1} << k) - 1;
  return x == 0 || x == all_ones;
}

/// Permutation on 2k qubits laid out as |x>|s> (x on qubits [0, k), s on
/// [k, 2k)) mapping |x>|s> to |x>|s xor C(x)^k>, where C(x) = 1 iff x is
/// consistent. The map is an involution.
BasisPermutation consistency_oracle(int k);

/// Entries of (1/sqrt 2) [[1, e^{-i pi/k}], [-e^{i pi/k}, 1]] without any
/// checks. Exposed for verification tooling.
ComplexMatrix even_symmetry_breaker_entries(int k);

/// Entries of the odd-k 4x4 breaker acting on a (R, T) pair, R the high bit.
/// Columns 0 and 3 are the printed protocol columns, column 1 is |11>, and
/// column 2 is completed by Gram-Schmidt against the other three.
ComplexMatrix odd_symmetry_breaker_entries(int k);

/// Throws qsim::ContractError for odd k.
UnitaryMatrix build_even_symmetry_breaker(const PhaseParams& params);

/// Throws qsim::ContractError for even k (or k < 3).
UnitaryMatrix build_odd_symmetry_breaker(const PhaseParams& params);

/// Controlled NOT with control as the high qubit of the pair.
UnitaryMatrix cnot();

}  // namespace qle::circuits
