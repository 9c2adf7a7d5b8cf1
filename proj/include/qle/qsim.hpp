#pragma once

/**
 * @file
 * Dense statevector simulator.
 *
 * Qubit 0 is the most significant bit of a basis index, so a register
 * |q0 q1 ... q_{m-1}> reads left to right as its index in binary. Every
 * operation returns a new state and leaves its inputs untouched.
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qle/rng.hpp"

namespace qle::qsim {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;
inline constexpr double kTolerance = 1e-10;

/// Requested register exceeds kMaxQubits.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using QubitList = std::vector<int>;

/// Normalized amplitude vector over num_qubits qubits.
class StateVector {
 public:
  /// Computational basis state |index> on num_qubits qubits.
  static StateVector basis(int num_qubits, std::uint64_t index);

  /// Takes ownership of amplitudes; length must be a power of two and the
  /// norm must be 1 within kTolerance.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  /// Like from_amplitudes but rescales to unit norm first. The input must
  /// have nonzero norm.
  static StateVector normalized(std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex amplitude(std::uint64_t index) const;

  /// Euclidean norm of the amplitude vector.
  double norm() const;

 private:
  StateVector(int num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Dense row-major complex square matrix. No structural guarantees.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  /// max_{ij} |(M^dagger M - I)_{ij}|
  double unitarity_deviation() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// A ComplexMatrix whose dimension is a power of two and whose unitarity
/// deviation is at most kTolerance. Only constructible through checked().
class UnitaryMatrix {
 public:
  /// Throws ContractError if the matrix is not a power-of-two-sized unitary.
  static UnitaryMatrix checked(ComplexMatrix matrix);

  std::size_t dim() const { return matrix_.dim(); }
  int num_qubits() const { return num_qubits_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(row, col);
  }
  const ComplexMatrix& matrix() const { return matrix_; }
  UnitaryMatrix adjoint() const;

 private:
  UnitaryMatrix(ComplexMatrix m, int num_qubits)
      : matrix_(std::move(m)), num_qubits_(num_qubits) {}

  ComplexMatrix matrix_;
  int num_qubits_;
};

/// Bijection on the basis indices [0, 2^num_qubits).
class BasisPermutation {
 public:
  /// images[i] is where basis state i is sent. Throws ContractError on a
  /// duplicate or out-of-range image, or a non power-of-two size.
  explicit BasisPermutation(std::vector<std::uint32_t> images);

  static BasisPermutation identity(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::uint64_t index) const { return images_[index]; }
  std::span<const std::uint32_t> images() const { return images_; }

  BasisPermutation inverse() const;
  /// (this then other): index -> other(this(index)).
  BasisPermutation then(const BasisPermutation& other) const;
  bool is_identity() const;

  friend bool operator==(const BasisPermutation&,
                         const BasisPermutation&) = default;

 private:
  int num_qubits_ = 0;
  std::vector<std::uint32_t> images_;
};

struct MeasurementOutcome {
  /// One bit per measured qubit, in the order the targets were given.
  std::vector<int> bits;
  StateVector post_state;

  /// bits read as an integer with the first target as the high bit.
  std::uint64_t value() const;
  std::string bit_string() const;
};

/// |a> (x) |b>; a's qubits come first.
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// Applies u to the ordered targets (targets[0] is the high bit of u's
/// index), identity on every other qubit.
StateVector apply_unitary(const StateVector& state, const UnitaryMatrix& u,
                          const QubitList& targets);

/// Same kernel as apply_unitary for an arbitrary matrix. The result is not
/// renormalized, so it is returned as raw amplitudes.
std::vector<Complex> transform_amplitudes(std::span<const Complex> amplitudes,
                                          int num_qubits,
                                          const ComplexMatrix& matrix,
                                          const QubitList& targets);

/// Amplitude of index i moves to perm(i).
StateVector apply_basis_permutation(const StateVector& state,
                                    const BasisPermutation& perm);

/// Exact distribution of the targets' joint outcome, indexed by the value
/// the outcome bits form (targets[0] high).
std::vector<double> marginal_probabilities(const StateVector& state,
                                           const QubitList& targets);

/// Collapsing measurement of all targets with a single uniform draw against
/// the cumulative marginal distribution.
MeasurementOutcome measure_qubits(const StateVector& state,
                                  const QubitList& targets, Rng& rng);

/// Removes qubits that are in a definite basis value (e.g. just measured).
/// Throws ContractError if any target is still in superposition.
StateVector discard_qubits(const StateVector& state, const QubitList& targets);

double probability_of_basis_state(const StateVector& state,
                                  std::uint64_t index);

/// <Z> on one qubit, with |0> -> +1 and |1> -> -1.
double expectation_z(const StateVector& state, int qubit);

Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2; equals 1 when the states agree up to global phase.
double fidelity(const StateVector& a, const StateVector& b);

/// Bit position (from the least significant end) of a qubit in an index.
constexpr int bit_position(int num_qubits, int qubit) {
  return num_qubits - 1 - qubit;
}

}  // namespace qle::qsim
