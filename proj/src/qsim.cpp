#include "qle/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

namespace qle::qsim {
namespace {

int log2_exact(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) return -1;
  return std::countr_zero(n);
}

void check_capacity(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw CapacityError(fmt::format("{} qubits requested, capacity is {}",
                                    num_qubits, kMaxQubits));
  }
}

void check_targets(int num_qubits, const QubitList& targets) {
  if (targets.empty()) throw ContractError("target list is empty");
  std::uint64_t seen = 0;
  for (int t : targets) {
    if (t < 0 || t >= num_qubits) {
      throw ContractError(
          fmt::format("target qubit {} out of range [0, {})", t, num_qubits));
    }
    const std::uint64_t bit = std::uint64_t{1} << t;
    if (seen & bit) {
      throw ContractError(fmt::format("duplicate target qubit {}", t));
    }
    seen |= bit;
  }
}

// Index masks for each target, targets[0] mapped to the high bit of a local
// (sub-register) index.
struct TargetMasks {
  std::vector<std::uint64_t> per_target;
  std::vector<std::uint64_t> local_offsets;  // size 2^m
  std::uint64_t all = 0;
};

TargetMasks make_masks(int num_qubits, const QubitList& targets) {
  TargetMasks masks;
  const int m = static_cast<int>(targets.size());
  masks.per_target.reserve(m);
  for (int t : targets) {
    const std::uint64_t bit = std::uint64_t{1} << bit_position(num_qubits, t);
    masks.per_target.push_back(bit);
    masks.all |= bit;
  }
  masks.local_offsets.assign(std::size_t{1} << m, 0);
  for (std::size_t local = 0; local < masks.local_offsets.size(); ++local) {
    std::uint64_t offset = 0;
    for (int j = 0; j < m; ++j) {
      if ((local >> (m - 1 - j)) & 1U) offset |= masks.per_target[j];
    }
    masks.local_offsets[local] = offset;
  }
  return masks;
}

std::uint64_t extract_local(std::uint64_t index, const TargetMasks& masks) {
  const auto m = masks.per_target.size();
  std::uint64_t value = 0;
  for (std::size_t j = 0; j < m; ++j) {
    value = (value << 1) | ((index & masks.per_target[j]) ? 1U : 0U);
  }
  return value;
}

double squared_norm(std::span<const Complex> amplitudes) {
  double total = 0.0;
  for (const Complex& a : amplitudes) total += std::norm(a);
  return total;
}

}  // namespace

// ---------------------------------------------------------------- StateVector

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  check_capacity(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) {
    throw ContractError(fmt::format("basis index {} out of range for {} qubits",
                                    index, num_qubits));
  }
  std::vector<Complex> amplitudes(dim);
  amplitudes[index] = 1.0;
  return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const int num_qubits = log2_exact(amplitudes.size());
  if (num_qubits < 0) {
    throw ContractError(fmt::format("amplitude count {} is not a power of two",
                                    amplitudes.size()));
  }
  check_capacity(num_qubits);
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (std::abs(norm - 1.0) > kTolerance) {
    throw ContractError(fmt::format("state norm {} is not 1", norm));
  }
  return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (norm == 0.0) throw ContractError("cannot normalize the zero vector");
  for (Complex& a : amplitudes) a /= norm;
  return from_amplitudes(std::move(amplitudes));
}

Complex StateVector::amplitude(std::uint64_t index) const {
  if (index >= amplitudes_.size()) {
    throw ContractError(fmt::format("basis index {} out of range", index));
  }
  return amplitudes_[index];
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

// -------------------------------------------------------------- ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim_ * dim_) {
    throw ContractError(fmt::format("{} entries given for a {}x{} matrix",
                                    entries_.size(), dim_, dim_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  std::vector<Complex> entries(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) entries[i * dim + i] = 1.0;
  return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_, std::vector<Complex>(entries_.size()));
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw ContractError("matrix dimension mismatch");
  ComplexMatrix out(dim_, std::vector<Complex>(entries_.size()));
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double ComplexMatrix::unitarity_deviation() const {
  const ComplexMatrix product = adjoint() * *this;
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex expected = r == c ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(product(r, c) - expected));
    }
  }
  return worst;
}

// -------------------------------------------------------------- UnitaryMatrix

UnitaryMatrix UnitaryMatrix::checked(ComplexMatrix matrix) {
  const int num_qubits = log2_exact(matrix.dim());
  if (num_qubits < 0) {
    throw ContractError(
        fmt::format("matrix dimension {} is not a power of two", matrix.dim()));
  }
  const double deviation = matrix.unitarity_deviation();
  if (!(deviation <= kTolerance)) {
    throw ContractError(
        fmt::format("matrix is not unitary (deviation {:.3e})", deviation));
  }
  return UnitaryMatrix(std::move(matrix), num_qubits);
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(matrix_.adjoint(), num_qubits_);
}

// ----------------------------------------------------------- BasisPermutation

BasisPermutation::BasisPermutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  num_qubits_ = log2_exact(images_.size());
  if (num_qubits_ < 0) {
    throw ContractError(fmt::format(
        "permutation size {} is not a power of two", images_.size()));
  }
  check_capacity(num_qubits_);
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::uint32_t image = images_[i];
    if (image >= images_.size()) {
      throw ContractError(fmt::format("image {} of {} out of range", image, i));
    }
    if (hit[image]) {
      throw ContractError(
          fmt::format("not a bijection: index {} is hit twice", image));
    }
    hit[image] = true;
  }
}

BasisPermutation BasisPermutation::identity(int num_qubits) {
  check_capacity(num_qubits);
  std::vector<std::uint32_t> images(std::size_t{1} << num_qubits);
  std::iota(images.begin(), images.end(), 0U);
  return BasisPermutation(std::move(images));
}

BasisPermutation BasisPermutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return BasisPermutation(std::move(inv));
}

BasisPermutation BasisPermutation::then(const BasisPermutation& other) const {
  if (other.size() != size()) throw ContractError("permutation size mismatch");
  std::vector<std::uint32_t> composed(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    composed[i] = other.images_[images_[i]];
  }
  return BasisPermutation(std::move(composed));
}

bool BasisPermutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

// --------------------------------------------------------- MeasurementOutcome

std::uint64_t MeasurementOutcome::value() const {
  std::uint64_t v = 0;
  for (int b : bits) v = (v << 1) | static_cast<std::uint64_t>(b);
  return v;
}

std::string MeasurementOutcome::bit_string() const {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// ----------------------------------------------------------------- operations

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const int num_qubits = a.num_qubits() + b.num_qubits();
  check_capacity(num_qubits);
  std::vector<Complex> out(a.dimension() * b.dimension());
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  for (std::size_t x = 0; x < av.size(); ++x) {
    if (av[x] == Complex{}) continue;
    for (std::size_t y = 0; y < bv.size(); ++y) {
      out[x * bv.size() + y] = av[x] * bv[y];
    }
  }
  return StateVector::from_amplitudes(std::move(out));
}

std::vector<Complex> transform_amplitudes(std::span<const Complex> amplitudes,
                                          int num_qubits,
                                          const ComplexMatrix& matrix,
                                          const QubitList& targets) {
  check_targets(num_qubits, targets);
  const std::size_t local_dim = std::size_t{1} << targets.size();
  if (matrix.dim() != local_dim) {
    throw ContractError(
        fmt::format("matrix of dimension {} cannot act on {} qubits",
                    matrix.dim(), targets.size()));
  }
  const TargetMasks masks = make_masks(num_qubits, targets);
  std::vector<Complex> out(amplitudes.begin(), amplitudes.end());
  std::vector<Complex> gathered(local_dim);
  for (std::uint64_t base = 0; base < amplitudes.size(); ++base) {
    if (base & masks.all) continue;
    for (std::size_t c = 0; c < local_dim; ++c) {
      gathered[c] = amplitudes[base | masks.local_offsets[c]];
    }
    for (std::size_t r = 0; r < local_dim; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < local_dim; ++c) acc += matrix(r, c) * gathered[c];
      out[base | masks.local_offsets[r]] = acc;
    }
  }
  return out;
}

StateVector apply_unitary(const StateVector& state, const UnitaryMatrix& u,
                          const QubitList& targets) {
  auto out = transform_amplitudes(state.amplitudes(), state.num_qubits(),
                                  u.matrix(), targets);
  return StateVector::from_amplitudes(std::move(out));
}

StateVector apply_basis_permutation(const StateVector& state,
                                    const BasisPermutation& perm) {
  if (perm.size() != state.dimension()) {
    throw ContractError(
        fmt::format("permutation on {} qubits applied to a {}-qubit state",
                    perm.num_qubits(), state.num_qubits()));
  }
  const auto in = state.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[perm(i)] = in[i];
  return StateVector::from_amplitudes(std::move(out));
}

std::vector<double> marginal_probabilities(const StateVector& state,
                                           const QubitList& targets) {
  check_targets(state.num_qubits(), targets);
  const TargetMasks masks = make_masks(state.num_qubits(), targets);
  std::vector<double> probabilities(std::size_t{1} << targets.size(), 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p != 0.0) probabilities[extract_local(i, masks)] += p;
  }
  return probabilities;
}

MeasurementOutcome measure_qubits(const StateVector& state,
                                  const QubitList& targets, Rng& rng) {
  const std::vector<double> probabilities =
      marginal_probabilities(state, targets);

  const double draw = rng.uniform();
  std::uint64_t chosen = probabilities.size();
  std::uint64_t last_possible = 0;
  double cumulative = 0.0;
  for (std::uint64_t v = 0; v < probabilities.size(); ++v) {
    if (probabilities[v] <= 0.0) continue;
    last_possible = v;
    cumulative += probabilities[v];
    if (draw < cumulative) {
      chosen = v;
      break;
    }
  }
  // Rounding can leave the cumulative sum a hair below 1.
  if (chosen == probabilities.size()) chosen = last_possible;

  const TargetMasks masks = make_masks(state.num_qubits(), targets);
  const auto amps = state.amplitudes();
  std::vector<Complex> post(amps.size());
  double kept = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (extract_local(i, masks) == chosen) {
      post[i] = amps[i];
      kept += std::norm(amps[i]);
    }
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (Complex& a : post) a *= scale;

  MeasurementOutcome outcome{{}, StateVector::from_amplitudes(std::move(post))};
  const int m = static_cast<int>(targets.size());
  outcome.bits.reserve(m);
  for (int j = 0; j < m; ++j) {
    outcome.bits.push_back(static_cast<int>((chosen >> (m - 1 - j)) & 1U));
  }
  return outcome;
}

StateVector discard_qubits(const StateVector& state, const QubitList& targets) {
  check_targets(state.num_qubits(), targets);
  const TargetMasks masks = make_masks(state.num_qubits(), targets);
  const auto amps = state.amplitudes();

  std::uint64_t fixed = 0;
  bool found = false;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (amps[i] == Complex{}) continue;
    const std::uint64_t bits = i & masks.all;
    if (!found) {
      fixed = bits;
      found = true;
    } else if (bits != fixed) {
      throw ContractError("discarded qubits are not in a definite basis state");
    }
  }

  const int kept_qubits = state.num_qubits() - static_cast<int>(targets.size());
  std::vector<int> kept_positions;  // bit positions, high to low
  for (int q = 0; q < state.num_qubits(); ++q) {
    if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
      kept_positions.push_back(bit_position(state.num_qubits(), q));
    }
  }
  std::vector<Complex> out(std::size_t{1} << kept_qubits);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & masks.all) != fixed) continue;
    std::uint64_t reduced = 0;
    for (int pos : kept_positions) reduced = (reduced << 1) | ((i >> pos) & 1U);
    out[reduced] = amps[i];
  }
  return StateVector::from_amplitudes(std::move(out));
}

double probability_of_basis_state(const StateVector& state,
                                  std::uint64_t index) {
  return std::norm(state.amplitude(index));
}

double expectation_z(const StateVector& state, int qubit) {
  check_targets(state.num_qubits(), {qubit});
  const std::uint64_t mask = std::uint64_t{1}
                             << bit_position(state.num_qubits(), qubit);
  const auto amps = state.amplitudes();
  double total = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    total += (i & mask) ? -p : p;
  }
  return total;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw ContractError("inner product of states with different qubit counts");
  }
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  Complex total{};
  for (std::size_t i = 0; i < av.size(); ++i) total += std::conj(av[i]) * bv[i];
  return total;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

}  // namespace qle::qsim
