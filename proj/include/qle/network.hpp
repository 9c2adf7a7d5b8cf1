#pragma once

// Simulated anonymous network. All entanglement lives in one global
// StateVector; handing a qubit to a processor means assigning it an index.
// Classical coordination goes over a synchronous broadcast channel that
// delivers an unordered multiset of values with no sender information.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qle/qsim.hpp"

namespace qle::network {

struct NetworkConfig {
  int n;
  std::uint64_t seed;
  int qubits_per_processor;

  /// Throws qsim::ContractError for n < 1 or a per-processor count outside
  /// [1, 3], and qsim::CapacityError when n * qubits_per_processor > 24.
  void validate() const;
};

enum class Role { R, S, T };

/// Global-register indices held by one eligible processor for one round.
struct ProcessorRegisters {
  std::size_t processor;  // simulation bookkeeping only
  std::optional<int> r;
  std::optional<int> s;
  std::optional<int> t;
};

/// Register assignment for one round. Role blocks are contiguous in the
/// order the roles were requested: with roles {R, S} and k processors, R
/// occupies [0, k) and S occupies [k, 2k); the p-th eligible processor
/// gets slot p in each block.
class RegisterLayout {
 public:
  RegisterLayout(std::vector<ProcessorRegisters> processors,
                 std::vector<Role> roles);

  int num_qubits() const;
  int num_processors() const { return static_cast<int>(processors_.size()); }
  std::span<const ProcessorRegisters> processors() const { return processors_; }
  const std::vector<Role>& roles() const { return roles_; }

  /// Indices of one role across all processors, in slot order.
  qsim::QubitList qubits(Role role) const;

  /// (R_i, T_i) pairs for applying a two-qubit local unitary.
  std::vector<qsim::QubitList> pairs(Role high, Role low) const;

 private:
  std::vector<ProcessorRegisters> processors_;
  std::vector<Role> roles_;
};

/// Assigns registers to the eligible processors, in the order given.
RegisterLayout assign_registers(const NetworkConfig& config,
                                std::span<const std::size_t> eligible,
                                const std::vector<Role>& roles);

/// Unordered collection of broadcast values: value -> multiplicity.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::span<const int> values);

  std::size_t size() const { return size_; }
  std::size_t count(int value) const;
  std::size_t distinct() const { return counts_.size(); }
  /// Throws qsim::ContractError when empty.
  int max() const;
  /// Values in ascending order, repeated by multiplicity.
  std::vector<int> sorted() const;
  const std::map<int, std::size_t>& counts() const { return counts_; }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<int, std::size_t> counts_;
  std::size_t size_ = 0;
};

struct BroadcastRound {
  int round_index;
  Multiset payload;
};

/// Reliable, synchronous, anonymizing broadcast. Every eligible processor
/// receives the same multiset; the channel keeps a log of delivered rounds.
class BroadcastChannel {
 public:
  const Multiset& broadcast(std::span<const int> values);

  std::span<const BroadcastRound> log() const { return log_; }

 private:
  std::vector<BroadcastRound> log_;
};

/// Pure broadcast: the multiset every eligible processor receives.
Multiset broadcast(std::span<const int> values);

/// Number of contributions equal to the multiset maximum; the surviving
/// count under the largest-value rule.
std::size_t count_at_max(const Multiset& payload);

}  // namespace qle::network
