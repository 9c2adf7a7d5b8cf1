#include "qle/network.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace qle::network {

using qsim::ContractError;

void NetworkConfig::validate() const {
  if (n < 1) throw ContractError(fmt::format("network needs n >= 1, got {}", n));
  if (qubits_per_processor < 1 || qubits_per_processor > 3) {
    throw ContractError(fmt::format("qubits_per_processor must be 1..3, got {}",
                                    qubits_per_processor));
  }
  if (static_cast<long long>(n) * qubits_per_processor > qsim::kMaxQubits) {
    throw qsim::CapacityError(
        fmt::format("{} processors x {} qubits exceeds capacity {}", n,
                    qubits_per_processor, qsim::kMaxQubits));
  }
}

RegisterLayout::RegisterLayout(std::vector<ProcessorRegisters> processors,
                               std::vector<Role> roles)
    : processors_(std::move(processors)), roles_(std::move(roles)) {}

int RegisterLayout::num_qubits() const {
  return num_processors() * static_cast<int>(roles_.size());
}

qsim::QubitList RegisterLayout::qubits(Role role) const {
  qsim::QubitList out;
  out.reserve(processors_.size());
  for (const auto& p : processors_) {
    const auto& slot = role == Role::R ? p.r : role == Role::S ? p.s : p.t;
    if (!slot) throw ContractError("role not present in register layout");
    out.push_back(*slot);
  }
  return out;
}

std::vector<qsim::QubitList> RegisterLayout::pairs(Role high, Role low) const {
  const auto highs = qubits(high);
  const auto lows = qubits(low);
  std::vector<qsim::QubitList> out;
  out.reserve(highs.size());
  for (std::size_t i = 0; i < highs.size(); ++i) out.push_back({highs[i], lows[i]});
  return out;
}

RegisterLayout assign_registers(const NetworkConfig& config,
                                std::span<const std::size_t> eligible,
                                const std::vector<Role>& roles) {
  if (roles.empty()) throw ContractError("no register roles requested");
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (std::find(roles.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  roles.end(), roles[i]) != roles.end()) {
      throw ContractError("register role requested twice");
    }
  }
  NetworkConfig round_config = config;
  round_config.qubits_per_processor = static_cast<int>(roles.size());
  round_config.validate();
  if (eligible.empty() || eligible.size() > static_cast<std::size_t>(config.n)) {
    throw ContractError(fmt::format("{} eligible processors in a network of {}",
                                    eligible.size(), config.n));
  }
  const int k = static_cast<int>(eligible.size());
  std::vector<ProcessorRegisters> processors;
  processors.reserve(eligible.size());
  for (int slot = 0; slot < k; ++slot) {
    ProcessorRegisters regs{eligible[slot], {}, {}, {}};
    for (std::size_t block = 0; block < roles.size(); ++block) {
      const int index = static_cast<int>(block) * k + slot;
      switch (roles[block]) {
        case Role::R: regs.r = index; break;
        case Role::S: regs.s = index; break;
        case Role::T: regs.t = index; break;
      }
    }
    processors.push_back(regs);
  }
  return RegisterLayout(std::move(processors), roles);
}

Multiset::Multiset(std::span<const int> values) : size_(values.size()) {
  for (int v : values) ++counts_[v];
}

std::size_t Multiset::count(int value) const {
  const auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

int Multiset::max() const {
  if (counts_.empty()) throw ContractError("max of an empty multiset");
  return counts_.rbegin()->first;
}

std::vector<int> Multiset::sorted() const {
  std::vector<int> out;
  out.reserve(size_);
  for (const auto& [value, count] : counts_) out.insert(out.end(), count, value);
  return out;
}

const Multiset& BroadcastChannel::broadcast(std::span<const int> values) {
  log_.push_back({static_cast<int>(log_.size()) + 1, Multiset(values)});
  return log_.back().payload;
}

Multiset broadcast(std::span<const int> values) { return Multiset(values); }

std::size_t count_at_max(const Multiset& payload) {
  return payload.count(payload.max());
}

}  // namespace qle::network
