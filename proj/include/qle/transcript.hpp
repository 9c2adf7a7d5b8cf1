#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qle {

enum class Algorithm { WState, Tani2, Classical, Tournament };

/// Which path a round took. The quantum consistency-check rounds use the
/// first three; the other algorithms tag their rounds with their own kind.
enum class Branch {
  Inconsistent,
  ConsistentEven,
  ConsistentOdd,
  Classical,
  WState,
  Tournament,
};

enum class Status { Eligible, Ineligible };

std::string_view to_string(Algorithm algorithm);
std::string_view to_string(Branch branch);
/// Parses the CLI spelling ("w-state", "tani2", "classical", "tournament").
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct RoundRecord {
  int round_index = 0;
  int k_before = 0;
  Branch branch = Branch::Inconsistent;
  /// Agreed S measurement; absent for rounds without a consistency check.
  std::optional<int> s_bit;
  /// Per-processor broadcast values, ascending (a multiset).
  std::vector<int> measured_values;
  int k_after = 0;
  /// Tournament only: processors advanced without a match this round.
  int byes = 0;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct ElectionTranscript {
  int n = 0;
  Algorithm algorithm = Algorithm::Tani2;
  std::uint64_t seed = 0;
  std::vector<RoundRecord> rounds;
  /// Simulation-level bookkeeping; the processors themselves are anonymous.
  /// Empty only when a classical run exhausted its round budget.
  std::optional<std::size_t> leader_index;

  bool budget_exhausted() const { return !leader_index.has_value(); }
  int round_count() const { return static_cast<int>(rounds.size()); }

  friend bool operator==(const ElectionTranscript&,
                         const ElectionTranscript&) = default;
};

/// An internal protocol guarantee was breached (e.g. an empty survivor set).
/// Indicates a simulator bug, never a legitimate outcome.
class ProtocolViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qle
