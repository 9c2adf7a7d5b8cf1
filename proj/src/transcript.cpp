#include "qle/transcript.hpp"

namespace qle {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::WState: return "w-state";
    case Algorithm::Tani2: return "tani2";
    case Algorithm::Classical: return "classical";
    case Algorithm::Tournament: return "tournament";
  }
  return "unknown";
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::Inconsistent: return "inconsistent";
    case Branch::ConsistentEven: return "consistent_even";
    case Branch::ConsistentOdd: return "consistent_odd";
    case Branch::Classical: return "classical";
    case Branch::WState: return "w_state";
    case Branch::Tournament: return "tournament";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::WState, Algorithm::Tani2, Algorithm::Classical,
                      Algorithm::Tournament}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

}  // namespace qle
