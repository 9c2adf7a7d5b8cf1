#pragma once

// Analytic identity checks behind `qle verify`: unitarity of the symmetry
// breakers, zero amplitude on every consistent string after symmetry
// breaking, the odd-k sign cancellation, and the oracle involution.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qle/qsim.hpp"

namespace qle::verification {

inline constexpr int kMaxVerifyK = 12;

struct IdentityResult {
  std::string name;
  bool passed;
  /// Measured deviation (0 is exact).
  double deviation;
  double tolerance;
};

struct VerificationReport {
  std::vector<IdentityResult> results;

  bool all_passed() const;
  std::vector<std::string> failures() const;
};

/// Where the verifier gets its matrices. Swapping one out is how negative
/// controls inject a corrupted breaker.
struct BreakerSource {
  std::function<qsim::ComplexMatrix(int)> even;
  std::function<qsim::ComplexMatrix(int)> odd;

  static BreakerSource standard();
  /// Even breaker with the sign of its lower-left entry flipped.
  static BreakerSource with_even_sign_flip();
};

struct KSelection {
  std::vector<int> even;
  std::vector<int> odd;
};

/// Without a range: even k in [2, 12] and odd k in [3, 9]. With [lo, hi]:
/// every k in the range, split by parity. Throws qsim::ContractError for
/// lo > hi or lo < 2 and qsim::CapacityError for hi > kMaxVerifyK.
KSelection select_k(std::optional<std::pair<int, int>> range);

/// Parses "lo..hi" (or a single "k"). Returns nullopt on malformed input.
std::optional<std::pair<int, int>> parse_k_range(const std::string& text);

VerificationReport verify_identities(const KSelection& ks,
                                     const BreakerSource& source = BreakerSource::standard());

}  // namespace qle::verification
