#ifndef BICA_INTERVENTION_HPP_
#define BICA_INTERVENTION_HPP_

#include <string>

namespace bica {

enum class InterventionKind { kNone, kProtocolHint, kStrategyHint };
enum class StrategyHint : int { kFollowDirection = 0, kTrustCount = 1, kRequestMore = 2 };

inline constexpr int kNumStrategyHints = 3;

// Payload indices: protocol hints first (one per message class), then strategy hints.
struct Intervention {
  InterventionKind kind = InterventionKind::kNone;
  int payload = -1;

  bool active() const { return kind != InterventionKind::kNone; }
  bool operator==(const Intervention&) const = default;
};

}  // namespace bica

#endif  // BICA_INTERVENTION_HPP_
