#ifndef BICA_VOCAB_HPP_
#define BICA_VOCAB_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bica {

// Human vocabulary: directions, counts, landmarks, macros.
enum class HumanToken : int {
  kN = 0, kE, kS, kW,
  kOne, kTwo, kThree, kFour,
  kJ, kD,
  kTurnA, kAlign,
};
inline constexpr int kHumanVocabSize = 12;

enum class TokenCategory { kDirection, kCount, kLandmark, kMacro };

// AI vocabulary: requests and proposals.
enum class AiToken : int {
  kReqDir = 0, kReqDist, kReqLandmark, kPropFwd, kPropTurnL, kPropTurnR, kAck, kHelp,
};
inline constexpr int kAiVocabSize = 8;

inline constexpr int kMaxMessageTokens = 2;

enum class Side { kHuman, kAi };

struct Message {
  Side side = Side::kHuman;
  std::vector<int> tokens;

  int token_count() const { return static_cast<int>(tokens.size()); }
  bool empty() const { return tokens.empty(); }
  bool operator==(const Message&) const = default;
};

std::string_view human_token_name(int token);
std::string_view ai_token_name(int token);
std::optional<int> parse_human_token(std::string_view name);
std::optional<int> parse_ai_token(std::string_view name);

TokenCategory human_token_category(int token);
// Tokens of a category in vocabulary order.
std::vector<int> human_tokens_in(TokenCategory category);
std::string_view category_name(TokenCategory category);

// Directions are stored as headings 0..3 (N, E, S, W).
inline int direction_token(int heading) { return heading; }
inline int count_token(int count) { return static_cast<int>(HumanToken::kOne) + count - 1; }
inline int count_value(int token) { return token - static_cast<int>(HumanToken::kOne) + 1; }

bool valid_message(const Message& m);
std::vector<std::string> token_names(const Message& m);
std::string message_text(const Message& m);

}  // namespace bica

#endif  // BICA_VOCAB_HPP_
