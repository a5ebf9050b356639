#ifndef BICA_SURROGATE_HUMAN_HPP_
#define BICA_SURROGATE_HUMAN_HPP_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/gridworld.hpp"
#include "bica/intervention.hpp"
#include "bica/neural.hpp"
#include "bica/rng.hpp"
#include "bica/vocab.hpp"

namespace bica::human {

// Message classes the default protocol table distributes over.
enum class MessageClass : int {
  kGoalDirCount = 0,  // straight-line direction of the goal + clipped distance on that axis
  kPathDirCount,      // first shortest-path direction + straight run length
  kPathDir,
  kRelativeMacro,     // ALIGN / TURN-A / path direction relative to the AI heading
  kLandmarkDir,       // J (detour) or D (direct) + path direction
  kSilent,
};
inline constexpr int kNumMessageClasses = 6;
inline constexpr int kNumPayloads = kNumMessageClasses + kNumStrategyHints;
inline constexpr int kNoAiMessage = kAiVocabSize;  // context slot for "no AI message yet"

const char* message_class_name(MessageClass c);

enum class SlotKind { kNone, kLiteral, kGoalDir, kGoalCount, kPathDir, kPathRun, kRelativeMacro, kLandmark };

struct Slot {
  SlotKind kind = SlotKind::kNone;
  int token = -1;  // only for kLiteral
  bool operator==(const Slot&) const = default;
};

struct MessageTemplate {
  std::string name;
  std::array<Slot, 2> slots{};
  bool operator==(const MessageTemplate&) const = default;
};

std::vector<MessageTemplate> default_catalog();
MessageTemplate literal_template(const Message& m);

// Everything the human can read off the full map that messages are grounded in.
struct ViewFacts {
  grid::Heading heading = grid::Heading::kN;
  grid::Heading goal_dir = grid::Heading::kN;
  int goal_count = 1;
  grid::Heading path_dir = grid::Heading::kN;
  int path_run = 1;
  int path_distance = 0;
  int manhattan = 0;
  int dr = 0, dc = 0;
  bool facing_blocked = false;
};

ViewFacts view_facts(const grid::FullView& view);
Message ground(const MessageTemplate& t, const ViewFacts& facts);

inline constexpr int kHumanFeatureDim = 17;
nn::Vec human_features(const grid::FullView& view, const ViewFacts& facts);

struct ContextKey {
  int dist_bucket = 0;  // 0: near (<=2), 1: mid (<=5), 2: far
  int quadrant = 0;     // 0: NE, 1: NW, 2: SE, 3: SW (relative goal position)
  int last_ai = kNoAiMessage;

  auto operator<=>(const ContextKey&) const = default;
  std::string str() const;
  static std::optional<ContextKey> parse(const std::string& s);
};

ContextKey context_key(const ViewFacts& facts, int last_ai_token);

class ProtocolTable {
 public:
  ProtocolTable() : catalog_(default_catalog()) {}
  explicit ProtocolTable(std::vector<MessageTemplate> catalog, int default_index = 0)
      : catalog_(std::move(catalog)), default_index_(default_index) {}

  const std::vector<MessageTemplate>& catalog() const { return catalog_; }
  int default_index() const { return default_index_; }
  int version() const { return version_; }
  void set_version(int v) { version_ = v; }
  const std::map<ContextKey, std::vector<double>>& entries() const { return entries_; }

  // Missing entries read as a point mass on the default hint.
  std::vector<double> distribution(const ContextKey& key) const;
  bool has_entry(const ContextKey& key) const { return entries_.count(key) != 0; }
  void set_entry(const ContextKey& key, std::vector<double> dist);
  // entry <- normalize(entry + alpha * onehot(target)); bumps the version.
  void shift_toward(const ContextKey& key, int target, double alpha);

  bool operator==(const ProtocolTable&) const = default;

 private:
  std::vector<MessageTemplate> catalog_;
  int default_index_ = 0;
  std::map<ContextKey, std::vector<double>> entries_;
  int version_ = 0;
};

nlohmann::ordered_json table_to_json(const ProtocolTable& t);
ProtocolTable table_from_json(const nlohmann::json& j);

struct SurrogateConfig {
  double p_update = 0.1;
  double epsilon = 0.05;
  double delta = 0.05;
  double epsilon_ood = 0.1;
  double alpha = 0.3;
  bool greedy = false;  // argmax speak gate and table entry instead of sampling

  bool operator==(const SurrogateConfig&) const = default;

  static SurrogateConfig fixed() { return {0.0, 0.0, 0.0, 0.1, 0.3, true}; }
};

enum class NoiseMode { kNominal, kShiftedUnguided };

inline NoiseMode noise_mode_for(bool ood, bool instructor_active) {
  return (ood && !instructor_active) ? NoiseMode::kShiftedUnguided : NoiseMode::kNominal;
}

struct HumanState {
  nn::Vec hidden;
  ProtocolTable table;
  NoiseMode noise_mode = NoiseMode::kNominal;
};

// Human action head: hold (no-op, silent) or speak the table's message.
enum class HumanAction : int { kHold = 0, kSpeak = 1 };
inline constexpr int kNumHumanActions = 2;
inline constexpr int kSurrogateHidden = 32;

nn::RecurrentNetSpec surrogate_net_spec(int hidden = kSurrogateHidden);

struct NoiseReport {
  int flippable = 0;
  int flipped = 0;
  int counts = 0;
  int drifted = 0;
};

Message apply_noise(const Message& msg, const SurrogateConfig& cfg, NoiseMode mode, Rng& rng,
                    NoiseReport* report = nullptr);

struct SurrogateStep {
  Message message;
  HumanAction action = HumanAction::kHold;
  nn::Vec action_probs;
  double log_prob = 0.0;
  double value = 0.0;
  int template_index = -1;
  ContextKey context;
  nn::NetInput input;
  NoiseReport noise;
};

// Advances state.hidden in place and samples the human message.
SurrogateStep surrogate_act(HumanState& state, const nn::RecurrentNet& net, const grid::FullView& view,
                            const ViewFacts& facts, const Message& ai_msg, const Intervention& intervention,
                            const SurrogateConfig& cfg, Rng& rng);

int suggested_class(int ai_token);
int suggested_class(const Intervention& intervention);

enum class TriggerSource { kAiMessage, kInstructor };

struct TableUpdate {
  ContextKey key;
  int target = 0;
  TriggerSource source = TriggerSource::kAiMessage;
  double mass_before = 0.0;
  double mass_after = 0.0;
};

// With probability p_update shifts the triggered entry toward `target`.
std::optional<TableUpdate> update_protocol_table(HumanState& state, const ContextKey& key, int target,
                                                 TriggerSource source, const SurrogateConfig& cfg, Rng& rng);

// Re-applies logged updates (deterministic, no randomness).
void replay_updates(ProtocolTable& table, const std::vector<TableUpdate>& updates, double alpha);

}  // namespace bica::human

#endif  // BICA_SURROGATE_HUMAN_HPP_
