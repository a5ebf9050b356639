#ifndef BICA_AGENTS_HPP_
#define BICA_AGENTS_HPP_

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "bica/alignment.hpp"
#include "bica/config.hpp"
#include "bica/gridworld.hpp"
#include "bica/instructor.hpp"
#include "bica/neural.hpp"
#include "bica/protocol.hpp"
#include "bica/surrogate_human.hpp"

namespace bica {

inline constexpr int kAiFeatureDim = 9 * 4 + 4 + 1;

nn::Vec ai_features(const grid::EgoView& view);
nn::RecurrentNetSpec ai_net_spec(const ModelConfig& m);

// Every trainable piece plus the shared protocol table.
struct Components {
  nn::RecurrentNet ai;
  nn::RecurrentNet human;
  human::ProtocolTable table;
  protocol::ProtocolGenerator generator;
  align::Mapper mapper;
  instr::Instructor instructor;
  double tau = 1.0;
};

Components make_components(const Config& c, Rng& rng);

struct RolloutOptions {
  human::SurrogateConfig surrogate;
  bool generator_enabled = true;
  bool instructor_enabled = true;
  bool compute_latents = true;
  bool ood = false;
  bool greedy_ai = false;
  bool human_silent = false;  // solo AI: the human never speaks
  nn::Vec logit_perturbation;  // added to the generator's code logits when non-empty
};

RolloutOptions rollout_options(const Config& c, bool ood);

struct StepRecord {
  int t = 0;
  grid::Cell pos;
  grid::Heading heading = grid::Heading::kN;

  // human side
  nn::NetInput human_input;
  int human_action = 0;
  double human_logp = 0.0;
  double human_value = 0.0;
  nn::Vec human_probs;
  int template_index = -1;
  human::ContextKey context;
  Message human_msg;
  bool live_human = false;

  // AI side
  nn::NetInput ai_input;
  int ai_action = 0;
  double ai_logp = 0.0;
  double ai_value = 0.0;
  nn::Vec ai_probs;

  // protocol generator
  bool generated = false;
  nn::Vec ctx;
  nn::Vec gumbel;
  int code_index = -1;
  nn::Vec msg_probs;
  int ai_token = -1;
  Message ai_msg;

  // instructor
  bool instructed = false;
  nn::Vec instr_input;
  double gate_prob = 0.0;
  int payload = -1;
  Intervention intervention;

  // environment
  grid::StepEvents events;
  double reward = 0.0;
  int tokens = 0;
  bool done = false;

  nn::Vec z_h, z_a, z_m;  // z_m = T(z_h)
};

struct Episode {
  uint64_t map_seed = 0;
  grid::MapInstance map;
  std::vector<StepRecord> steps;
  bool success = false;
  bool timeout = false;
  int collisions = 0;
  int human_tokens = 0;
  int ai_tokens = 0;
  double ret = 0.0;
  int interventions = 0;
  std::vector<human::TableUpdate> table_updates;
  std::string error;

  int length() const { return static_cast<int>(steps.size()); }
};

// Steps one episode; the service drives it with live human messages.
class EpisodeRunner {
 public:
  EpisodeRunner(const Components& comp, const RolloutOptions& opts, grid::MapInstance map, uint64_t rng_seed);

  bool done() const { return state_.done; }
  const grid::MapState& state() const { return state_; }
  const Episode& episode() const { return ep_; }
  const human::ProtocolTable& table() const { return human_.table; }
  const Message& last_ai_message() const { return last_ai_msg_; }
  const Intervention& last_intervention() const { return last_u_; }

  // A supplied message replaces the surrogate's (live-human mode).
  const StepRecord& step(const std::optional<Message>& human_msg = std::nullopt);
  Episode take() { return std::move(ep_); }

 private:
  const Components& comp_;
  RolloutOptions opts_;
  Rng rng_;
  grid::MapState state_;
  human::HumanState human_;
  nn::Vec h_ai_;
  nn::Vec h_map_;
  Message last_ai_msg_;
  Intervention last_u_;
  std::deque<protocol::WindowStep> window_;
  bool last_collision_ = false;
  int steps_since_u_ = 0;
  int last_human_class_ = -1;
  Episode ep_;
};

struct EpisodeSpec {
  grid::MapInstance map;
  uint64_t map_seed = 0;
  uint64_t rng_seed = 0;
};

std::vector<EpisodeSpec> training_specs(const grid::EnvParams& env, uint64_t seed, int epoch, int n);
// Evaluation maps depend only on the map seed, so every mode sees the same set.
std::vector<EpisodeSpec> eval_specs(const grid::EnvParams& env, uint64_t map_seed, int n, uint64_t policy_seed);

std::vector<Episode> collect_rollouts(const Components& comp, const RolloutOptions& opts,
                                      const std::vector<EpisodeSpec>& specs);
std::vector<Episode> collect_rollouts_serial(const Components& comp, const RolloutOptions& opts,
                                             const std::vector<EpisodeSpec>& specs);

}  // namespace bica

#endif  // BICA_AGENTS_HPP_
