#ifndef BICA_CONFIG_HPP_
#define BICA_CONFIG_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/alignment.hpp"
#include "bica/gridworld.hpp"
#include "bica/protocol.hpp"
#include "bica/surrogate_human.hpp"

namespace bica {

inline constexpr int kSchemaVersion = 1;

enum class Mode { kBica, kBaseline };
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct ModelConfig {
  int ai_hidden = 64;
  int ai_enc = 64;
  int human_hidden = human::kSurrogateHidden;
  int embed_dim = 16;
  bool use_gru = true;
  int code_dim = 16;
  int generator_hidden = 32;
  int latent_dim = align::kLatentDim;
  int instructor_hidden = 32;
  bool linear_map = false;

  bool operator==(const ModelConfig&) const = default;
};

struct ObjectiveConfig {
  double beta = 1.0;
  double mu = 0.05;
  double kappa = 0.05;
  double tau_a = 0.05;
  double tau_h = 0.05;
  double eta_lambda = 0.1;
  double lambda_a_init = 0.0;
  double lambda_h_init = 0.0;
  align::RepTarget rep_target = align::RepTarget::kMappedSelf;

  bool operator==(const ObjectiveConfig&) const = default;
};

struct PpoConfig {
  double clip = 0.2;
  double gae_lambda = 0.95;
  double gamma = 0.99;
  double value_coef = 0.5;
  double entropy_coef = 0.01;
  int passes = 4;
  int minibatch_episodes = 8;
  double lr = 1e-3;
  double human_lr = 1e-3;
  double generator_lr = 1e-3;
  double mapper_lr = 1e-3;
  double instructor_lr = 1e-3;
  double grad_clip = 0.5;
  double reward_scale = 0.02;  // value targets and advantages use scaled rewards

  bool operator==(const PpoConfig&) const = default;
};

struct TrainingConfig {
  int epochs = 500;
  int pretrain_epochs = 50;
  int episodes_per_epoch = 32;
  int rep_batch_steps = 256;
  int log_every = 1;

  bool operator==(const TrainingConfig&) const = default;
};

struct EvalConfig {
  int id_episodes = 100;
  int ood_episodes = 100;
  uint64_t map_seed = 777;

  bool operator==(const EvalConfig&) const = default;
};

struct MetricsConfig {
  double lambda_ccm = 0.5;
  double bs_floor = 0.0;
  double bs_ceiling = 5.0;
  double rc_ceiling = 2.0;
  double ce_ceiling = 2.0;
  double collision_cap = 5.0;
  int mp_epochs = 100;
  int bs_directions = 5;
  double bs_target_kl = 0.02;
  double bs_tolerance = 0.005;
  int bs_episodes = 100;

  bool operator==(const MetricsConfig&) const = default;
};

struct Config {
  int schema_version = kSchemaVersion;
  std::string name;
  Mode mode = Mode::kBica;
  grid::EnvParams env;
  human::SurrogateConfig surrogate;
  ModelConfig model;
  protocol::AnnealSchedule anneal;
  ObjectiveConfig objective;
  PpoConfig ppo;
  TrainingConfig training;
  EvalConfig eval;
  MetricsConfig metrics;
  std::vector<uint64_t> seeds = {13, 42, 15213, 2025, 4096};

  bool operator==(const Config&) const = default;
};

nlohmann::ordered_json config_to_json(const Config& c);
Config config_from_json(const nlohmann::json& j);
std::string serialize_config(const Config& c);
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

// Applies BICA_<SECTION>__<KEY> environment variables to leaf values; returns the keys touched.
std::vector<std::string> apply_env_overrides(Config& c);
// Same as above but looks values up through `lookup` (tests use this).
std::vector<std::string> apply_overrides(Config& c, const std::function<std::optional<std::string>(const std::string&)>& lookup);

std::optional<std::vector<uint64_t>> seed_preset(const std::string& name);

// Configuration the trainer actually runs for a mode (baseline forces the fixed human).
human::SurrogateConfig surrogate_for_mode(const Config& c);

}  // namespace bica

#endif  // BICA_CONFIG_HPP_
