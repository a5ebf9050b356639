#ifndef BICA_TRAINER_HPP_
#define BICA_TRAINER_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/agents.hpp"
#include "bica/alignment.hpp"
#include "bica/config.hpp"
#include "bica/neural.hpp"

namespace bica::train {

// Generalized advantage estimation over one episode; the last step bootstraps from zero.
void compute_gae(std::span<const double> rewards, std::span<const double> values, double gamma, double lambda,
                 std::vector<double>& adv, std::vector<double>& ret);

// One recurrent sequence as seen by PPO.
struct SeqData {
  std::vector<nn::NetInput> inputs;
  std::vector<int> actions;
  std::vector<double> old_logp;
  std::vector<double> adv;
  std::vector<double> ret;
  std::vector<char> mask;  // 0 excludes a step from the loss but still advances the hidden state
};

struct KlHinge {
  double lambda = 0.0;
  double tau = 0.05;
  bool enabled = false;
};

struct PpoTerms {
  double policy = 0.0;
  double value = 0.0;
  double entropy = 0.0;
  double kl = 0.0;  // mean KL to the prior over masked steps
  double penalty = 0.0;
  double total = 0.0;
  double clip_fraction = 0.0;
  int steps = 0;
};

// Clipped-surrogate loss + value + entropy bonus + lambda * [KL - tau]_+ over a minibatch of sequences.
// When grad is non-null the gradient of `total` w.r.t. net parameters is accumulated into it.
PpoTerms ppo_minibatch(const nn::RecurrentNet& net, const nn::RecurrentNet* prior,
                       std::span<const SeqData* const> batch, const PpoConfig& cfg, const KlHinge& hinge,
                       nn::Grad* grad);

inline double kl_budget_penalty(double kl_hat, double tau, double lambda) {
  return lambda * std::max(0.0, kl_hat - tau);
}

struct BudgetState {
  double lambda_a = 0.0;
  double lambda_h = 0.0;
  double tau_a = 0.05;
  double tau_h = 0.05;
  double eta = 0.1;
  double kl_hat_a = 0.0;
  double kl_hat_h = 0.0;
};

// lambda <- max(0, lambda + eta * g) for both sides; update_h = false freezes lambda_H.
BudgetState dual_update(const BudgetState& b, double g_a, double g_h, bool update_h = true);

// Mean over every step of exact KL(policy(.|s) || prior(.|s)).
double estimate_kl(const nn::RecurrentNet& policy, const nn::RecurrentNet& prior, std::span<const SeqData> seqs);

struct LossParts {
  double task = 0.0;
  double kl_a = 0.0;
  double kl_h = 0.0;
  double ib = 0.0;
  double rep = 0.0;
  double teach = 0.0;
};

struct LossBreakdown {
  double task = 0.0;
  double kl_pen_a = 0.0;
  double kl_pen_h = 0.0;
  double ib = 0.0;
  double rep = 0.0;
  double teach = 0.0;
  double total = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double kappa = 0.0;
};

LossBreakdown composite_loss(const LossParts& parts, const BudgetState& budget, double beta, double mu, double kappa);

nlohmann::ordered_json breakdown_json(const LossBreakdown& b);

std::vector<SeqData> ai_sequences(const std::vector<Episode>& batch, const PpoConfig& cfg);
std::vector<SeqData> human_sequences(const std::vector<Episode>& batch, const PpoConfig& cfg);

struct EpochRecord {
  int epoch = 0;
  std::string phase;  // "pretrain" or "train"
  double success_rate = 0.0;
  double avg_steps = 0.0;
  double avg_return = 0.0;
  double tokens_per_episode = 0.0;
  double human_tokens_per_episode = 0.0;
  double intervention_rate = 0.0;
  double speak_rate = 0.0;
  LossBreakdown loss;
  BudgetState budget;
  double tau = 0.0;
  int table_version = 0;
  int table_updates = 0;
  align::AlignmentDiagnostics alignment;
  nlohmann::ordered_json json() const;
};

struct TrainResult {
  Components comp;
  nn::RecurrentNet ai_prior;
  nn::RecurrentNet human_prior;
  BudgetState budget;
  std::vector<EpochRecord> log;
  std::vector<Episode> final_batch;
};

struct TrainHooks {
  // Called after every sub-update with its stage name.
  std::function<void(const std::string& stage, int epoch, const Components& comp)> on_stage;
  std::function<void(const EpochRecord& rec)> on_epoch;
};

TrainResult train(const Config& cfg, uint64_t seed, const TrainHooks& hooks = {});

// Component update steps, exposed for tests and benchmarks.
struct Optimizers {
  nn::AdamState ai, human, generator, decoder, mapper_h, mapper_a, mapper_t, instructor;
};

PpoTerms update_policy(nn::RecurrentNet& net, const nn::RecurrentNet* prior, const std::vector<SeqData>& seqs,
                       const PpoConfig& cfg, const KlHinge& hinge, double lr, nn::AdamState& opt, uint64_t shuffle_seed);
double update_generator(Components& comp, const std::vector<Episode>& batch, const std::vector<SeqData>& ai_seqs,
                        const Config& cfg, Optimizers& opt);
align::RepLossParts update_mapper(Components& comp, const std::vector<Episode>& batch, const Config& cfg,
                                  Optimizers& opt, int epoch, double* hsic = nullptr);
double update_instructor(Components& comp, const std::vector<Episode>& batch, const std::vector<SeqData>& ai_seqs,
                         const Config& cfg, Optimizers& opt);

// Latent batch drawn from whole episodes, at most max_steps rows.
align::LatentBatch latent_batch(const Components& comp, const std::vector<Episode>& batch, int max_steps, int offset);

}  // namespace bica::train

#endif  // BICA_TRAINER_HPP_
