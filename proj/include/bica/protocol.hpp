#ifndef BICA_PROTOCOL_HPP_
#define BICA_PROTOCOL_HPP_

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/gridworld.hpp"
#include "bica/neural.hpp"
#include "bica/rng.hpp"
#include "bica/vocab.hpp"

namespace bica::protocol {

inline constexpr int kErrorWindow = 8;

struct TaskState {
  int dist_bucket = 0;  // same buckets as the surrogate's context key
  grid::Heading heading = grid::Heading::kN;
  bool last_collision = false;
};

// One step of the trailing window the generator conditions on.
struct WindowStep {
  double reward = 0.0;
  bool collided = false;
  bool timeout = false;
};

struct ProtocolContext {
  TaskState task;
  double policy_entropy = 0.0;
  int error_count = 0;
  double delta_r = 0.0;
};

inline constexpr int kContextDim = 3 + 4 + 1 + 3;

ProtocolContext build_context(const TaskState& task, std::span<const WindowStep> window, const nn::Vec& policy_probs);
nn::Vec context_vector(const ProtocolContext& ctx);

struct CodeSample {
  nn::Vec logits;
  nn::Vec gumbel;
  nn::Vec relaxed;
  nn::Vec hard;
  int index = 0;
  double tau = 1.0;
};

// relaxed = softmax((logits + g) / tau); hard = onehot(argmax relaxed).
CodeSample sample_code(const nn::Vec& logits, double tau, Rng& rng);
CodeSample sample_code_with_noise(const nn::Vec& logits, double tau, const nn::Vec& gumbel);
// Straight-through: gradient arriving at the hard code is routed through the relaxed sample.
nn::Vec code_backward(const CodeSample& code, const nn::Vec& d_code);

struct AnnealSchedule {
  double tau_start = 1.0;
  double tau_end = 0.5;
  double gamma = 0.999;
  bool operator==(const AnnealSchedule&) const = default;
};

double anneal(const AnnealSchedule& s, double tau);

struct GeneratorSpec {
  int context_dim = kContextDim;
  int hidden = 32;
  int code_dim = 16;
};

// G_psi (context -> code logits) with the decoder p_phi(m | c).
class ProtocolGenerator {
 public:
  ProtocolGenerator() = default;
  explicit ProtocolGenerator(const GeneratorSpec& spec);

  const GeneratorSpec& spec() const { return spec_; }
  int code_dim() const { return spec_.code_dim; }

  nn::Vec code_logits(const nn::Vec& ctx, nn::Mlp::Cache* cache = nullptr) const;
  nn::Vec decode(const nn::Vec& code) const;  // distribution over AI tokens

  // d_msg_logits is the gradient at the decoder's output logits.
  void backward(const nn::Mlp::Cache& gen_cache, const CodeSample& code, const nn::Vec& d_msg_logits,
                nn::Grad& g_gen, nn::Grad& g_dec) const;

  nn::ParamSet& generator_params() { return gen_.params(); }
  const nn::ParamSet& generator_params() const { return gen_.params(); }
  nn::ParamSet& decoder_params() { return dec_.params(); }
  const nn::ParamSet& decoder_params() const { return dec_.params(); }
  const nn::MlpNet& generator_net() const { return gen_; }
  const nn::MlpNet& decoder_net() const { return dec_; }

 private:
  GeneratorSpec spec_;
  nn::MlpNet gen_;
  nn::MlpNet dec_;
};

// Mean over the batch of KL(p(m|c) || p(m)), p(m) the batch marginal.
double ib_loss(const std::vector<nn::Vec>& conditionals);
// d ib_loss / d conditional_i, one vector per input.
std::vector<nn::Vec> ib_loss_grad(const std::vector<nn::Vec>& conditionals);

// Code index -> most likely token and empirical usage frequency.
nlohmann::ordered_json inspection_dump(const ProtocolGenerator& gen, std::span<const int> code_usage);

}  // namespace bica::protocol

#endif  // BICA_PROTOCOL_HPP_
