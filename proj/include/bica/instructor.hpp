#ifndef BICA_INSTRUCTOR_HPP_
#define BICA_INSTRUCTOR_HPP_

#include <span>
#include <string>
#include <vector>

#include "bica/intervention.hpp"
#include "bica/neural.hpp"
#include "bica/rng.hpp"
#include "bica/surrogate_human.hpp"

namespace bica::instr {

// Episode history the instructor conditions on.
struct History {
  int collisions = 0;
  int steps_since_intervention = 0;
  double delta_r = 0.0;
  double ai_entropy = 0.0;
  int last_ai_token = human::kNoAiMessage;
  int last_human_class = -1;  // -1: human held
};

inline constexpr int kHistoryDim = 4 + (kAiVocabSize + 1) + (human::kNumMessageClasses + 1);
inline constexpr int kInstructorInputDim = human::kHumanFeatureDim + kHistoryDim;

nn::Vec history_vector(const History& h);

struct InstructorSpec {
  int hidden = 32;
  double threshold = 0.5;
};

struct Decision {
  Intervention intervention;
  double gate_prob = 0.0;
  nn::Vec payload_probs;
  nn::Vec input;
};

// Trunk with a sigmoid gate and a categorical payload head.
class Instructor {
 public:
  Instructor() = default;
  explicit Instructor(const InstructorSpec& spec);

  const InstructorSpec& spec() const { return spec_; }

  // out(0) is the gate logit, out(1..) the payload logits.
  nn::Vec forward(const nn::Vec& input, nn::Mlp::Cache* cache = nullptr) const { return net_.forward(input, cache); }
  void backward(const nn::Mlp::Cache& cache, const nn::Vec& d_out, nn::Grad& g) const { net_.backward(cache, d_out, g); }

  nn::ParamSet& params() { return net_.params(); }
  const nn::ParamSet& params() const { return net_.params(); }

 private:
  InstructorSpec spec_;
  nn::MlpNet net_;
};

// Intervenes iff sigma(gate) > threshold (strict); payload sampled from the payload head.
Decision intervene(const Instructor& instructor, const nn::Vec& state_feats, const History& history, Rng& rng);

Intervention make_intervention(int payload);
std::string intervention_name(const Intervention& u);

// Fraction of steps carrying an intervention.
double teach_loss(std::span<const Intervention> interventions);

}  // namespace bica::instr

#endif  // BICA_INSTRUCTOR_HPP_
