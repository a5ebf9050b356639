#ifndef BICA_METRICS_HPP_
#define BICA_METRICS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/agents.hpp"
#include "bica/config.hpp"

namespace bica::metrics {

// Affine min-max map onto [0, 1] with frozen anchors.
double normalize(double x, double floor, double ceiling);

struct TaskMetrics {
  double sr = 0.0;
  double avg_steps = 0.0;
  double avg_return = 0.0;
  double tokens_per_episode = 0.0;
  double collisions_per_episode = 0.0;
};

// Throws std::invalid_argument on an empty log.
TaskMetrics task_metrics(const std::vector<Episode>& episodes);

// Mutual predictability.
struct MpReport {
  double nll_h = 0.0;  // AI-side predictor of the human's message
  double nll_a = 0.0;  // human-side predictor of the AI's action
  double uniform_h = 0.0;
  double uniform_a = 0.0;
  double norm_h = 1.0;
  double norm_a = 1.0;
  double acc_early = 0.0;
  double acc_late = 0.0;
  int train_steps = 0;
  int test_steps = 0;
  double mp = 0.0;
};

inline constexpr int kHumanDecisionClasses = kHumanVocabSize + 1;  // first token, or silent

double mp_from_normalized(double norm_h, double norm_a);
MpReport mutual_predictability(const std::vector<Episode>& episodes, int epochs, uint64_t seed);

// Bidirectional steerability; raw measurements are produced by the evaluation driver.
struct BsDirection {
  double scale = 0.0;
  double delta_kl = 0.0;
  double success_base = 0.0;
  double success_perturbed = 0.0;
  double sensitivity = 0.0;
  int bisection_steps = 0;
};

struct BsReport {
  bool available = false;
  std::string note;
  std::vector<BsDirection> directions;
  double raw = 0.0;
  double bs = 0.0;
};

// |success drop| per unit KL.
double steerability_sensitivity(double success_base, double success_perturbed, double delta_kl);
BsReport summarize_steerability(std::vector<BsDirection> dirs, const MetricsConfig& m);

// Representational compatibility.
struct RcReport {
  double w2_sq = 0.0;
  double cca = 0.0;
  double gap = 0.0;
  double rc = 0.0;
  int steps = 0;
};

double rc_from_gap(double gap, double ceiling);
RcReport representational_compatibility(const align::LatentBatch& batch, align::RepTarget target, double ceiling);
// Evenly strided subsample of up to max_steps latent rows from the log.
align::LatentBatch latents_from_episodes(const std::vector<Episode>& episodes, int max_steps);

// Shift-robust safety.
struct SsReport {
  double success = 0.0;
  double collisions_per_episode = 0.0;
  double collision_term = 0.0;
  double confidence = 0.0;
  double miscalibration = 0.0;
  double raw = 0.0;
  double ss = 0.0;
};

SsReport ss_from_parts(double success, double collisions_per_episode, double confidence, double collision_cap);
SsReport shift_robust_safety(const std::vector<Episode>& ood, double collision_cap);

// Cognitive offloading efficiency.
struct CeReport {
  bool defined = false;
  std::string note;
  double steps_ratio = 0.0;
  double tokens_ratio = 0.0;
  double ce = 0.0;
  double normalized = 0.0;
};

inline constexpr double kCeSuccessGate = 0.9;

double ce_formula(double steps_base, double steps, double tokens_base, double tokens);
CeReport cognitive_efficiency(const std::vector<Episode>& episodes, const std::vector<Episode>& baseline,
                              double ceiling);

struct BasReport {
  double mp = 0.0, bs = 0.0, rc = 0.0, ss = 0.0, ce = 0.0;
  bool ce_defined = true;
  int components = 5;
  double bas = 0.0;
};

BasReport bas(double mp, double bs, double rc, double ss, double ce);
// Mean over the four defined parts when CE is gated out.
BasReport bas_without_ce(double mp, double bs, double rc, double ss);

struct CcmReport {
  double hsic = 0.0;
  double diversity = 0.0;
  double team_sr = 0.0;
  double solo_ai_sr = 0.0;
  double solo_human_sr = 0.0;
  double perf_synergy = 0.0;
  double agreement_gain = 0.0;
  double synergy = 0.0;
  double lambda = 0.5;
  double ccm = 0.0;
};

inline constexpr double kPerfSynergyWeight = 0.7;
inline constexpr double kAgreementWeight = 0.3;

// Maps a difference in [-1, 1] onto [0, 1]; zero lands at 0.5.
double signed_rescale(double diff);
CcmReport ccm_from_parts(double diversity, double perf_synergy, double agreement_gain, double lambda);
// Per-step decision features of each agent.
void decision_streams(const std::vector<Episode>& episodes, int max_steps, nn::Mat* human, nn::Mat* ai);
CcmReport ccm(const std::vector<Episode>& team, double solo_ai_sr, double solo_human_sr, const MpReport& mp,
              double lambda);

// Table-2 capability metrics; absent values are reported as null.
struct CapabilityReport {
  std::optional<double> mutual_adaptation;
  std::optional<double> protocol_convergence;
  std::optional<double> representation_alignment;
  std::optional<double> teaching_effectiveness;
  std::optional<double> knowledge_transfer;
};

inline constexpr double kJointDriftFloor = 1e-4;

double js_divergence(std::span<const double> p, std::span<const double> q);
double mutual_adaptation_rate(double kl_a, double kl_h);
double protocol_convergence(const std::vector<Episode>& episodes);
std::optional<double> teaching_effectiveness(const std::vector<Episode>& episodes);
std::optional<double> knowledge_transfer(const std::vector<Episode>& episodes);
CapabilityReport capability_metrics(const std::vector<Episode>& episodes, double kl_a, double kl_h, double rc);

// Statistics.
struct Summary {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
  int n = 0;
};

struct Comparison {
  Summary a, b;
  double improvement_pct = 0.0;
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
  double cohens_d = 0.0;
};

Summary summarize(std::span<const double> xs);
// Welch's unequal-variance t-test (two-sided) and pooled-sd Cohen's d of a minus b.
Comparison compare_summaries(const Summary& a, const Summary& b);
Comparison compare_samples(std::span<const double> a, std::span<const double> b);
// 100 (variant - default) / |default|; nullopt when the default is zero and the variant is not.
std::optional<double> delta_pct(double variant, double def);

nlohmann::ordered_json optional_json(const std::optional<double>& v);

}  // namespace bica::metrics

#endif  // BICA_METRICS_HPP_
