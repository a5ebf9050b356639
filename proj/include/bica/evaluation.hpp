#ifndef BICA_EVALUATION_HPP_
#define BICA_EVALUATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/agents.hpp"
#include "bica/config.hpp"
#include "bica/metrics.hpp"

namespace bica::eval {

// Held-out evaluation on the fixed map set of the condition.
std::vector<Episode> evaluate_condition(const Components& comp, const Config& cfg, bool ood, int episodes,
                                        uint64_t policy_seed);

// AI alone: no messages on either side.
std::vector<Episode> solo_ai(const Components& comp, const Config& cfg, uint64_t policy_seed);
// The surrogate moving by its own table hints with the full map and no AI.
std::vector<Episode> solo_human(const Components& comp, const Config& cfg, uint64_t policy_seed);

// Mean KL(q_s || q_0) of the code-marginalized message distribution over the given contexts.
double message_shift_kl(const protocol::ProtocolGenerator& gen, const std::vector<nn::Vec>& contexts,
                        const nn::Vec& perturbation);

struct Bisection {
  bool ok = false;
  double scale = 0.0;
  double delta_kl = 0.0;
  int steps = 0;
};

// Finds a scale s with |KL(s) - target| <= tolerance along `direction`.
Bisection bisect_perturbation(const protocol::ProtocolGenerator& gen, const std::vector<nn::Vec>& contexts,
                              const nn::Vec& direction, double target, double tolerance);

metrics::BsReport measure_steerability(const Components& comp, const Config& cfg, uint64_t seed);

struct RunMetrics {
  metrics::TaskMetrics id, ood;
  metrics::MpReport mp;
  metrics::BsReport bs;
  metrics::RcReport rc;
  metrics::SsReport ss;
  metrics::CeReport ce;
  metrics::BasReport bas;
  metrics::CcmReport ccm;
  metrics::CapabilityReport capability;
  double train_sr = 0.0;
  double kl_a = 0.0, kl_h = 0.0;
  double lambda_a = 0.0, lambda_h = 0.0;
};

struct EvalInputs {
  std::vector<Episode> id, ood, solo_ai, solo_human;
  metrics::BsReport bs;
  double train_sr = 0.0;
  double kl_a = 0.0, kl_h = 0.0;
  double lambda_a = 0.0, lambda_h = 0.0;
};

// Pure: every number comes from the logged episodes and raw measurements.
RunMetrics compute_metrics(const EvalInputs& in, const Config& cfg, uint64_t seed,
                           const std::vector<Episode>* baseline_id = nullptr);

// Ordered (name, value) rows; null values render as empty cells.
std::vector<std::pair<std::string, std::optional<double>>> metric_rows(const RunMetrics& m);
std::string metrics_csv(const RunMetrics& m);
nlohmann::ordered_json metrics_json(const RunMetrics& m);
nlohmann::ordered_json bs_json(const metrics::BsReport& r);
metrics::BsReport bs_from_json(const nlohmann::json& j, const MetricsConfig& m);

}  // namespace bica::eval

#endif  // BICA_EVALUATION_HPP_
