#ifndef BICA_HARNESS_HPP_
#define BICA_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/config.hpp"
#include "bica/evaluation.hpp"
#include "bica/trainer.hpp"

namespace bica::harness {

// FNV-1a over the serialized config with name and seeds cleared.
std::string config_hash(const Config& c);
// "<name or mode>-<first 12 hex digits of the hash>"
std::string run_name(const Config& c);

using MetricRows = std::vector<std::pair<std::string, std::optional<double>>>;

struct SeedResult {
  uint64_t seed = 0;
  bool ok = false;
  bool reused = false;
  std::string error;
  std::string dir;
  MetricRows rows;

  std::optional<double> value(const std::string& metric) const;
};

struct Aggregate {
  std::string metric;
  metrics::Summary summary;
};

struct RunReport {
  std::string name;
  std::string config_hash;
  Mode mode = Mode::kBica;
  std::vector<SeedResult> seeds;
  std::vector<Aggregate> aggregate;

  std::vector<uint64_t> ok_seeds() const;
  std::vector<double> samples(const std::string& metric) const;  // ok seeds with a value, seed order
  nlohmann::ordered_json json() const;
};

RunReport report_from_json(const nlohmann::json& j);
RunReport load_report(const std::string& path);
std::vector<Aggregate> aggregate_rows(const std::vector<SeedResult>& seeds);

struct RunOptions {
  std::string runs_root = "runs";
  bool reuse = true;
  // Run directory of the matching baseline experiment; its ID traces anchor cognitive efficiency.
  std::string baseline_dir;
  std::function<void(const std::string&)> log;
  // Test hook: called before training each seed; throwing simulates a seed failure.
  std::function<void(uint64_t)> before_seed;
};

struct CheckpointState {
  train::BudgetState budget;
  double tau = 1.0;
  human::ProtocolTable table;
};

void save_run_checkpoint(const std::string& dir, const train::TrainResult& r);
// Rebuilds components for `cfg` and loads the final checkpoint.
Components load_run_checkpoint(const std::string& dir, const Config& cfg, CheckpointState* state = nullptr);

// Recomputes metrics.csv and report.json of one seed directory from its persisted logs only.
SeedResult evaluate_seed_dir(const std::string& dir, const Config& cfg, uint64_t seed,
                             const std::string& baseline_seed_dir = "");

SeedResult run_seed(const Config& cfg, uint64_t seed, const RunOptions& opts);
RunReport run_experiment(const Config& cfg, const std::vector<uint64_t>& seeds, const RunOptions& opts);

// Ablation grid.
enum class Family { kHyperparameter, kCoAlignment, kArchitecture };
const char* family_name(Family f);

struct AblationVariant {
  std::string name;
  Family family = Family::kHyperparameter;
  std::string levers;  // human-readable summary of the overrides
  std::function<void(Config&)> apply;
};

std::vector<AblationVariant> ablation_variants();

inline const std::vector<std::string>& ablation_columns() {
  static const std::vector<std::string> cols = {"SR", "ID SR", "OOD SR", "BAS", "CCM", "Avg Steps", "Reward"};
  return cols;
}
// metric_rows names backing each ablation column.
inline const std::vector<std::string>& ablation_metrics() {
  static const std::vector<std::string> m = {"train_sr", "id_sr", "ood_sr", "bas", "ccm", "avg_steps", "reward"};
  return m;
}

struct AblationRow {
  std::string variant;
  std::string family;  // "default" for the reference row
  std::vector<std::optional<double>> values;
  std::vector<std::optional<double>> delta_pct;
  std::string run_dir;
};

struct FamilyMean {
  std::string family;
  std::vector<std::string> members;
  std::vector<std::optional<double>> values;
};

struct AblationTable {
  std::vector<uint64_t> seeds;
  AblationRow reference;
  std::vector<AblationRow> rows;  // the 15 variants in grid order
  std::vector<FamilyMean> families;

  nlohmann::ordered_json json() const;
  std::string csv() const;
  std::string markdown() const;
};

AblationRow ablation_row(const std::string& variant, const std::string& family, const RunReport& report);
AblationTable build_ablation_table(const RunReport& reference, const std::vector<std::pair<AblationVariant, RunReport>>& runs,
                                   const std::vector<uint64_t>& seeds);
AblationTable run_ablation(const Config& base, const std::vector<uint64_t>& seeds, const RunOptions& opts);

// Side-by-side comparison of two experiments.
struct ComparisonRow {
  std::string metric;
  std::string label;
  double scale = 1.0;  // display multiplier (100 for rates)
  bool percent = false;
  metrics::Comparison stats;
};

struct ComparisonTable {
  std::vector<uint64_t> seeds;
  std::vector<ComparisonRow> rows;  // headline rows first, then every other shared metric

  nlohmann::ordered_json json() const;
  std::string markdown() const;
};

struct HeadlineMetric {
  std::string metric;
  std::string label;
  double scale;
  bool percent;
};
const std::vector<HeadlineMetric>& headline_metrics();

std::string format_mean_sd(const metrics::Summary& s, double scale, bool percent);
std::string format_improvement(double pct);
std::string format_p(double p);
std::string format_row(const ComparisonRow& r);

// Throws std::invalid_argument when the successful seed sets differ.
ComparisonTable compare(const RunReport& bica, const RunReport& baseline);

}  // namespace bica::harness

#endif  // BICA_HARNESS_HPP_
