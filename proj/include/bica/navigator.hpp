#ifndef BICA_NAVIGATOR_HPP_
#define BICA_NAVIGATOR_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/neural.hpp"
#include "bica/rng.hpp"

namespace bica::nav {

using nn::Mat;
using nn::Vec;

inline constexpr int kLatentDim = 16;
inline constexpr int kImageSize = 32;
inline constexpr int kOracleFactors = 4;
inline constexpr int kInteractionBudget = 100;
inline constexpr double kBeta = 4.0;

double vae_loss(double recon_nll, double kl_to_prior, double beta = kBeta);

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct ShapeParams {
  double x = 0.5, y = 0.5;  // center in [0, 1]
  double scale = 0.25;
  double rotation = 0.0;
  int shape = 0;  // 0 square, 1 ellipse, 2 triangle
  double intensity = 1.0;
};

using Image = std::vector<uint8_t>;  // kImageSize x kImageSize, row-major

// Procedural latent world: a linear decoder of shape factors plus a hidden oracle.
class LatentWorld {
 public:
  explicit LatentWorld(uint64_t seed);

  uint64_t seed() const { return seed_; }
  ShapeParams shape(const Vec& z) const;
  Image decode(const Vec& z) const;
  double oracle(const Vec& z) const;
  const std::array<int, kOracleFactors>& factors() const { return factors_; }

 private:
  uint64_t seed_;
  Mat shape_map_;  // 8 x 16: x, y, scale, rotation, 3 shape logits, intensity
  std::array<int, kOracleFactors> factors_{};
  Vec linear_;
  Mat pairwise_;
  double bias_ = 0.0;
};

std::vector<uint8_t> encode_png(const Image& img, int width = kImageSize, int height = kImageSize);

// 16 -> 64 -> 2 feed-forward projection.
class ProjectionNet {
 public:
  ProjectionNet();
  Point project(const Vec& z) const;
  // Gradient of loss w.r.t. params given d loss / d point.
  void backward(const Vec& z, const Point& dpoint, nn::Grad& g) const;
  nn::MlpNet& net() { return net_; }
  const nn::MlpNet& net() const { return net_; }

 private:
  nn::MlpNet net_;
};

// Regresses the projection onto the first two principal coordinates of the anchors; returns final MSE.
double fit_projection(ProjectionNet& p, const std::vector<Vec>& latents, int epochs, uint64_t seed);

struct Anchor {
  Vec z;
  Point p;
};

std::vector<Anchor> make_anchors(const ProjectionNet& p, const std::vector<Vec>& latents);
// Inverse-distance-weighted mix of the k nearest anchors' latents; exact on an anchor.
Vec lift(const Point& click, const std::vector<Anchor>& anchors, int k = 5);

struct Bounds {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
  bool contains(const Point& p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};
Bounds anchor_bounds(const std::vector<Anchor>& anchors);

struct Region {
  Point center;
  double radius = 0.0;
  double score = 0.0;
  bool contains(const Point& p) const;
};

struct SuggestionConfig {
  int bins = 6;
  double bonus = 0.3;
  double prior_mean = 0.5;
  double radius_floor = 0.05;  // fraction of the bounding-box diagonal
  int regions = 3;
};

// Grid-binned mean preference plus c / sqrt(n + 1) exploration bonus.
class SuggestionPolicy {
 public:
  SuggestionPolicy(Bounds bounds, SuggestionConfig cfg = {});
  void observe(const Point& p, double preference);
  std::vector<Region> suggest() const;
  double estimate(const Point& p) const;  // mean preference of the point's bin (prior when empty)
  int observations() const { return total_; }
  const Bounds& bounds() const { return bounds_; }

 private:
  int bin_of(const Point& p) const;
  Point bin_center(int b) const;
  Bounds bounds_;
  SuggestionConfig cfg_;
  std::vector<double> sum_;
  std::vector<int> count_;
  int total_ = 0;
};

struct Interaction {
  std::vector<Region> suggestions;
  Point click;
  Vec z;
  double score = 0.0;
  double preference = 0.0;
  bool inside_suggestion = false;
  double ai_estimate = 0.0;
  Point suggestion_center;  // top-ranked suggestion at click time
};

struct SessionLog {
  uint64_t seed = 0;
  std::string clicker;
  std::vector<Interaction> interactions;
};

// The interactive environment shared by the automated sessions and the service.
class NavigatorSession {
 public:
  NavigatorSession(uint64_t seed, int n_anchors = 200);
  const LatentWorld& world() const { return world_; }
  const ProjectionNet& projection() const { return proj_; }
  const std::vector<Anchor>& anchors() const { return anchors_; }
  const Bounds& bounds() const { return policy_.bounds(); }
  std::vector<Region> suggestions() const { return policy_.suggest(); }
  const SuggestionPolicy& policy() const { return policy_; }
  const SessionLog& log() const { return log_; }
  bool finished() const { return static_cast<int>(log_.interactions.size()) >= kInteractionBudget; }
  // Throws when the budget is spent; clicks outside the bounds return nullopt.
  std::optional<Interaction> click(const Point& p, std::optional<double> preference, Rng& rng);

 private:
  LatentWorld world_;
  ProjectionNet proj_;
  std::vector<Anchor> anchors_;
  SuggestionPolicy policy_;
  SessionLog log_;
};

enum class ClickerKind { kGreedyOracle, kUniformRandom };

struct ClickerConfig {
  double temperature = 0.3;
  double preference_noise = 0.1;
  int candidates_per_region = 8;
  int uniform_candidates = 8;
};

Point choose_click(const NavigatorSession& s, ClickerKind kind, const ClickerConfig& cfg, Rng& rng);
NavigatorSession run_session(uint64_t seed, ClickerKind kind, const ClickerConfig& cfg = {});

struct SessionMetrics {
  double exploration_efficiency = 0.0;
  double representation_cca = 0.0;
  double preference_correlation = 0.0;
  double discovery_rate = 0.0;
  double cognitive_compatibility = 0.0;
};

inline constexpr int kDiscoveryGrid = 10;

double exploration_efficiency(const std::vector<double>& scores, int budget = kInteractionBudget);
double spearman(const std::vector<double>& a, const std::vector<double>& b);
// Fraction of the top-decile cells (by oracle score of the lifted cell center) that received a click.
double discovery_rate(const NavigatorSession& s, const std::vector<Point>& clicks);
SessionMetrics session_metrics(const NavigatorSession& s);

nlohmann::ordered_json interaction_json(const Interaction& it, int index);
nlohmann::ordered_json session_metrics_json(const SessionMetrics& m);

}  // namespace bica::nav

#endif  // BICA_NAVIGATOR_HPP_
