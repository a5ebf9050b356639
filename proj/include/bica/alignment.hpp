#ifndef BICA_ALIGNMENT_HPP_
#define BICA_ALIGNMENT_HPP_

#include <string>
#include <vector>

#include "bica/neural.hpp"

namespace bica::align {

using nn::Mat;
using nn::Vec;

// Pairwise squared Euclidean distances between rows; OpenMP over rows of A.
Mat sq_distance_matrix(const Mat& a, const Mat& b);
Mat sq_distance_matrix_serial(const Mat& a, const Mat& b);

// Minimum-cost perfect matching on a square cost matrix (Hungarian method).
// Returns col[i] assigned to row i.
std::vector<int> min_cost_assignment(const Mat& cost);

struct W2Result {
  double value = 0.0;
  std::vector<int> assignment;  // row of B matched to row i of A
};

W2Result wasserstein2_sq(const Mat& a, const Mat& b);
// d W2 / d B with the matching held fixed.
Mat wasserstein2_sq_grad_b(const Mat& a, const Mat& b, const std::vector<int>& assignment);

inline constexpr double kCcaRidge = 1e-4;

struct CcaResult {
  double rho = 0.0;
  Vec wx, wy;  // first canonical directions
};

CcaResult cca(const Mat& x, const Mat& y, double ridge = kCcaRidge);
inline double cca_corr(const Mat& x, const Mat& y, double ridge = kCcaRidge) { return cca(x, y, ridge).rho; }
// d rho / d X and d rho / d Y with the canonical directions held fixed.
void cca_grad(const Mat& x, const Mat& y, const CcaResult& r, Mat* dx, Mat* dy);

enum class RepTarget { kMappedSelf, kAiLatents };

struct LatentBatch {
  Mat z_h;
  Mat z_a;
  Mat mapped;
};

struct RepLossParts {
  double w2_sq = 0.0;
  double cca_rho = 0.0;
  double total = 0.0;
};

struct RepLossGrad {
  Mat d_mapped;
  Mat d_zh;
  Mat d_za;
};

// W2 term treats its reference sample as a constant; CCA term flows into both latent sets.
RepLossParts rep_loss(const LatentBatch& batch, RepTarget target = RepTarget::kMappedSelf,
                      RepLossGrad* grad = nullptr);

// Median of the nonzero pairwise distances; 1 when every distance is zero.
double median_bandwidth(const Mat& x);
Mat rbf_kernel(const Mat& x, double bandwidth);
Mat rbf_kernel_serial(const Mat& x, double bandwidth);
// bandwidth <= 0 selects the median heuristic.
double hsic_rbf(const Mat& x, const Mat& y, double bx = 0.0, double by = 0.0);
// HSIC(X,Y) / sqrt(HSIC(X,X) HSIC(Y,Y)), 0 when either side is degenerate.
double normalized_hsic(const Mat& x, const Mat& y);

inline constexpr int kLatentDim = 32;

// Latent encoders and the map T.
class Mapper {
 public:
  Mapper() = default;
  Mapper(int human_feat_dim, int ai_feat_dim, int latent_dim = kLatentDim, bool linear_map = false);

  int latent_dim() const { return latent_dim_; }

  nn::RecurrentNet& human_encoder() { return human_enc_; }
  const nn::RecurrentNet& human_encoder() const { return human_enc_; }
  nn::RecurrentNet& ai_encoder() { return ai_enc_; }
  const nn::RecurrentNet& ai_encoder() const { return ai_enc_; }
  nn::MlpNet& map_net() { return map_; }
  const nn::MlpNet& map_net() const { return map_; }

  // Inputs: human features + [AI token, intervention payload]; AI features + two human token slots.
  Vec encode_human(const nn::NetInput& in, const Vec& h, nn::RecurrentNet::StepCache* cache = nullptr) const;
  Vec encode_ai(const nn::NetInput& in, nn::RecurrentNet::StepCache* cache = nullptr) const;
  Vec map(const Vec& z_h, nn::Mlp::Cache* cache = nullptr) const { return map_.forward(z_h, cache); }

  void init(Rng& rng);

 private:
  int latent_dim_ = kLatentDim;
  nn::RecurrentNet human_enc_;
  nn::RecurrentNet ai_enc_;
  nn::MlpNet map_;
};

struct AlignmentDiagnostics {
  int epoch = 0;
  double w2_sq = 0.0;
  double cca_rho = 0.0;
  double hsic = 0.0;
  double rep_total = 0.0;
};

std::string diagnostics_csv_header();
std::string diagnostics_csv_row(const AlignmentDiagnostics& d);

}  // namespace bica::align

#endif  // BICA_ALIGNMENT_HPP_
