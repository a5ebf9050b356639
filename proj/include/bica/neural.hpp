#ifndef BICA_NEURAL_HPP_
#define BICA_NEURAL_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bica/rng.hpp"

namespace bica::nn {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Grad = std::vector<double>;

struct ParamShape {
  std::string name;
  int rows = 0;
  int cols = 0;
  int fan_in = 1;
  size_t offset = 0;
  size_t size() const { return static_cast<size_t>(rows) * static_cast<size_t>(cols); }
};

// Flat parameter vector with a named-shape registry. Matrices are column-major.
class ParamSet {
 public:
  size_t add(std::string name, int rows, int cols, int fan_in);

  size_t size() const { return values_.size(); }
  const std::vector<ParamShape>& shapes() const { return shapes_; }
  const ParamShape& shape(size_t i) const { return shapes_[i]; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  Eigen::Map<const Mat> mat(size_t i) const {
    const auto& s = shapes_[i];
    return {values_.data() + s.offset, s.rows, s.cols};
  }
  Eigen::Map<Mat> mat(size_t i) {
    const auto& s = shapes_[i];
    return {values_.data() + s.offset, s.rows, s.cols};
  }
  Eigen::Map<const Vec> vec(size_t i) const {
    const auto& s = shapes_[i];
    return {values_.data() + s.offset, static_cast<Eigen::Index>(s.size())};
  }

  Grad zero_grad() const { return Grad(values_.size(), 0.0); }
  Eigen::Map<Mat> grad_mat(Grad& g, size_t i) const {
    const auto& s = shapes_[i];
    return {g.data() + s.offset, s.rows, s.cols};
  }
  Eigen::Map<Vec> grad_vec(Grad& g, size_t i) const {
    const auto& s = shapes_[i];
    return {g.data() + s.offset, static_cast<Eigen::Index>(s.size())};
  }

  // Uniform in +-1/sqrt(fan_in) for every registered tensor.
  void init_uniform(Rng& rng);
  void set_zero();

  bool operator==(const ParamSet& o) const { return values_ == o.values_; }

 private:
  std::vector<ParamShape> shapes_;
  std::vector<double> values_;
};

class Linear {
 public:
  Linear() = default;
  Linear(ParamSet& p, const std::string& name, int in, int out);

  Vec forward(const ParamSet& p, const Vec& x) const;
  // Accumulates parameter gradients, returns d/dx.
  Vec backward(const ParamSet& p, const Vec& x, const Vec& dy, Grad& g) const;

  int in() const { return in_; }
  int out() const { return out_; }
  size_t weight_index() const { return w_; }
  size_t bias_index() const { return b_; }

 private:
  int in_ = 0;
  int out_ = 0;
  size_t w_ = 0;
  size_t b_ = 0;
};

// Gated recurrent unit; gate rows are stacked [reset; update; candidate].
class GruCell {
 public:
  struct Cache {
    Vec x, h, r, z, n, gh_n;
  };

  GruCell() = default;
  GruCell(ParamSet& p, const std::string& name, int in, int hidden);

  Vec forward(const ParamSet& p, const Vec& x, const Vec& h, Cache* cache) const;
  // Returns d/dx and writes d/dh_prev.
  Vec backward(const ParamSet& p, const Cache& c, const Vec& dh_out, Grad& g, Vec* dh_prev) const;

  int in() const { return in_; }
  int hidden() const { return hidden_; }

 private:
  int in_ = 0;
  int hidden_ = 0;
  size_t w_ih_ = 0, w_hh_ = 0, b_ih_ = 0, b_hh_ = 0;
};

// Token lookup; token -1 is the empty message and maps to the zero vector.
class Embedding {
 public:
  static constexpr int kEmpty = -1;

  Embedding() = default;
  Embedding(ParamSet& p, const std::string& name, int vocab, int dim);

  Vec lookup(const ParamSet& p, int token) const;
  void backward(int token, const Vec& dy, const ParamSet& p, Grad& g) const;

  int vocab() const { return vocab_; }
  int dim() const { return dim_; }

 private:
  int vocab_ = 0;
  int dim_ = 0;
  size_t table_ = 0;
};

// Feed-forward stack, tanh between layers, linear output.
class Mlp {
 public:
  struct Cache {
    std::vector<Vec> acts;
  };

  Mlp() = default;
  Mlp(ParamSet& p, const std::string& name, std::vector<int> sizes);

  Vec forward(const ParamSet& p, const Vec& x, Cache* cache) const;
  Vec backward(const ParamSet& p, const Cache& c, const Vec& dy, Grad& g) const;

  int in() const { return sizes_.front(); }
  int out() const { return sizes_.back(); }
  const std::vector<int>& sizes() const { return sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<Linear> layers_;
};

// A ParamSet that owns a single Mlp.
class MlpNet {
 public:
  MlpNet() = default;
  MlpNet(const std::string& name, std::vector<int> sizes);

  Vec forward(const Vec& x, Mlp::Cache* cache = nullptr) const { return mlp_.forward(params_, x, cache); }
  Vec backward(const Mlp::Cache& c, const Vec& dy, Grad& g) const { return mlp_.backward(params_, c, dy, g); }

  ParamSet& params() { return params_; }
  const ParamSet& params() const { return params_; }
  const Mlp& mlp() const { return mlp_; }

 private:
  ParamSet params_;
  Mlp mlp_;
};

struct EmbeddingGroup {
  int vocab = 0;
  int dim = 16;
  int slots = 1;
};

struct RecurrentNetSpec {
  std::string name;
  int feat_dim = 0;
  int enc_dim = 32;
  std::vector<EmbeddingGroup> embeddings;
  int hidden = 32;
  bool recurrent = true;
  int n_actions = 0;
  bool value_head = false;

  int token_slots() const {
    int n = 0;
    for (const auto& e : embeddings) n += e.slots;
    return n;
  }
};

struct NetInput {
  Vec feats;
  std::vector<int> tokens;  // one entry per embedding slot, -1 for empty
};

struct StepOutput {
  Vec hidden;
  Vec logits;
  double value = 0.0;
};

// Encoder phi(feats) ; token embeddings -> GRU (or tanh layer) -> policy/value heads.
class RecurrentNet {
 public:
  struct StepCache {
    Vec feats, enc, x, h_in, h_out;
    std::vector<int> tokens;
    GruCell::Cache gru;
  };

  RecurrentNet() = default;
  explicit RecurrentNet(RecurrentNetSpec spec);

  const RecurrentNetSpec& spec() const { return spec_; }
  int hidden() const { return spec_.hidden; }
  Vec initial_hidden() const { return Vec::Zero(spec_.hidden); }

  StepOutput step(const NetInput& in, const Vec& h, StepCache* cache) const;
  // dh_out is the total gradient reaching this step's hidden output. Returns d/dh_in.
  Vec backward_step(const StepCache& c, const Vec& dlogits, double dvalue, const Vec& dh_out,
                    Grad& g) const;

  ParamSet& params() { return params_; }
  const ParamSet& params() const { return params_; }

 private:
  RecurrentNetSpec spec_;
  ParamSet params_;
  Linear enc_;
  std::vector<Embedding> emb_;
  GruCell gru_;
  Linear core_;
  Linear pi_;
  Linear v_;
};

Vec softmax(const Vec& logits);
Vec log_softmax(const Vec& logits);
double entropy(const Vec& probs);
// KL(p || q) for categorical distributions.
double kl_categorical(const Vec& p, const Vec& q);
// d/dlogits of a scalar given d/dprobs.
Vec softmax_backward(const Vec& probs, const Vec& dprobs);
inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::vector<double> m, v;
  long step = 0;
};

void adam_update(std::span<double> params, std::span<const double> grads, AdamState& state, double lr,
                 const AdamConfig& cfg = {});

// Rescales g in place so its L2 norm is at most max_norm; returns the original norm.
double clip_grad_norm(Grad& g, double max_norm);

void add_into(Grad& dst, const Grad& src);

// Checkpoint: "BICACKPT", u64 header length, JSON header, little-endian float64 payload.
void save_checkpoint(const std::string& path,
                     const std::vector<std::pair<std::string, const ParamSet*>>& sets);
void load_checkpoint(const std::string& path, const std::vector<std::pair<std::string, ParamSet*>>& sets);

}  // namespace bica::nn

#endif  // BICA_NEURAL_HPP_
