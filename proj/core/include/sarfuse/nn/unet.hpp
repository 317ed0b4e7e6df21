#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sarfuse/nn/layers.hpp"

namespace sarfuse::nn {

struct UNetConfig {
  int in_channels = 2;
  int feature_channels = 16;  // output channels of the feature map
  int depth = 2;              // down/up-sampling stages
  int base_width = 16;        // first-stage channel count
  // When true a linear 1x1 layer followed by ReLU maps the final decoder
  // activation to feature_channels even if widths already match (the
  // reconstruction network always carries this layer). When false the layer
  // is only inserted if feature_channels != base_width.
  bool force_projection = false;
};

// conv3x3 -> BN -> ReLU, twice.
struct DoubleConv {
  Conv2d c1, c2;
  BatchNorm2d b1, b2;

  DoubleConv(int in_ch, int out_ch, Rng& rng, const std::string& name);
};

struct DoubleConvCache {
  Conv2dCache c1, c2;
  BatchNormCache b1, b2;
  Tensor out;  // post-ReLU block output
};

// nearest 2x upsample -> conv3x3 -> BN -> ReLU.
struct UpBlock {
  Conv2d conv;
  BatchNorm2d bn;

  UpBlock(int in_ch, int out_ch, Rng& rng, const std::string& name);
};

struct UpBlockCache {
  Conv2dCache conv;
  BatchNormCache bn;
  Tensor out;
};

struct UNetCache {
  std::vector<DoubleConvCache> enc;
  std::vector<MaxPoolCache> pools;
  DoubleConvCache bottleneck;
  std::vector<UpBlockCache> ups;   // indexed by level, 0 = full resolution
  std::vector<DoubleConvCache> dec;
  Conv2dCache proj;
  Tensor proj_out;
};

// Encoder-decoder backbone: per-stage DoubleConv, 2x max-pool downsampling,
// nearest-neighbor upsampling + convolution, skip connections by channel
// concatenation. The feature map is the final full-resolution decoder
// activation (post-ReLU), optionally passed through a 1x1 projection.
class UNet {
 public:
  UNet(const UNetConfig& cfg, Rng& rng, const std::string& prefix);

  Tensor forward(Tensor x, UNetCache* cache, bool train);
  Tensor infer(const Tensor& x) const;
  // Returns d input; accumulates parameter gradients.
  Tensor backward(Tensor dfeat, UNetCache& cache);

  void collect_params(std::vector<Param*>& out);
  // Parameters plus batch-norm running statistics, for checkpointing.
  void collect_state(std::vector<std::pair<std::string, std::vector<float>*>>& out);

  const UNetConfig& config() const { return cfg_; }
  size_t param_count() const;

 private:
  UNetConfig cfg_;
  std::string prefix_;
  std::vector<DoubleConv> enc_;
  std::unique_ptr<DoubleConv> bottleneck_;
  std::vector<UpBlock> ups_;   // indexed by level
  std::vector<DoubleConv> dec_;
  std::unique_ptr<Conv2d> proj_;  // optional 1x1 + ReLU feature projection
};

}  // namespace sarfuse::nn
