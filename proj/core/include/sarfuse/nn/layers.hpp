#pragma once

#include <string>
#include <vector>

#include "sarfuse/nn/tensor.hpp"
#include "sarfuse/rng.hpp"

namespace sarfuse::nn {

// Learnable tensor plus its gradient accumulator.
struct Param {
  std::string name;
  std::vector<float> w, g;
  bool decay = true;  // participates in decoupled weight decay

  Param() = default;
  Param(std::string name_, size_t count, bool decay_)
      : name(std::move(name_)), w(count, 0.f), g(count, 0.f), decay(decay_) {}
  void zero_grad() { std::fill(g.begin(), g.end(), 0.f); }
};

struct Conv2dCache {
  Tensor x;
};

// Same-padded kxk convolution (k odd). Weight layout (out, in*k*k) row-major;
// forward/backward run one im2col + GEMM per sample, parallel over the batch,
// with weight-gradient reduction in sample order so results are bit-stable.
class Conv2d {
 public:
  Conv2d(int in_ch, int out_ch, int ksize, Rng& rng, std::string name);

  Tensor forward(Tensor x, Conv2dCache* cache) const;
  Tensor infer(const Tensor& x) const { return forward_impl(x); }
  // Accumulates into weight.g / bias.g, returns d input.
  Tensor backward(const Tensor& dy, const Conv2dCache& cache);

  void collect_params(std::vector<Param*>& out) {
    out.push_back(&weight);
    out.push_back(&bias);
  }

  Param weight, bias;
  int in_ch = 0, out_ch = 0, k = 1;

 private:
  Tensor forward_impl(const Tensor& x) const;
};

struct BatchNormCache {
  Tensor xhat;
  std::vector<float> invstd;
};

class BatchNorm2d {
 public:
  BatchNorm2d(int channels, std::string name);

  // train=true normalizes with batch statistics and, when cache is given,
  // updates the running estimates; train=false uses the running estimates.
  Tensor forward(Tensor x, BatchNormCache* cache, bool train);
  Tensor infer(const Tensor& x) const;
  Tensor backward(const Tensor& dy, const BatchNormCache& cache);

  void collect_params(std::vector<Param*>& out) {
    out.push_back(&gamma);
    out.push_back(&beta);
  }

  Param gamma, beta;
  std::vector<float> running_mean, running_var;
  double momentum = 0.1;
  double eps = 1e-5;
  int channels = 0;
};

void relu_inplace(Tensor& x);
// Masks dy by y > 0 (y is the ReLU output).
Tensor relu_backward(const Tensor& dy, const Tensor& y);

void sigmoid_inplace(Tensor& x);
// dy masked by p * (1 - p), p the sigmoid output.
Tensor sigmoid_backward(const Tensor& dy, const Tensor& p);

struct MaxPoolCache {
  std::vector<int32_t> argmax;  // flat input index per output element
  int n = 0, c = 0, h = 0, w = 0;
};

Tensor maxpool2(const Tensor& x, MaxPoolCache* cache);
Tensor maxpool2_backward(const Tensor& dy, const MaxPoolCache& cache);

Tensor upsample_nearest2(const Tensor& x);
Tensor upsample_nearest2_backward(const Tensor& dy);

}  // namespace sarfuse::nn
