#pragma once

#include <vector>

#include "sarfuse/nn/layers.hpp"

namespace sarfuse::nn {

// AdamW: Adam moment updates plus decoupled weight decay. Decay is applied
// only to parameters flagged decay (convolution weights; biases and batch
// norm affine terms are exempt).
class AdamW {
 public:
  AdamW(std::vector<Param*> params, double lr, double weight_decay = 0.01,
        double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

  void step();
  void zero_grad();

  double lr = 0.0;
  double weight_decay = 0.0;

 private:
  std::vector<Param*> params_;
  std::vector<std::vector<float>> m_, v_;
  double beta1_, beta2_, eps_;
  long t_ = 0;
};

}  // namespace sarfuse::nn
