#pragma once

#include <cstddef>
#include <vector>

#include "sarfuse/raster.hpp"

namespace sarfuse::nn {

// Batched activation/gradient storage, NCHW, float32.
struct Tensor {
  int n = 0, c = 0, h = 0, w = 0;
  std::vector<float> v;

  Tensor() = default;
  Tensor(int n_, int c_, int h_, int w_, float fill = 0.f)
      : n(n_), c(c_), h(h_), w(w_), v(size_t(n_) * c_ * h_ * w_, fill) {}

  size_t size() const { return v.size(); }
  size_t sample_size() const { return size_t(c) * h * w; }
  size_t plane_size() const { return size_t(h) * w; }

  float* sample(int ni) { return v.data() + ni * sample_size(); }
  const float* sample(int ni) const { return v.data() + ni * sample_size(); }
  float* plane(int ni, int ci) { return sample(ni) + ci * plane_size(); }
  const float* plane(int ni, int ci) const { return sample(ni) + ci * plane_size(); }

  bool same_shape(const Tensor& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }
};

// Stacks single-sample rasters into one batch tensor (shapes must agree).
Tensor pack(const std::vector<const Raster*>& rasters);

// Copies sample ni out of a batch tensor.
Raster unpack(const Tensor& t, int ni);

// Channel concatenation [a | b] per sample.
Tensor concat_channels(const Tensor& a, const Tensor& b);

// Splits gradient of a channel concatenation back into the two parts.
void split_channels(const Tensor& dcat, Tensor& da, Tensor& db);

// Gathers a subset of samples (by index) into a smaller batch.
Tensor gather_samples(const Tensor& t, const std::vector<int>& idx);

}  // namespace sarfuse::nn
