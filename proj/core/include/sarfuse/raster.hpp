#pragma once

#include <cstddef>
#include <vector>

namespace sarfuse {

// Dense float32 raster, C-order (channel, row, column).
struct Raster {
  int c = 0, h = 0, w = 0;
  std::vector<float> v;

  Raster() = default;
  Raster(int c_, int h_, int w_, float fill = 0.f)
      : c(c_), h(h_), w(w_), v(size_t(c_) * h_ * w_, fill) {}

  size_t size() const { return v.size(); }
  float& at(int ci, int i, int j) { return v[(size_t(ci) * h + i) * w + j]; }
  float at(int ci, int i, int j) const { return v[(size_t(ci) * h + i) * w + j]; }
  float* channel(int ci) { return v.data() + size_t(ci) * h * w; }
  const float* channel(int ci) const { return v.data() + size_t(ci) * h * w; }
  bool same_shape(const Raster& o) const { return c == o.c && h == o.h && w == o.w; }
};

bool all_finite(const Raster& r);

// Pads rows/cols on the bottom/right edge by mirror reflection (no edge
// duplication). Requires pad < dim - 1 on each axis.
Raster pad_reflect(const Raster& r, int target_h, int target_w);

Raster crop(const Raster& r, int top, int left, int height, int width);

}  // namespace sarfuse
