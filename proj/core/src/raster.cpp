#include "sarfuse/raster.hpp"

#include <cmath>
#include <stdexcept>

namespace sarfuse {

bool all_finite(const Raster& r) {
  for (float x : r.v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

Raster pad_reflect(const Raster& r, int target_h, int target_w) {
  if (target_h < r.h || target_w < r.w) {
    throw std::invalid_argument("pad_reflect: target smaller than input");
  }
  if (target_h >= 2 * r.h - 1 || target_w >= 2 * r.w - 1) {
    throw std::invalid_argument("pad_reflect: pad width must be < dim - 1");
  }
  if (target_h == r.h && target_w == r.w) return r;
  Raster out(r.c, target_h, target_w);
  for (int c = 0; c < r.c; ++c) {
    for (int i = 0; i < target_h; ++i) {
      const int si = i < r.h ? i : 2 * r.h - 2 - i;
      for (int j = 0; j < target_w; ++j) {
        const int sj = j < r.w ? j : 2 * r.w - 2 - j;
        out.at(c, i, j) = r.at(c, si, sj);
      }
    }
  }
  return out;
}

Raster crop(const Raster& r, int top, int left, int height, int width) {
  if (top < 0 || left < 0 || top + height > r.h || left + width > r.w) {
    throw std::invalid_argument("crop: window out of bounds");
  }
  Raster out(r.c, height, width);
  for (int c = 0; c < r.c; ++c) {
    for (int i = 0; i < height; ++i) {
      const float* src = r.channel(c) + size_t(top + i) * r.w + left;
      float* dst = out.channel(c) + size_t(i) * width;
      std::copy(src, src + width, dst);
    }
  }
  return out;
}

}  // namespace sarfuse
