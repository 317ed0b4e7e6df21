#include "sarfuse/metrics.hpp"

#include <stdexcept>

namespace sarfuse {

ConfusionCounts confusion(const Raster& pred, const Raster& label, double threshold) {
  if (!pred.same_shape(label)) {
    throw std::invalid_argument("confusion: pred/label shape mismatch");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("confusion: threshold must lie in (0, 1)");
  }
  ConfusionCounts c;
  const float thr = float(threshold);
  for (size_t i = 0; i < pred.size(); ++i) {
    const bool p = pred.v[i] >= thr;
    const bool y = label.v[i] != 0.f;
    if (p && y)
      ++c.tp;
    else if (p && !y)
      ++c.fp;
    else if (!p && y)
      ++c.fn;
    else
      ++c.tn;
  }
  return c;
}

F1Iou f1_iou(const ConfusionCounts& c) {
  if (c.tp == 0 && c.fp == 0 && c.fn == 0) return {1.0, 1.0};
  if (c.tp == 0) return {0.0, 0.0};
  const double tp = double(c.tp), fp = double(c.fp), fn = double(c.fn);
  return {tp / (tp + 0.5 * (fp + fn)), tp / (tp + fp + fn)};
}

}  // namespace sarfuse
