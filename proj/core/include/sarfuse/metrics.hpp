#pragma once

#include <cstdint>

#include "sarfuse/raster.hpp"

namespace sarfuse {

struct ConfusionCounts {
  uint64_t tp = 0, fp = 0, fn = 0, tn = 0;

  uint64_t total() const { return tp + fp + fn + tn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
  friend ConfusionCounts operator+(ConfusionCounts a, const ConfusionCounts& b) {
    return a += b;
  }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// Binarizes pred at threshold (>= threshold -> 1) and counts pixelwise
// agreement. Threshold must lie in (0, 1); shapes must match.
ConfusionCounts confusion(const Raster& pred, const Raster& label, double threshold);

struct F1Iou {
  double f1 = 0.0, iou = 0.0;
};

//   F1  = TP / (TP + (FP + FN) / 2)
//   IoU = TP / (TP + FP + FN)
// All-zero TP/FP/FN counts mean perfect agreement on an empty scene and
// evaluate to (1, 1); TP = 0 with FP + FN > 0 evaluates to (0, 0).
F1Iou f1_iou(const ConfusionCounts& c);

}  // namespace sarfuse
