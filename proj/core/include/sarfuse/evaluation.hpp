#pragma once

#include <optional>

#include "sarfuse/dataset.hpp"
#include "sarfuse/metrics.hpp"
#include "sarfuse/models.hpp"

namespace sarfuse {

struct StratumMetrics {
  ConfusionCounts counts;
  double f1 = 0.0, iou = 0.0;
};

// Micro-averaged metrics per modality stratum. A stratum with no samples is
// absent rather than zero-valued; "all" pools the counts of the other two.
struct EvalResult {
  std::optional<StratumMetrics> all, multi_modal, missing_modality;
};

// Full-tile inference: pads to 2^depth divisibility by edge reflection,
// predicts, crops back. The evaluated prediction follows the variant: the
// proposed model uses the fused path when optical is available and the
// reconstruction path otherwise; DS zero-fills; unimodal ignores optical.
Raster predict_tile(const ModelBundle& bundle, const Sample& s,
                    ForwardMode mode = ForwardMode::kAuto);

EvalResult evaluate_dataset(const ModelBundle& bundle, const Dataset& ds,
                            double threshold = 0.5);

}  // namespace sarfuse
