#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sarfuse/models.hpp"
#include "sarfuse/raster.hpp"

namespace sarfuse {

struct LossConfig {
  double phi = 1e-2;           // similarity weight
  double jaccard_power = 2.0;  // denominator exponent p
  double smoothing = 1.0;      // epsilon in numerator and denominator
  // Treat the optical feature map as a constant target of the similarity
  // term (no gradient into the optical extractor from that term).
  bool similarity_detach_target = true;

  void validate() const;
};

enum class LossCase { kMultiModal, kMissingModality };

// Per-sample decomposed loss. Only terms computable from the forward
// output's fields are present; total is the phi-weighted sum of present
// terms. The case records which loss branch applied: kMultiModal when the
// fused prediction was supervised, kMissingModality when only the SAR-path
// prediction was.
struct LossReport {
  std::optional<double> supervised_fused;
  std::optional<double> supervised_sar_path;
  std::optional<double> similarity;
  double total = 0.0;
  LossCase loss_case = LossCase::kMissingModality;
};

// Power Jaccard: 1 - (sum(p*t) + eps) / (sum(p^power) + sum(t^power) - sum(p*t) + eps),
// sums over all pixels, accumulated at double precision. When grad is given,
// d loss / d pred is written alongside. Values lie in [0, 1) for
// power in [1, 2] and binary targets.
double power_jaccard(std::span<const float> pred, std::span<const float> target,
                     double power, double eps, float* grad = nullptr);
// Same formula at double storage precision (used by gradient checks).
double power_jaccard(std::span<const double> pred, std::span<const double> target,
                     double power, double eps, double* grad = nullptr);
double power_jaccard(const Raster& pred, const Raster& target, const LossConfig& cfg);

// Mean squared difference over all channels and pixels.
double feature_similarity(const Raster& f_s2, const Raster& f_s2_hat);

// Dispatches on the fields present in the forward output:
//   fused + sar-path + features  -> PJ(fused) + PJ(sar path) + phi * L2
//   sar-path only                -> PJ(sar path)
//   fused only (DS baseline)     -> PJ(fused)
LossReport sample_loss(const ForwardOutput& out, const Raster& label,
                       const LossConfig& cfg);

// Exact left-to-right sum of per-sample totals (no averaging).
double batch_loss(std::span<const LossReport> reports);

}  // namespace sarfuse
