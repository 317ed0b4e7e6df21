#pragma once

#include <memory>
#include <optional>
#include <string>

#include "sarfuse/dataset.hpp"
#include "sarfuse/nn/unet.hpp"

namespace sarfuse {

enum class Variant {
  kProposed,     // dual extractors + reconstruction network + late fusion
  kDsZeroFill,   // dual-stream fusion, zeros substituted for missing optical
  kUnimodalSar,  // single SAR stream
};

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct BackboneConfig {
  int feature_channels = 16;  // C_f
  int depth = 2;
  int base_width = 16;

  void validate() const;
  // 2^depth must divide the patch size.
  void validate_patch(int patch) const;
};

enum class ForwardMode { kAuto, kForceMissing };

struct ForwardOutput {
  std::optional<Raster> p_fused;     // prediction from fused features
  std::optional<Raster> p_sar_path;  // prediction via SAR(+reconstructed) features
  std::optional<Raster> f_s2;        // optical feature map
  std::optional<Raster> f_s2_hat;    // reconstructed optical feature map
};

// The three networks plus fusion head under one variant tag. The SAR and
// optical extractors share all architecture hyperparameters except their
// input channel counts.
struct ModelBundle {
  Variant variant = Variant::kProposed;
  BackboneConfig config;
  uint64_t init_seed = 0;

  std::unique_ptr<nn::UNet> sar_extractor;        // 2 -> C_f
  std::unique_ptr<nn::UNet> optical_extractor;    // 4 -> C_f (not unimodal)
  std::unique_ptr<nn::UNet> reconstruction_net;   // 2 -> C_f (proposed only)
  std::unique_ptr<nn::Conv2d> fusion_head;        // 1x1, (2*C_f or C_f) -> 1

  std::vector<nn::Param*> params();
  std::vector<std::pair<std::string, std::vector<float>*>> state();
  size_t param_count();

  // Single-sample inference (running batch-norm statistics; thread-safe on
  // a const bundle). Missing optical, or mode kForceMissing on the proposed
  // variant, routes through the reconstruction path; the DS variant
  // zero-fills missing optical internally. f_s2_hat_override substitutes
  // for the reconstructed feature map before fusion (analysis hook).
  ForwardOutput forward(const Sample& s, ForwardMode mode = ForwardMode::kAuto,
                        const Raster* f_s2_hat_override = nullptr) const;

  // Runs the fusion head + sigmoid on explicit feature maps.
  Raster fuse(const Raster& f_s1, const Raster& f_s2) const;
};

ModelBundle build_model(Variant variant, const BackboneConfig& cfg, uint64_t seed);

// Checkpoint container: magic, JSON header (variant, config, seed, tensor
// directory), then raw little-endian float32 blobs in directory order.
void save_checkpoint(ModelBundle& bundle, const std::string& path);
ModelBundle load_checkpoint(const std::string& path);

}  // namespace sarfuse
