#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "sarfuse/dataset.hpp"

namespace sarfuse {

// Synthetic multi-modal scenes with known cross-modal structure: building
// rectangles accumulate over the time series, SAR is a smooth function of
// the label under multiplicative speckle, and the optical channels are a
// fixed pointwise map of local SAR/label averages (see cross_modal_map).
struct SimConfig {
  int num_sites = 8;
  int timestamps_per_site = 24;
  int tile_size = 64;
  double dropout_rate = 0.12;       // P(optical unavailable)
  double cross_modal_noise = 0.05;  // sigma_x, additive on optical channels
  uint64_t seed = 1;

  void validate() const;
};

// The cross-modal map g. For 3x3 box means m_vv, m_vh, m_y of the stored
// SAR channels and the label, optical channel k is
//   g_k = sigmoid(a_k * m_vv + b_k * m_vh + c_k * m_y + d_k)
// with fixed coefficients (blue/green/red/nir). Each channel is a strictly
// monotone function of its affine argument, so g is invertible per channel.
// With cross_modal_noise = 0 the stored optical raster equals g exactly,
// which gives reconstruction quality an oracle.
Raster cross_modal_map(const Raster& sar, const Raster& label);

// Deterministic per-tile synthesis: equal (config, site_index, t) always
// produces the same Sample, independent of generation order.
Sample generate_scene(const SimConfig& cfg, int site_index, int t);

// Site counts for train/val/test at ratio 41:15:14, largest-remainder
// rounding, then adjusted so every split is non-empty.
std::array<int, 3> split_sites(int num_sites);

// Emits the full on-disk dataset (rasters + manifest, identity
// normalization) and returns the manifest. Requires num_sites >= 3.
Manifest generate_dataset(const SimConfig& cfg, const std::string& out_root);

}  // namespace sarfuse
