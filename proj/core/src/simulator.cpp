#include "sarfuse/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace sarfuse {

namespace {

constexpr uint64_t kSiteLayoutSalt = 0x517e;
constexpr uint64_t kSpeckleSalt = 0x5a12;
constexpr uint64_t kDropoutSalt = 0xd1d0;

struct Rect {
  int top, left, height, width;
  int appears_at;  // timestamp at which the building exists
};

// Buildings accumulate over the series; the layout is a pure function of
// (seed, site), so labels are consistent and non-decreasing across t.
std::vector<Rect> site_layout(const SimConfig& cfg, int site_index) {
  Rng rng(Rng::mix(cfg.seed, uint64_t(site_index), kSiteLayoutSalt));
  const int s = cfg.tile_size;
  const double area_scale = double(s) * s / (64.0 * 64.0);
  const int count = std::max(4, int(std::lround((8 + rng.uniform_int(8)) * area_scale)));
  std::vector<Rect> rects;
  rects.reserve(count);
  for (int k = 0; k < count; ++k) {
    Rect r;
    r.height = 4 + int(rng.uniform_int(9));
    r.width = 4 + int(rng.uniform_int(9));
    r.top = int(rng.uniform_int(uint64_t(s - r.height + 1)));
    r.left = int(rng.uniform_int(uint64_t(s - r.width + 1)));
    r.appears_at = 1 + int(rng.uniform_int(uint64_t(cfg.timestamps_per_site)));
    rects.push_back(r);
  }
  return rects;
}

// Edge-truncated box mean over a (2*radius+1)^2 window.
void box_mean(const float* src, float* dst, int h, int w, int radius) {
  for (int i = 0; i < h; ++i) {
    const int i0 = std::max(0, i - radius), i1 = std::min(h - 1, i + radius);
    for (int j = 0; j < w; ++j) {
      const int j0 = std::max(0, j - radius), j1 = std::min(w - 1, j + radius);
      float sum = 0.f;
      for (int ii = i0; ii <= i1; ++ii) {
        const float* row = src + size_t(ii) * w;
        for (int jj = j0; jj <= j1; ++jj) sum += row[jj];
      }
      dst[size_t(i) * w + j] = sum / float((i1 - i0 + 1) * (j1 - j0 + 1));
    }
  }
}

inline float clip01(float x) { return std::clamp(x, 0.f, 1.f); }

// Per-channel coefficients of g over (m_vv, m_vh, m_y): blue, green, red,
// near-infrared. The label weight dominates so the optical channels carry a
// clean view of the buildings that speckled SAR lacks.
constexpr double kA[kOpticalChannels] = {0.8, 0.7, 0.9, -0.5};
constexpr double kB[kOpticalChannels] = {0.4, 0.5, 0.3, -0.8};
constexpr double kC[kOpticalChannels] = {-2.2, -1.6, 2.4, -2.8};
constexpr double kD[kOpticalChannels] = {-0.1, 0.1, -0.6, 1.2};

}  // namespace

void SimConfig::validate() const {
  if (num_sites <= 0 || timestamps_per_site <= 0) {
    throw std::invalid_argument("simulator: site and timestamp counts must be positive");
  }
  if (tile_size < 64) throw std::invalid_argument("simulator: tile_size must be >= 64");
  if (dropout_rate < 0.0 || dropout_rate > 1.0) {
    throw std::invalid_argument("simulator: dropout_rate must lie in [0, 1]");
  }
  if (cross_modal_noise < 0.0) {
    throw std::invalid_argument("simulator: cross_modal_noise must be >= 0");
  }
}

Raster cross_modal_map(const Raster& sar, const Raster& label) {
  if (sar.c != kSarChannels || label.c != 1 || sar.h != label.h || sar.w != label.w) {
    throw std::invalid_argument("cross_modal_map: expects 2-channel sar and matching label");
  }
  const int h = sar.h, w = sar.w;
  std::vector<float> m_vv(size_t(h) * w), m_vh(size_t(h) * w), m_y(size_t(h) * w);
  box_mean(sar.channel(0), m_vv.data(), h, w, 1);
  box_mean(sar.channel(1), m_vh.data(), h, w, 1);
  box_mean(label.channel(0), m_y.data(), h, w, 1);
  Raster optical(kOpticalChannels, h, w);
  for (int k = 0; k < kOpticalChannels; ++k) {
    float* out = optical.channel(k);
    for (size_t i = 0; i < size_t(h) * w; ++i) {
      const double z = kA[k] * m_vv[i] + kB[k] * m_vh[i] + kC[k] * m_y[i] + kD[k];
      out[i] = float(1.0 / (1.0 + std::exp(-z)));
    }
  }
  return optical;
}

Sample generate_scene(const SimConfig& cfg, int site_index, int t) {
  cfg.validate();
  if (site_index < 0 || site_index >= cfg.num_sites) {
    throw std::invalid_argument("generate_scene: site_index out of range");
  }
  if (t < 1 || t > cfg.timestamps_per_site) {
    throw std::invalid_argument("generate_scene: t out of range");
  }
  const int s = cfg.tile_size;

  Sample out;
  char site_name[32];
  std::snprintf(site_name, sizeof site_name, "site_%04d", site_index);
  out.site_id = site_name;
  out.timestamp_index = t;

  out.label = Raster(1, s, s, 0.f);
  for (const Rect& r : site_layout(cfg, site_index)) {
    if (r.appears_at > t) continue;
    for (int i = r.top; i < r.top + r.height; ++i) {
      float* row = out.label.channel(0) + size_t(i) * s;
      std::fill(row + r.left, row + r.left + r.width, 1.f);
    }
  }

  // SAR: affine in the blurred footprint, multiplicative unit-mean speckle.
  std::vector<float> base(size_t(s) * s);
  box_mean(out.label.channel(0), base.data(), s, s, 2);
  Rng speckle(Rng::mix(cfg.seed, uint64_t(site_index), uint64_t(t), kSpeckleSalt));
  out.sar = Raster(kSarChannels, s, s);
  const double kSigmaSpeckle = 0.25;
  const float gains[kSarChannels] = {0.50f, 0.38f};
  const float floors[kSarChannels] = {0.18f, 0.12f};
  for (int c = 0; c < kSarChannels; ++c) {
    float* plane = out.sar.channel(c);
    for (size_t i = 0; i < size_t(s) * s; ++i) {
      const double noise =
          std::exp(kSigmaSpeckle * speckle.normal() - 0.5 * kSigmaSpeckle * kSigmaSpeckle);
      plane[i] = clip01(float((floors[c] + gains[c] * base[i]) * noise));
    }
  }

  Raster optical = cross_modal_map(out.sar, out.label);
  if (cfg.cross_modal_noise > 0.0) {
    for (float& x : optical.v) {
      x = clip01(x + float(cfg.cross_modal_noise * speckle.normal()));
    }
  }

  Rng dropout(Rng::mix(cfg.seed, uint64_t(site_index), uint64_t(t), kDropoutSalt));
  out.optical_available = dropout.uniform() >= cfg.dropout_rate;
  if (out.optical_available) out.optical = std::move(optical);
  return out;
}

std::array<int, 3> split_sites(int num_sites) {
  if (num_sites < 3) {
    throw std::invalid_argument("split_sites: need at least 3 sites for 3 nonempty splits");
  }
  const double ratio[3] = {41.0, 15.0, 14.0};
  const double total = ratio[0] + ratio[1] + ratio[2];
  std::array<int, 3> counts{};
  std::array<double, 3> share{};
  int assigned = 0;
  for (int i = 0; i < 3; ++i) {
    share[i] = num_sites * ratio[i] / total;
    counts[i] = int(std::floor(share[i]));
    assigned += counts[i];
  }
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double fa = share[a] - std::floor(share[a]);
    const double fb = share[b] - std::floor(share[b]);
    return fa != fb ? fa > fb : a < b;
  });
  for (int r = 0; r < num_sites - assigned; ++r) counts[order[r % 3]] += 1;
  // Every split must be nonempty; steal from the largest.
  for (int i = 0; i < 3; ++i) {
    while (counts[i] == 0) {
      const int big = int(std::max_element(counts.begin(), counts.end()) - counts.begin());
      counts[big] -= 1;
      counts[i] += 1;
    }
  }
  return counts;
}

Manifest generate_dataset(const SimConfig& cfg, const std::string& out_root) {
  cfg.validate();
  const auto counts = split_sites(cfg.num_sites);

  const int tiles = cfg.num_sites * cfg.timestamps_per_site;
  std::vector<Sample> all(tiles);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < tiles; ++k) {
    const int site = k / cfg.timestamps_per_site;
    const int t = 1 + k % cfg.timestamps_per_site;
    all[k] = generate_scene(cfg, site, t);
  }

  std::map<std::string, std::vector<Sample>> splits;
  const char* names[3] = {"train", "val", "test"};
  int next = 0;
  for (int part = 0; part < 3; ++part) {
    auto& dst = splits[names[part]];
    for (int s = 0; s < counts[part]; ++s, ++next) {
      for (int t = 0; t < cfg.timestamps_per_site; ++t) {
        dst.push_back(std::move(all[next * cfg.timestamps_per_site + t]));
      }
    }
  }
  return write_dataset(out_root, splits, ChannelNorm::identity(kSarChannels),
                       ChannelNorm::identity(kOpticalChannels));
}

}  // namespace sarfuse
