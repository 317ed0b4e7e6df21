#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarfuse/raster.hpp"

namespace sarfuse {

inline constexpr int kSarChannels = 2;      // VV, VH backscatter
inline constexpr int kOpticalChannels = 4;  // blue, green, red, near-infrared
inline constexpr const char* kManifestVersion = "1";

// A raster file failed to read or disagrees with its manifest record.
struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The manifest itself does not match the expected schema.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One timestamp of one site: SAR raster, optional optical raster, label mask.
struct Sample {
  Raster sar;                     // 2 x H x W
  std::optional<Raster> optical;  // 4 x H x W when available
  Raster label;                   // 1 x H x W, values in {0, 1}
  bool optical_available = false;
  std::string site_id;
  int timestamp_index = 0;  // t in [1, n]

  int height() const { return sar.h; }
  int width() const { return sar.w; }
};

// Per-channel linear normalization applied on load:
//   value = (raw - offset[c]) * scale[c], then optionally clipped.
struct ChannelNorm {
  std::vector<double> offset, scale;
  std::optional<double> clip_min, clip_max;

  static ChannelNorm identity(int channels);
  bool is_identity() const;
};

struct SampleRecord {
  std::string site_id;
  int timestamp_index = 0;
  int height = 0, width = 0;
  std::string sar_path, label_path;  // relative to the dataset root
  std::optional<std::string> optical_path;
  bool optical_available = false;
};

struct Manifest {
  std::string format_version = kManifestVersion;
  std::map<std::string, std::vector<SampleRecord>> splits;
  ChannelNorm sar_norm = ChannelNorm::identity(kSarChannels);
  ChannelNorm optical_norm = ChannelNorm::identity(kOpticalChannels);

  static Manifest read(const std::string& path);
  void write(const std::string& path) const;

  // Schema sanity plus split disjointness: a site_id lives in exactly one
  // split and no (site, timestamp) record repeats.
  void validate() const;
};

// Split-aware, index-addressable, in-memory sample collection. Immutable
// after load; safe to read from multiple threads.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::string split, std::vector<Sample> samples)
      : split_(std::move(split)), samples_(std::move(samples)) {}

  size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  const Sample& operator[](size_t i) const { return samples_[i]; }
  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }
  const std::string& split() const { return split_; }

 private:
  std::string split_;
  std::vector<Sample> samples_;
};

// Raw little-endian float32, C-order (channel, row, column), one file per
// raster.
Raster read_raster(const std::string& path, int channels, int height, int width);
void write_raster(const std::string& path, const Raster& r);

// Loads one split described by <root>/manifest.json. Normalization from the
// manifest is already applied to the returned samples.
Dataset load_dataset(const std::string& root, const std::string& split);

// Writes rasters plus manifest under root. Sample rasters are stored as-is;
// the given normalizations are recorded in the manifest for loaders.
Manifest write_dataset(const std::string& root,
                       const std::map<std::string, std::vector<Sample>>& splits,
                       const ChannelNorm& sar_norm,
                       const ChannelNorm& optical_norm);

}  // namespace sarfuse
