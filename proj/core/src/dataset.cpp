#include "sarfuse/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace sarfuse {

namespace {

void apply_norm(Raster& r, const ChannelNorm& norm, const std::string& what) {
  if (int(norm.offset.size()) != r.c || int(norm.scale.size()) != r.c) {
    throw FormatError("normalization for " + what + " expects " +
                      std::to_string(norm.offset.size()) + " channels, raster has " +
                      std::to_string(r.c));
  }
  if (norm.is_identity()) return;
  for (int c = 0; c < r.c; ++c) {
    const float off = float(norm.offset[c]);
    const float sc = float(norm.scale[c]);
    float* p = r.channel(c);
    const size_t n = size_t(r.h) * r.w;
    for (size_t i = 0; i < n; ++i) p[i] = (p[i] - off) * sc;
  }
  if (norm.clip_min || norm.clip_max) {
    const float lo = norm.clip_min ? float(*norm.clip_min) : -std::numeric_limits<float>::infinity();
    const float hi = norm.clip_max ? float(*norm.clip_max) : std::numeric_limits<float>::infinity();
    for (float& x : r.v) x = std::clamp(x, lo, hi);
  }
}

json norm_to_json(const ChannelNorm& n) {
  json j{{"offset", n.offset}, {"scale", n.scale}};
  if (n.clip_min) j["clip_min"] = *n.clip_min;
  if (n.clip_max) j["clip_max"] = *n.clip_max;
  return j;
}

ChannelNorm norm_from_json(const json& j) {
  ChannelNorm n;
  n.offset = j.at("offset").get<std::vector<double>>();
  n.scale = j.at("scale").get<std::vector<double>>();
  if (j.contains("clip_min")) n.clip_min = j.at("clip_min").get<double>();
  if (j.contains("clip_max")) n.clip_max = j.at("clip_max").get<double>();
  if (n.offset.size() != n.scale.size()) {
    throw FormatError("normalization offset/scale length mismatch");
  }
  return n;
}

std::string record_name(const SampleRecord& rec) {
  return rec.site_id + "/t" + std::to_string(rec.timestamp_index);
}

}  // namespace

ChannelNorm ChannelNorm::identity(int channels) {
  ChannelNorm n;
  n.offset.assign(channels, 0.0);
  n.scale.assign(channels, 1.0);
  return n;
}

bool ChannelNorm::is_identity() const {
  if (clip_min || clip_max) return false;
  return std::all_of(offset.begin(), offset.end(), [](double x) { return x == 0.0; }) &&
         std::all_of(scale.begin(), scale.end(), [](double x) { return x == 1.0; });
}

Raster read_raster(const std::string& path, int channels, int height, int width) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open raster file: " + path);
  Raster r(channels, height, width);
  in.read(reinterpret_cast<char*>(r.v.data()), std::streamsize(r.size() * sizeof(float)));
  if (in.gcount() != std::streamsize(r.size() * sizeof(float))) {
    throw LoadError("raster file truncated: " + path);
  }
  char extra;
  if (in.read(&extra, 1)) throw LoadError("raster file larger than manifest shape: " + path);
  return r;
}

void write_raster(const std::string& path, const Raster& r) {
  fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw LoadError("cannot open raster file for writing: " + path);
  out.write(reinterpret_cast<const char*>(r.v.data()), std::streamsize(r.size() * sizeof(float)));
  if (!out) throw LoadError("short write: " + path);
}

Manifest Manifest::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open manifest: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("manifest is not valid JSON: " + path + ": " + e.what());
  }
  Manifest m;
  try {
    m.format_version = j.at("format_version").get<std::string>();
    if (m.format_version != kManifestVersion) {
      throw FormatError("manifest format_version '" + m.format_version +
                        "' unsupported, expected '" + kManifestVersion + "'");
    }
    m.sar_norm = norm_from_json(j.at("normalization").at("sar"));
    m.optical_norm = norm_from_json(j.at("normalization").at("optical"));
    for (const auto& [split, recs] : j.at("splits").items()) {
      auto& out = m.splits[split];
      for (const auto& rj : recs) {
        SampleRecord rec;
        rec.site_id = rj.at("site_id").get<std::string>();
        rec.timestamp_index = rj.at("timestamp_index").get<int>();
        rec.height = rj.at("height").get<int>();
        rec.width = rj.at("width").get<int>();
        rec.sar_path = rj.at("sar").get<std::string>();
        rec.label_path = rj.at("label").get<std::string>();
        rec.optical_available = rj.at("optical_available").get<bool>();
        if (!rj.at("optical").is_null()) {
          rec.optical_path = rj.at("optical").get<std::string>();
        }
        if (rec.optical_available != rec.optical_path.has_value()) {
          throw FormatError("record " + record_name(rec) +
                            ": optical_available flag disagrees with optical path");
        }
        out.push_back(std::move(rec));
      }
    }
  } catch (const json::exception& e) {
    throw FormatError("manifest schema mismatch (expected version '" +
                      std::string(kManifestVersion) + "'): " + e.what());
  }
  m.validate();
  return m;
}

void Manifest::write(const std::string& path) const {
  validate();
  json j;
  j["format_version"] = format_version;
  j["normalization"] = {{"sar", norm_to_json(sar_norm)}, {"optical", norm_to_json(optical_norm)}};
  json splits_j = json::object();
  for (const auto& [split, recs] : splits) {
    json arr = json::array();
    for (const auto& rec : recs) {
      json rj{{"site_id", rec.site_id},
              {"timestamp_index", rec.timestamp_index},
              {"height", rec.height},
              {"width", rec.width},
              {"sar", rec.sar_path},
              {"label", rec.label_path},
              {"optical_available", rec.optical_available}};
      rj["optical"] = rec.optical_path ? json(*rec.optical_path) : json(nullptr);
      arr.push_back(std::move(rj));
    }
    splits_j[split] = std::move(arr);
  }
  j["splits"] = std::move(splits_j);
  fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw LoadError("cannot write manifest: " + path);
  out << j.dump(2) << "\n";
}

void Manifest::validate() const {
  std::map<std::string, std::string> site_split;
  std::set<std::pair<std::string, int>> seen;
  for (const auto& [split, recs] : splits) {
    for (const auto& rec : recs) {
      auto [it, inserted] = site_split.emplace(rec.site_id, split);
      if (!inserted && it->second != split) {
        throw FormatError("site " + rec.site_id + " appears in splits '" + it->second +
                          "' and '" + split + "' (split must be by site)");
      }
      if (!seen.emplace(rec.site_id, rec.timestamp_index).second) {
        throw FormatError("duplicate sample record " + record_name(rec));
      }
      if (rec.height <= 0 || rec.width <= 0) {
        throw FormatError("record " + record_name(rec) + ": non-positive shape");
      }
    }
  }
}

Dataset load_dataset(const std::string& root, const std::string& split) {
  const fs::path root_path(root);
  Manifest m = Manifest::read((root_path / "manifest.json").string());
  auto it = m.splits.find(split);
  if (it == m.splits.end()) {
    throw LoadError("split '" + split + "' not present in manifest at " + root);
  }
  std::vector<Sample> samples;
  samples.reserve(it->second.size());
  for (const auto& rec : it->second) {
    Sample s;
    s.site_id = rec.site_id;
    s.timestamp_index = rec.timestamp_index;
    s.optical_available = rec.optical_available;
    try {
      s.sar = read_raster((root_path / rec.sar_path).string(), kSarChannels, rec.height,
                          rec.width);
      s.label = read_raster((root_path / rec.label_path).string(), 1, rec.height, rec.width);
      if (rec.optical_path) {
        s.optical = read_raster((root_path / *rec.optical_path).string(), kOpticalChannels,
                                rec.height, rec.width);
      }
    } catch (const LoadError& e) {
      throw LoadError("record " + record_name(rec) + ": " + e.what());
    }
    apply_norm(s.sar, m.sar_norm, "sar");
    if (s.optical) apply_norm(*s.optical, m.optical_norm, "optical");

    if (!all_finite(s.sar) || !all_finite(s.label) ||
        (s.optical && !all_finite(*s.optical))) {
      throw LoadError("record " + record_name(rec) + ": non-finite raster values");
    }
    for (float y : s.label.v) {
      if (y != 0.f && y != 1.f) {
        throw LoadError("record " + record_name(rec) + ": label values must be 0 or 1");
      }
    }
    samples.push_back(std::move(s));
  }
  return Dataset(split, std::move(samples));
}

Manifest write_dataset(const std::string& root,
                       const std::map<std::string, std::vector<Sample>>& splits,
                       const ChannelNorm& sar_norm, const ChannelNorm& optical_norm) {
  const fs::path root_path(root);
  Manifest m;
  m.sar_norm = sar_norm;
  m.optical_norm = optical_norm;
  char name[32];
  for (const auto& [split, samples] : splits) {
    auto& recs = m.splits[split];
    for (const Sample& s : samples) {
      SampleRecord rec;
      rec.site_id = s.site_id;
      rec.timestamp_index = s.timestamp_index;
      rec.height = s.height();
      rec.width = s.width();
      rec.optical_available = s.optical_available;
      std::snprintf(name, sizeof name, "t%02d", s.timestamp_index);
      const std::string stem = s.site_id + "/" + name;
      rec.sar_path = stem + "_sar.bin";
      rec.label_path = stem + "_label.bin";
      write_raster((root_path / rec.sar_path).string(), s.sar);
      write_raster((root_path / rec.label_path).string(), s.label);
      if (s.optical) {
        rec.optical_path = stem + "_optical.bin";
        write_raster((root_path / *rec.optical_path).string(), *s.optical);
      }
      recs.push_back(std::move(rec));
    }
  }
  m.write((root_path / "manifest.json").string());
  return m;
}

}  // namespace sarfuse
