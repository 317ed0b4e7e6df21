#include "sarfuse/nn/tensor.hpp"

#include <cstring>
#include <stdexcept>

namespace sarfuse::nn {

Tensor pack(const std::vector<const Raster*>& rasters) {
  if (rasters.empty()) throw std::invalid_argument("pack: empty batch");
  const Raster& first = *rasters.front();
  Tensor t(int(rasters.size()), first.c, first.h, first.w);
  for (size_t i = 0; i < rasters.size(); ++i) {
    if (!rasters[i]->same_shape(first)) {
      throw std::invalid_argument("pack: raster shapes differ within batch");
    }
    std::memcpy(t.sample(int(i)), rasters[i]->v.data(), t.sample_size() * sizeof(float));
  }
  return t;
}

Raster unpack(const Tensor& t, int ni) {
  Raster r(t.c, t.h, t.w);
  std::memcpy(r.v.data(), t.sample(ni), t.sample_size() * sizeof(float));
  return r;
}

Tensor concat_channels(const Tensor& a, const Tensor& b) {
  if (a.n != b.n || a.h != b.h || a.w != b.w) {
    throw std::invalid_argument("concat_channels: batch/spatial shape mismatch");
  }
  Tensor out(a.n, a.c + b.c, a.h, a.w);
  for (int ni = 0; ni < a.n; ++ni) {
    std::memcpy(out.sample(ni), a.sample(ni), a.sample_size() * sizeof(float));
    std::memcpy(out.sample(ni) + a.sample_size(), b.sample(ni),
                b.sample_size() * sizeof(float));
  }
  return out;
}

void split_channels(const Tensor& dcat, Tensor& da, Tensor& db) {
  if (dcat.c != da.c + db.c || dcat.n != da.n || dcat.n != db.n) {
    throw std::invalid_argument("split_channels: shape mismatch");
  }
  for (int ni = 0; ni < dcat.n; ++ni) {
    std::memcpy(da.sample(ni), dcat.sample(ni), da.sample_size() * sizeof(float));
    std::memcpy(db.sample(ni), dcat.sample(ni) + da.sample_size(),
                db.sample_size() * sizeof(float));
  }
}

Tensor gather_samples(const Tensor& t, const std::vector<int>& idx) {
  Tensor out(int(idx.size()), t.c, t.h, t.w);
  for (size_t i = 0; i < idx.size(); ++i) {
    std::memcpy(out.sample(int(i)), t.sample(idx[i]), t.sample_size() * sizeof(float));
  }
  return out;
}

}  // namespace sarfuse::nn
