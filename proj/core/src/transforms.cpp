#include "sarfuse/transforms.hpp"

#include <stdexcept>

namespace sarfuse {

namespace {

// Source coordinates for destination (i, j) under each element.
inline void source_coords(Dihedral d, int i, int j, int sh, int sw, int& si, int& sj) {
  switch (d) {
    case Dihedral::kIdentity:      si = i;          sj = j;          break;
    case Dihedral::kRot90:         si = sh - 1 - j; sj = i;          break;
    case Dihedral::kRot180:        si = sh - 1 - i; sj = sw - 1 - j; break;
    case Dihedral::kRot270:        si = j;          sj = sw - 1 - i; break;
    case Dihedral::kFlipH:         si = i;          sj = sw - 1 - j; break;
    case Dihedral::kFlipV:         si = sh - 1 - i; sj = j;          break;
    case Dihedral::kTranspose:     si = j;          sj = i;          break;
    case Dihedral::kAntiTranspose: si = sh - 1 - j; sj = sw - 1 - i; break;
  }
}

inline bool swaps_axes(Dihedral d) {
  return d == Dihedral::kRot90 || d == Dihedral::kRot270 ||
         d == Dihedral::kTranspose || d == Dihedral::kAntiTranspose;
}

}  // namespace

Dihedral dihedral_inverse(Dihedral d) {
  switch (d) {
    case Dihedral::kRot90:  return Dihedral::kRot270;
    case Dihedral::kRot270: return Dihedral::kRot90;
    default:                return d;  // all other elements are involutions
  }
}

Raster apply_dihedral(const Raster& r, Dihedral d) {
  const bool swap = swaps_axes(d);
  const int oh = swap ? r.w : r.h;
  const int ow = swap ? r.h : r.w;
  Raster out(r.c, oh, ow);
  for (int c = 0; c < r.c; ++c) {
    for (int i = 0; i < oh; ++i) {
      for (int j = 0; j < ow; ++j) {
        int si = 0, sj = 0;
        source_coords(d, i, j, r.h, r.w, si, sj);
        out.at(c, i, j) = r.at(c, si, sj);
      }
    }
  }
  return out;
}

Sample apply_dihedral(const Sample& s, Dihedral d) {
  Sample out = s;
  out.sar = apply_dihedral(s.sar, d);
  out.label = apply_dihedral(s.label, d);
  if (s.optical) out.optical = apply_dihedral(*s.optical, d);
  return out;
}

Sample crop(const Sample& s, int top, int left, int size) {
  Sample out = s;
  out.sar = crop(s.sar, top, left, size, size);
  out.label = crop(s.label, top, left, size, size);
  if (s.optical) out.optical = crop(*s.optical, top, left, size, size);
  return out;
}

Sample random_crop(const Sample& s, int size, Rng& rng) {
  if (size <= 0) throw std::invalid_argument("random_crop: size must be positive");
  if (size > s.height() || size > s.width()) {
    throw std::invalid_argument("random_crop: size " + std::to_string(size) +
                                " exceeds sample extent " + std::to_string(s.height()) + "x" +
                                std::to_string(s.width()));
  }
  const int top = int(rng.uniform_int(uint64_t(s.height() - size + 1)));
  const int left = int(rng.uniform_int(uint64_t(s.width() - size + 1)));
  return crop(s, top, left, size);
}

Sample augment(const Sample& s, Rng& rng) {
  if (s.height() != s.width()) {
    throw std::invalid_argument("augment: requires a square patch, got " +
                                std::to_string(s.height()) + "x" + std::to_string(s.width()));
  }
  const auto d = Dihedral(rng.uniform_int(8));
  return apply_dihedral(s, d);
}

Sample zero_fill_optical(const Sample& s) {
  if (s.optical) return s;
  Sample out = s;
  out.optical = Raster(kOpticalChannels, s.height(), s.width(), 0.f);
  return out;
}

}  // namespace sarfuse
