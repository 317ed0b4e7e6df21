#pragma once

#include "sarfuse/dataset.hpp"
#include "sarfuse/rng.hpp"

namespace sarfuse {

// The eight symmetries of a square patch.
enum class Dihedral {
  kIdentity = 0,
  kRot90 = 1,
  kRot180 = 2,
  kRot270 = 3,
  kFlipH = 4,       // mirror columns
  kFlipV = 5,       // mirror rows
  kTranspose = 6,
  kAntiTranspose = 7,
};

Dihedral dihedral_inverse(Dihedral d);

Raster apply_dihedral(const Raster& r, Dihedral d);

// Applies the element to every present raster; flags and ids are preserved.
Sample apply_dihedral(const Sample& s, Dihedral d);

Sample crop(const Sample& s, int top, int left, int size);

// One shared crop window of `size` x `size` across sar/optical/label.
Sample random_crop(const Sample& s, int size, Rng& rng);

// One uniformly drawn dihedral element applied to all rasters. Rejects
// non-square patches up front (rotations are undefined there).
Sample augment(const Sample& s, Rng& rng);

// DS baseline input substitution: a missing optical raster becomes all
// zeros of the expected shape. The availability flag records ground truth
// and is left untouched; multi-modal samples pass through unchanged.
Sample zero_fill_optical(const Sample& s);

}  // namespace sarfuse
