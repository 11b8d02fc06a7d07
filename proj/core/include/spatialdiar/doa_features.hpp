#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spatialdiar/geometry.hpp"
#include "spatialdiar/localizer.hpp"

namespace spatialdiar {

/// Activity-probability matrix over the azimuth grid, one row per DOA frame.
/// Entries live in [0, 1]; at most n_max bins per row are nonzero.
struct DoaMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double frame_period = 0.016;  // seconds per row
  std::vector<double> values;   // row-major

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Frame-level acoustic features, shape T x D.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Caller-supplied linear map from azimuth bins to feature dimension, A x D.
struct ProjectionMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Scatters per-frame detections into the matrix: O[n, a] holds the detection
/// weight at bin a (max when several land in one bin, 0 when none).
DoaMatrix build_doa_matrix(const std::vector<std::vector<SourceDetection>>& detections,
                           const AzimuthGrid& grid, std::size_t frame_count,
                           double frame_period);

/// Nearest-neighbor upsampling to target_rows: output row t equals input row
/// floor(t * rows / target_rows), bit-identical. Requires target_rows >= rows.
DoaMatrix interpolate_nearest(const DoaMatrix& o, std::size_t target_rows);

/// Residual fusion: X' = X + (O W) / sqrt(D).
FeatureMatrix fuse_additive(const FeatureMatrix& x, const DoaMatrix& o,
                            const ProjectionMatrix& w);

/// Seeded uniform(-1, 1) projection, for tests and offline experiments.
ProjectionMatrix random_projection(std::size_t bins, std::size_t dims,
                                   std::uint64_t seed);

/// One row per frame, bin values comma-separated. binarize maps nonzero
/// entries to 1.
void write_doa_matrix_csv(std::ostream& out, const DoaMatrix& o,
                          bool binarize = false);

}  // namespace spatialdiar
