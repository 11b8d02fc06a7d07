#include "spatialdiar/doa_features.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

namespace spatialdiar {

DoaMatrix build_doa_matrix(const std::vector<std::vector<SourceDetection>>& detections,
                           const AzimuthGrid& grid, std::size_t frame_count,
                           double frame_period) {
  DoaMatrix o;
  o.rows = frame_count;
  o.cols = static_cast<std::size_t>(grid.bin_count());
  o.frame_period = frame_period;
  o.values.assign(o.rows * o.cols, 0.0);
  for (const auto& frame_dets : detections) {
    for (const auto& det : frame_dets) {
      if (det.frame < 0 || static_cast<std::size_t>(det.frame) >= frame_count)
        throw std::out_of_range("detection frame index exceeds frame_count");
      double& cell = o.at(det.frame, det.bin);
      cell = std::max(cell, det.weight);
    }
  }
  return o;
}

DoaMatrix interpolate_nearest(const DoaMatrix& o, std::size_t target_rows) {
  if (o.rows == 0) throw std::invalid_argument("cannot upsample an empty matrix");
  if (target_rows < o.rows)
    throw std::invalid_argument("target frame count must be >= source rows");
  DoaMatrix out;
  out.rows = target_rows;
  out.cols = o.cols;
  out.frame_period = o.frame_period * static_cast<double>(o.rows) / target_rows;
  out.values.resize(out.rows * out.cols);
  for (std::size_t t = 0; t < target_rows; ++t) {
    std::size_t src = t * o.rows / target_rows;  // floor rule
    std::copy_n(o.values.begin() + src * o.cols, o.cols,
                out.values.begin() + t * out.cols);
  }
  return out;
}

FeatureMatrix fuse_additive(const FeatureMatrix& x, const DoaMatrix& o,
                            const ProjectionMatrix& w) {
  if (o.cols != w.rows || x.rows != o.rows || x.cols != w.cols)
    throw std::invalid_argument("fuse_additive shape mismatch");
  const double scale = 1.0 / std::sqrt(static_cast<double>(w.cols));
  FeatureMatrix out = x;
  for (std::size_t t = 0; t < o.rows; ++t) {
    for (std::size_t a = 0; a < o.cols; ++a) {
      const double v = o.at(t, a);
      if (v == 0.0) continue;  // detection rows are sparse
      const double sv = v * scale;
      for (std::size_t d = 0; d < w.cols; ++d) out.at(t, d) += sv * w.at(a, d);
    }
  }
  return out;
}

ProjectionMatrix random_projection(std::size_t bins, std::size_t dims,
                                   std::uint64_t seed) {
  ProjectionMatrix w;
  w.rows = bins;
  w.cols = dims;
  w.values.resize(bins * dims);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& v : w.values) v = dist(rng);
  return w;
}

void write_doa_matrix_csv(std::ostream& out, const DoaMatrix& o, bool binarize) {
  for (std::size_t t = 0; t < o.rows; ++t) {
    for (std::size_t a = 0; a < o.cols; ++a) {
      if (a) out << ',';
      double v = o.at(t, a);
      if (binarize) v = v != 0.0 ? 1.0 : 0.0;
      out << v;
    }
    out << '\n';
  }
}

}  // namespace spatialdiar
