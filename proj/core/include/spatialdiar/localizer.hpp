#pragma once

#include <utility>
#include <vector>

#include "spatialdiar/dpipd.hpp"
#include "spatialdiar/geometry.hpp"

namespace spatialdiar {

/// Candidate steering fields r(theta) precomputed at every grid bin center.
/// Built once per (geometry, frequency list, grid) and shared read-only.
struct SteeringTable {
  AzimuthGrid grid;
  std::vector<double> freqs;
  int pair_count = 0;
  std::vector<DpIpdField> fields;  // one per bin

  int bin_count() const { return static_cast<int>(fields.size()); }
};

SteeringTable build_steering_table(const ArrayGeometry& geom,
                                   const std::vector<double>& freqs,
                                   const AzimuthGrid& grid);

/// Steered-response power over the candidate grid for one frame:
/// P'(theta) = (2 / (M(M-1)F)) sum_{m<m'} Re{ R^H r_{mm'}(theta) }.
struct SpatialSpectrum {
  AzimuthGrid grid;
  std::vector<double> values;  // per bin
};

struct SourceDetection {
  int frame = 0;
  int bin = 0;
  double azimuth_deg = 0.0;  // bin center
  double weight = 0.0;       // clipped to [0, 1]
};

/// Iterative detection-and-removal parameters. n_max caps detections per
/// frame, w_min stops the loop, min_separation_bins keeps successive peaks
/// apart (circular bin distance).
struct IdlConfig {
  int n_max = 2;
  double w_min = 0.15;
  int min_separation_bins = 2;

  void validate() const;
};

/// Throws std::invalid_argument when the field and steering layouts differ.
SpatialSpectrum srp_spectrum(const DpIpdField& rhat, const SteeringTable& steering);

/// Argmax bin and its value; ties break toward the lowest bin index.
std::pair<int, double> detect_peak(const SpatialSpectrum& spec);

/// Weight of a detected source: the spectrum value at its bin, clamped to
/// [0, 1]. Recovers beta exactly when rhat = beta * r(theta_hat).
double estimate_weight(const DpIpdField& rhat, int bin, const SteeringTable& steering);

/// Deflation step: rhat <- rhat - beta * r(theta_hat), entrywise.
void remove_source(DpIpdField& rhat, int bin, double beta, const SteeringTable& steering);

/// Full IDL loop for one frame. Detections are sorted by descending weight;
/// silence yields an empty list.
std::vector<SourceDetection> idl_localize(const DpIpdField& rhat,
                                          const IdlConfig& cfg,
                                          const SteeringTable& steering,
                                          int frame = 0);

/// Runs IDL over every frame of a provider, sequentially (providers may be
/// stateful/causal).
std::vector<std::vector<SourceDetection>> localize_frames(
    DpIpdProvider& provider, const SteeringTable& steering, const IdlConfig& cfg);

int circular_bin_distance(int a, int b, int bin_count);

}  // namespace spatialdiar
