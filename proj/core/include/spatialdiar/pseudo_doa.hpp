#pragma once

#include <cstdint>
#include <vector>

#include "spatialdiar/doa_features.hpp"
#include "spatialdiar/geometry.hpp"
#include "spatialdiar/rttm.hpp"

namespace spatialdiar {

/// Per-speaker voice-activity intervals. Within a speaker the intervals are
/// sorted and non-overlapping.
struct VadTimeline {
  struct Interval {
    double onset = 0.0;
    double offset = 0.0;
  };
  std::vector<std::vector<Interval>> speakers;

  int speaker_count() const { return static_cast<int>(speakers.size()); }
  double max_offset() const;
  void validate() const;
};

/// Builds a timeline from diarization segments; speaker order follows first
/// appearance and overlapping same-speaker segments are merged.
VadTimeline vad_from_segments(const SpeakerSegments& segments);

struct PseudoDoaConfig {
  std::uint64_t seed = 0;
  double min_separation_deg = 20.0;  // pairwise circular separation of bases
  double jitter_std_deg = 1.0;       // random-walk step per active frame
  double max_drift_deg = 10.0;       // walk reflected at +/- this drift
};

struct PseudoDoaResult {
  DoaMatrix matrix;
  struct TrackPoint {
    std::size_t frame = 0;
    int speaker = 0;
    double azimuth_deg = 0.0;
  };
  std::vector<TrackPoint> tracks;  // sorted by (frame, speaker)
};

/// Assigns each speaker a random base azimuth (rejection-sampled so bases sit
/// >= min_separation_deg apart), walks it with reflected Gaussian jitter on
/// active frames, and writes 1.0 at the quantized azimuth of each active
/// speaker. Rows keep at most 2 nonzero bins: when more speakers overlap, the
/// ones with the shortest remaining segment are dropped. Bit-reproducible for
/// a fixed seed. Throws when the separation constraint cannot be satisfied
/// within 10,000 draws per speaker.
PseudoDoaResult simulate_pseudo_doa(const VadTimeline& vad,
                                    const PseudoDoaConfig& cfg,
                                    double frame_period, double duration,
                                    const AzimuthGrid& grid = {});

}  // namespace spatialdiar
