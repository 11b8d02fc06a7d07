#pragma once

#include <string>
#include <vector>

#include "spatialdiar/localizer.hpp"
#include "spatialdiar/rttm.hpp"

namespace spatialdiar {

struct TrackerConfig {
  double gate_deg = 15.0;          // association gate around the track mean
  int max_gap_frames = 25;         // idle frames before a track closes
  int min_track_frames = 12;       // shorter tracks are discarded
  double merge_threshold_deg = 10.0;  // tracks closer than this share a speaker

  void validate() const;
};

/// A frame-ordered run of detections attributed to one physical source.
struct Track {
  int id = 0;
  struct Point {
    int frame = 0;
    double azimuth_deg = 0.0;
    double weight = 0.0;
  };
  std::vector<Point> points;

  int first_frame() const { return points.front().frame; }
  int last_frame() const { return points.back().frame; }
  /// Circular mean over all points.
  double mean_azimuth_deg() const;
};

/// Greedy gated nearest-neighbor association of per-frame detections against
/// each live track's running circular mean. Unmatched detections seed new
/// tracks; tracks idle longer than max_gap_frames close; tracks with fewer
/// than min_track_frames points are dropped.
std::vector<Track> associate_detections(
    const std::vector<std::vector<SourceDetection>>& detections,
    const TrackerConfig& cfg);

/// Groups tracks whose circular means lie within merge_threshold_deg into one
/// speaker, bridges same-speaker gaps up to max_gap_frames, and emits labeled
/// segments. Speaker labels are "spk%02d" in order of first appearance.
SpeakerSegments tracks_to_segments(const std::vector<Track>& tracks,
                                   const TrackerConfig& cfg, double frame_period,
                                   const std::string& recording_id);

}  // namespace spatialdiar
