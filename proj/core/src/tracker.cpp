#include "spatialdiar/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spatialdiar {

namespace {

double mean_deg(double sx, double sy) {
  return std::atan2(sy, sx) * 180.0 / kPi;
}

struct LiveTrack {
  Track track;
  double sx = 0.0;
  double sy = 0.0;

  double mean() const { return mean_deg(sx, sy); }
  void add(int frame, double azimuth_deg, double weight) {
    track.points.push_back({frame, azimuth_deg, weight});
    sx += std::cos(azimuth_deg * kPi / 180.0);
    sy += std::sin(azimuth_deg * kPi / 180.0);
  }
};

}  // namespace

void TrackerConfig::validate() const {
  if (gate_deg <= 0.0) throw std::invalid_argument("gate_deg must be > 0");
  if (merge_threshold_deg > gate_deg)
    throw std::invalid_argument("merge_threshold_deg must be <= gate_deg");
  if (max_gap_frames < 0) throw std::invalid_argument("max_gap_frames must be >= 0");
  if (min_track_frames < 1)
    throw std::invalid_argument("min_track_frames must be >= 1");
}

double Track::mean_azimuth_deg() const {
  double sx = 0.0, sy = 0.0;
  for (const auto& p : points) {
    sx += std::cos(p.azimuth_deg * kPi / 180.0);
    sy += std::sin(p.azimuth_deg * kPi / 180.0);
  }
  return mean_deg(sx, sy);
}

std::vector<Track> associate_detections(
    const std::vector<std::vector<SourceDetection>>& detections,
    const TrackerConfig& cfg) {
  cfg.validate();

  std::vector<LiveTrack> live;
  std::vector<Track> closed;
  int next_id = 0;

  auto close_idle = [&](int frame) {
    for (auto it = live.begin(); it != live.end();) {
      if (frame - it->track.last_frame() > cfg.max_gap_frames) {
        closed.push_back(std::move(it->track));
        it = live.erase(it);
      } else {
        ++it;
      }
    }
  };

  for (int n = 0; n < static_cast<int>(detections.size()); ++n) {
    close_idle(n);
    const auto& dets = detections[n];
    if (dets.empty()) continue;

    struct Candidate {
      double dist;
      int track;
      int det;
    };
    std::vector<Candidate> candidates;
    for (int t = 0; t < static_cast<int>(live.size()); ++t) {
      for (int d = 0; d < static_cast<int>(dets.size()); ++d) {
        double dist = circular_distance_deg(live[t].mean(), dets[d].azimuth_deg);
        if (dist <= cfg.gate_deg) candidates.push_back({dist, t, d});
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.dist != b.dist) return a.dist < b.dist;
                if (a.track != b.track) return a.track < b.track;
                return a.det < b.det;
              });

    std::vector<char> track_used(live.size(), 0), det_used(dets.size(), 0);
    for (const auto& c : candidates) {
      if (track_used[c.track] || det_used[c.det]) continue;
      track_used[c.track] = det_used[c.det] = 1;
      live[c.track].add(n, dets[c.det].azimuth_deg, dets[c.det].weight);
    }
    for (int d = 0; d < static_cast<int>(dets.size()); ++d) {
      if (det_used[d]) continue;
      LiveTrack fresh;
      fresh.track.id = next_id++;
      fresh.add(n, dets[d].azimuth_deg, dets[d].weight);
      live.push_back(std::move(fresh));
    }
  }

  for (auto& t : live) closed.push_back(std::move(t.track));

  std::vector<Track> kept;
  for (auto& t : closed)
    if (static_cast<int>(t.points.size()) >= cfg.min_track_frames)
      kept.push_back(std::move(t));
  std::sort(kept.begin(), kept.end(),
            [](const Track& a, const Track& b) { return a.id < b.id; });
  return kept;
}

SpeakerSegments tracks_to_segments(const std::vector<Track>& tracks,
                                   const TrackerConfig& cfg, double frame_period,
                                   const std::string& recording_id) {
  cfg.validate();
  if (frame_period <= 0.0) throw std::invalid_argument("frame_period must be > 0");

  std::vector<const Track*> ordered;
  for (const auto& t : tracks)
    if (!t.points.empty()) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(), [](const Track* a, const Track* b) {
    if (a->first_frame() != b->first_frame())
      return a->first_frame() < b->first_frame();
    return a->id < b->id;
  });

  struct Speaker {
    double sx = 0.0;
    double sy = 0.0;
    std::vector<std::pair<int, int>> spans;  // [first, last] frames
  };
  std::vector<Speaker> speakers;
  for (const Track* t : ordered) {
    const double mean = t->mean_azimuth_deg();
    int target = -1;
    for (int s = 0; s < static_cast<int>(speakers.size()); ++s) {
      double smean = mean_deg(speakers[s].sx, speakers[s].sy);
      if (circular_distance_deg(mean, smean) < cfg.merge_threshold_deg) {
        target = s;
        break;
      }
    }
    if (target < 0) {
      speakers.emplace_back();
      target = static_cast<int>(speakers.size()) - 1;
    }
    auto& spk = speakers[target];
    for (const auto& p : t->points) {
      spk.sx += std::cos(p.azimuth_deg * kPi / 180.0);
      spk.sy += std::sin(p.azimuth_deg * kPi / 180.0);
    }
    spk.spans.emplace_back(t->first_frame(), t->last_frame());
  }

  SpeakerSegments out;
  out.recording_id = recording_id;
  for (int s = 0; s < static_cast<int>(speakers.size()); ++s) {
    auto& spans = speakers[s].spans;
    std::sort(spans.begin(), spans.end());
    std::vector<std::pair<int, int>> merged;
    for (const auto& span : spans) {
      if (!merged.empty() && span.first - merged.back().second - 1 <= cfg.max_gap_frames)
        merged.back().second = std::max(merged.back().second, span.second);
      else
        merged.push_back(span);
    }
    char label[16];
    std::snprintf(label, sizeof(label), "spk%02d", s);
    for (const auto& [first, last] : merged)
      out.segments.push_back({label, first * frame_period,
                              (last - first + 1) * frame_period});
  }
  std::sort(out.segments.begin(), out.segments.end(),
            [](const SpeakerSegments::Segment& a, const SpeakerSegments::Segment& b) {
              if (a.onset != b.onset) return a.onset < b.onset;
              return a.speaker < b.speaker;
            });
  return out;
}

}  // namespace spatialdiar
