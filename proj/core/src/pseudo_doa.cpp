#include "spatialdiar/pseudo_doa.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace spatialdiar {

namespace {

constexpr int kMaxRejectionAttempts = 10000;

double reflect(double value, double bound) {
  // Reflect into [-bound, bound]; steps are small so a few passes suffice.
  for (int guard = 0; guard < 64 && std::abs(value) > bound; ++guard) {
    if (value > bound)
      value = 2.0 * bound - value;
    else if (value < -bound)
      value = -2.0 * bound - value;
  }
  return std::clamp(value, -bound, bound);
}

}  // namespace

double VadTimeline::max_offset() const {
  double end = 0.0;
  for (const auto& spk : speakers)
    for (const auto& iv : spk) end = std::max(end, iv.offset);
  return end;
}

void VadTimeline::validate() const {
  for (const auto& spk : speakers) {
    double prev_end = -1.0;
    for (const auto& iv : spk) {
      if (iv.onset < 0.0 || iv.offset < iv.onset)
        throw std::invalid_argument("vad interval must satisfy 0 <= onset <= offset");
      if (iv.onset < prev_end)
        throw std::invalid_argument("vad intervals must be sorted and disjoint");
      prev_end = iv.offset;
    }
  }
}

VadTimeline vad_from_segments(const SpeakerSegments& segments) {
  std::vector<std::string> order;
  std::vector<std::vector<VadTimeline::Interval>> raw;
  for (const auto& seg : segments.segments) {
    auto it = std::find(order.begin(), order.end(), seg.speaker);
    std::size_t idx;
    if (it == order.end()) {
      order.push_back(seg.speaker);
      raw.emplace_back();
      idx = raw.size() - 1;
    } else {
      idx = static_cast<std::size_t>(it - order.begin());
    }
    raw[idx].push_back({seg.onset, seg.onset + seg.duration});
  }
  VadTimeline vad;
  vad.speakers.resize(raw.size());
  for (std::size_t s = 0; s < raw.size(); ++s) {
    auto& ivs = raw[s];
    std::sort(ivs.begin(), ivs.end(),
              [](const auto& a, const auto& b) { return a.onset < b.onset; });
    for (const auto& iv : ivs) {
      auto& merged = vad.speakers[s];
      if (!merged.empty() && iv.onset <= merged.back().offset)
        merged.back().offset = std::max(merged.back().offset, iv.offset);
      else
        merged.push_back(iv);
    }
  }
  vad.validate();
  return vad;
}

PseudoDoaResult simulate_pseudo_doa(const VadTimeline& vad,
                                    const PseudoDoaConfig& cfg,
                                    double frame_period, double duration,
                                    const AzimuthGrid& grid) {
  vad.validate();
  if (frame_period <= 0.0) throw std::invalid_argument("frame_period must be > 0");
  if (duration + 1e-9 < vad.max_offset())
    throw std::invalid_argument("duration does not cover all vad intervals");
  const int speakers = vad.speaker_count();
  if (speakers > 0 && cfg.min_separation_deg * speakers > 360.0)
    throw std::invalid_argument(
        "min_separation_deg * speaker count exceeds 360 degrees");

  const std::size_t frames =
      static_cast<std::size_t>(std::ceil(duration / frame_period - 1e-9));

  PseudoDoaResult result;
  result.matrix.rows = frames;
  result.matrix.cols = static_cast<std::size_t>(grid.bin_count());
  result.matrix.frame_period = frame_period;
  result.matrix.values.assign(frames * result.matrix.cols, 0.0);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uniform_az(-180.0, 180.0);
  std::normal_distribution<double> step(0.0, cfg.jitter_std_deg);

  // Base azimuths, rejection-sampled against the speakers placed so far.
  std::vector<double> base(speakers);
  for (int s = 0; s < speakers; ++s) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
      double candidate = uniform_az(rng);
      bool ok = true;
      for (int q = 0; q < s && ok; ++q)
        ok = circular_distance_deg(candidate, base[q]) >= cfg.min_separation_deg;
      if (ok) {
        base[s] = candidate;
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::runtime_error(
          "pseudo-doa separation constraint unsatisfiable after 10000 attempts");
  }

  // Walk each speaker over its active frames. A frame is active when the
  // speaker's interval covers the frame center.
  struct Active {
    int speaker;
    double azimuth_deg;
    double remaining;  // seconds left in the current interval
  };
  std::vector<std::vector<Active>> per_frame(frames);
  for (int s = 0; s < speakers; ++s) {
    double jitter = 0.0;
    std::size_t iv = 0;
    const auto& intervals = vad.speakers[s];
    for (std::size_t t = 0; t < frames; ++t) {
      const double center = (static_cast<double>(t) + 0.5) * frame_period;
      while (iv < intervals.size() && intervals[iv].offset <= center) ++iv;
      if (iv >= intervals.size() || center < intervals[iv].onset) continue;
      jitter = reflect(jitter + step(rng), cfg.max_drift_deg);
      const double azimuth =
          normalize_azimuth((base[s] + jitter) * kPi / 180.0) * 180.0 / kPi;
      per_frame[t].push_back({s, azimuth, intervals[iv].offset - center});
      result.tracks.push_back({t, s, azimuth});
    }
  }

  for (std::size_t t = 0; t < frames; ++t) {
    auto& active = per_frame[t];
    if (active.size() > 2) {
      // Keep the two with the most remaining segment; ties keep the lower
      // speaker index.
      std::stable_sort(active.begin(), active.end(),
                       [](const Active& a, const Active& b) {
                         return a.remaining > b.remaining;
                       });
      active.resize(2);
    }
    for (const auto& a : active) {
      const int bin = grid.quantize_deg(a.azimuth_deg);
      result.matrix.at(t, static_cast<std::size_t>(bin)) = 1.0;
    }
  }

  std::sort(result.tracks.begin(), result.tracks.end(),
            [](const auto& a, const auto& b) {
              return a.frame != b.frame ? a.frame < b.frame : a.speaker < b.speaker;
            });
  return result;
}

}  // namespace spatialdiar
