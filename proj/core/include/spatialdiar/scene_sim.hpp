#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "spatialdiar/dpipd.hpp"
#include "spatialdiar/geometry.hpp"
#include "spatialdiar/rttm.hpp"
#include "spatialdiar/stft.hpp"
#include "spatialdiar/wav.hpp"

namespace spatialdiar {

struct SourceSpec {
  enum class Kind { kNoise, kTone, kFile };

  double azimuth_deg = 0.0;
  Kind kind = Kind::kNoise;
  double tone_hz = 440.0;
  std::string file;  // mono signal; looped when shorter than the scene
  struct Interval {
    double onset = 0.0;
    double offset = 0.0;
  };
  std::vector<Interval> active;
};

/// Far-field anechoic test scene: known azimuths, activities and SNR.
struct SceneSpec {
  std::string id = "scene";
  ArrayGeometry geometry;
  std::vector<SourceSpec> sources;
  double snr_db = std::numeric_limits<double>::infinity();  // inf = noiseless
  std::uint64_t seed = 0;
  double duration = 10.0;  // seconds
  int sample_rate = 16000;
};

struct RenderedScene {
  MultiChannelAudio audio;
  std::vector<SourceActivity> activity;  // per STFT frame, beta = 1 when active
  SpeakerSegments reference;             // speakers "spk00", "spk01", ...
};

/// Renders the scene: each source is steered to every microphone with a
/// 64-tap windowed-sinc fractional delay, sources are summed, and white
/// sensor noise is added to meet snr_db against the mixed signal power.
/// Deterministic for a fixed seed.
RenderedScene render_scene(const SceneSpec& spec, const StftConfig& stft_cfg);

/// Plain-text scene description, one `key value` or `source key=val ...`
/// per line; see the README for the format.
SceneSpec parse_scene_file(const std::string& path);

/// Applies a (possibly fractional) delay in samples with a windowed-sinc
/// interpolator. Negative delays advance the signal; output length matches
/// the input, edges taper to zero.
std::vector<double> fractional_delay(const std::vector<double>& x,
                                     double delay_samples, int taps = 64);

}  // namespace spatialdiar
