#include "spatialdiar/scene_sim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace spatialdiar {

namespace {

double sinc(double u) {
  if (u == 0.0) return 1.0;
  const double pu = kPi * u;
  return std::sin(pu) / pu;
}

std::vector<SourceSpec::Interval> parse_intervals(const std::string& text,
                                                  const std::string& where) {
  std::vector<SourceSpec::Interval> intervals;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error(where + ": interval must be onset:offset, got '" +
                               item + "'");
    SourceSpec::Interval iv;
    try {
      iv.onset = std::stod(item.substr(0, colon));
      iv.offset = std::stod(item.substr(colon + 1));
    } catch (...) {
      throw std::runtime_error(where + ": bad interval '" + item + "'");
    }
    if (iv.offset < iv.onset)
      throw std::runtime_error(where + ": interval offset before onset");
    intervals.push_back(iv);
  }
  return intervals;
}

std::vector<double> source_signal(const SourceSpec& src, std::size_t samples,
                                  int sample_rate, std::mt19937_64& rng) {
  std::vector<double> x(samples, 0.0);
  switch (src.kind) {
    case SourceSpec::Kind::kNoise: {
      std::normal_distribution<double> dist(0.0, 1.0);
      for (auto& v : x) v = dist(rng);
      break;
    }
    case SourceSpec::Kind::kTone: {
      const double w = 2.0 * kPi * src.tone_hz / sample_rate;
      for (std::size_t t = 0; t < samples; ++t) x[t] = std::sin(w * t);
      break;
    }
    case SourceSpec::Kind::kFile: {
      MultiChannelAudio file = read_wav(src.file);
      if (file.sample_rate != sample_rate)
        throw std::runtime_error(src.file + ": sample rate " +
                                 std::to_string(file.sample_rate) +
                                 " does not match scene rate " +
                                 std::to_string(sample_rate));
      const auto& mono = file.channels.at(0);
      if (mono.empty()) throw std::runtime_error(src.file + ": empty signal");
      for (std::size_t t = 0; t < samples; ++t) x[t] = mono[t % mono.size()];
      break;
    }
  }
  return x;
}

}  // namespace

std::vector<double> fractional_delay(const std::vector<double>& x,
                                     double delay_samples, int taps) {
  if (taps < 2 || taps % 2 != 0)
    throw std::invalid_argument("taps must be even and >= 2");
  const int half = taps / 2;
  const long long whole = static_cast<long long>(std::floor(delay_samples));
  const double frac = delay_samples - static_cast<double>(whole);

  // Fixed FIR kernel: h(k - frac) on the Hann-windowed sinc, k in
  // [-(half-1), half].
  std::vector<double> kernel(taps);
  for (int k = -(half - 1); k <= half; ++k) {
    const double u = static_cast<double>(k) - frac;
    const double w = 0.5 + 0.5 * std::cos(kPi * u / half);
    kernel[k + half - 1] = sinc(u) * w;
  }

  const long long n = static_cast<long long>(x.size());
  std::vector<double> y(x.size(), 0.0);
  for (long long t = 0; t < n; ++t) {
    double acc = 0.0;
    for (int k = -(half - 1); k <= half; ++k) {
      const long long j = t - whole - k;
      if (j >= 0 && j < n) acc += kernel[k + half - 1] * x[j];
    }
    y[t] = acc;
  }
  return y;
}

RenderedScene render_scene(const SceneSpec& spec, const StftConfig& stft_cfg) {
  spec.geometry.validate();
  if (spec.duration <= 0.0) throw std::invalid_argument("duration must be > 0");
  if (spec.sample_rate <= 0) throw std::invalid_argument("sample_rate must be > 0");
  for (const auto& src : spec.sources)
    for (const auto& iv : src.active)
      if (iv.onset < 0.0 || iv.offset > spec.duration + 1e-9)
        throw std::invalid_argument("source interval outside scene duration");

  const int mics = spec.geometry.mic_count();
  const std::size_t samples =
      static_cast<std::size_t>(std::llround(spec.duration * spec.sample_rate));

  RenderedScene scene;
  scene.audio.sample_rate = spec.sample_rate;
  scene.audio.channels.assign(mics, std::vector<double>(samples, 0.0));

  std::mt19937_64 rng(spec.seed);

  for (const auto& src : spec.sources) {
    std::vector<double> dry = source_signal(src, samples, spec.sample_rate, rng);

    std::vector<double> gated(samples, 0.0);
    for (const auto& iv : src.active) {
      auto t0 = static_cast<std::size_t>(
          std::max(0.0, std::ceil(iv.onset * spec.sample_rate - 1e-9)));
      auto t1 = std::min(samples, static_cast<std::size_t>(std::max(
                                      0.0, std::ceil(iv.offset * spec.sample_rate -
                                                     1e-9))));
      for (std::size_t t = t0; t < t1; ++t) gated[t] = dry[t];
    }

    const Vec3 u = DoaAngle::from_degrees(90.0, src.azimuth_deg).unit_vector();
    for (int m = 0; m < mics; ++m) {
      const double delay_samples =
          dot(spec.geometry.mic_positions[m], u) / spec.geometry.speed_of_sound *
          spec.sample_rate;
      std::vector<double> steered = fractional_delay(gated, delay_samples);
      auto& channel = scene.audio.channels[m];
      for (std::size_t t = 0; t < samples; ++t) channel[t] += steered[t];
    }
  }

  if (std::isfinite(spec.snr_db)) {
    double power = 0.0;
    for (const auto& channel : scene.audio.channels)
      for (double v : channel) power += v * v;
    power /= static_cast<double>(samples) * mics;
    const double sigma = std::sqrt(power / std::pow(10.0, spec.snr_db / 10.0));
    std::normal_distribution<double> dist(0.0, 1.0);
    for (auto& channel : scene.audio.channels)
      for (double& v : channel) v += sigma * dist(rng);
  }

  // Ground truth on the analysis frame grid: beta = 1 when the interval
  // covers the frame center.
  if (samples >= static_cast<std::size_t>(stft_cfg.fft_size)) {
    const int frames =
        static_cast<int>((samples - stft_cfg.fft_size) / stft_cfg.hop) + 1;
    scene.activity.resize(frames);
    for (int n = 0; n < frames; ++n) {
      const double center =
          (static_cast<double>(n) * stft_cfg.hop + stft_cfg.fft_size / 2.0) /
          spec.sample_rate;
      for (const auto& src : spec.sources) {
        for (const auto& iv : src.active) {
          if (center >= iv.onset && center < iv.offset) {
            scene.activity[n].sources.push_back(
                {DoaAngle::from_degrees(90.0, src.azimuth_deg), 1.0});
            break;
          }
        }
      }
    }
  }

  scene.reference.recording_id = spec.id;
  for (std::size_t s = 0; s < spec.sources.size(); ++s) {
    char label[16];
    std::snprintf(label, sizeof(label), "spk%02zu", s);
    for (const auto& iv : spec.sources[s].active)
      if (iv.offset > iv.onset)
        scene.reference.segments.push_back({label, iv.onset, iv.offset - iv.onset});
  }
  return scene;
}

SceneSpec parse_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scene file: " + path);

  SceneSpec spec;
  std::string array_spec = "circular:8:0.05";
  double speed_of_sound = kSpeedOfSound;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = path + " line " + std::to_string(line_no);
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    try {
      if (key == "id") {
        ls >> spec.id;
      } else if (key == "duration") {
        ls >> spec.duration;
      } else if (key == "sample_rate") {
        ls >> spec.sample_rate;
      } else if (key == "seed") {
        ls >> spec.seed;
      } else if (key == "speed_of_sound") {
        ls >> speed_of_sound;
      } else if (key == "snr_db") {
        std::string v;
        ls >> v;
        spec.snr_db = (v == "inf" || v == "none")
                          ? std::numeric_limits<double>::infinity()
                          : std::stod(v);
      } else if (key == "array") {
        ls >> array_spec;
      } else if (key == "source") {
        SourceSpec src;
        std::string tok;
        while (ls >> tok) {
          auto eq = tok.find('=');
          if (eq == std::string::npos)
            throw std::runtime_error(where + ": expected key=value, got '" + tok + "'");
          const std::string k = tok.substr(0, eq);
          const std::string v = tok.substr(eq + 1);
          if (k == "azimuth") {
            src.azimuth_deg = std::stod(v);
          } else if (k == "kind") {
            if (v == "noise")
              src.kind = SourceSpec::Kind::kNoise;
            else if (v == "tone")
              src.kind = SourceSpec::Kind::kTone;
            else if (v == "file")
              src.kind = SourceSpec::Kind::kFile;
            else
              throw std::runtime_error(where + ": unknown source kind '" + v + "'");
          } else if (k == "freq") {
            src.tone_hz = std::stod(v);
          } else if (k == "path") {
            src.file = v;
          } else if (k == "active") {
            src.active = parse_intervals(v, where);
          } else {
            throw std::runtime_error(where + ": unknown source key '" + k + "'");
          }
        }
        if (src.kind == SourceSpec::Kind::kFile && src.file.empty())
          throw std::runtime_error(where + ": file source needs path=");
        spec.sources.push_back(std::move(src));
      } else {
        throw std::runtime_error(where + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(where + ": malformed value");
    }
  }

  spec.geometry = parse_array_spec(array_spec);
  spec.geometry.speed_of_sound = speed_of_sound;
  return spec;
}

}  // namespace spatialdiar
