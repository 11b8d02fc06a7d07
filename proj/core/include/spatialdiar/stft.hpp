#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "spatialdiar/wav.hpp"

namespace spatialdiar {

/// Analysis parameters. The window is Hann; DC is dropped so the retained
/// bins are indices 1 .. fft_size/2 (F = fft_size/2).
struct StftConfig {
  int sample_rate = 16000;
  int fft_size = 512;
  int hop = 256;

  int used_bin_count() const { return fft_size / 2; }
  std::vector<double> used_bin_freqs() const;
  double frame_period() const {
    return static_cast<double>(hop) / sample_rate;
  }

  /// Throws std::invalid_argument unless hop <= fft_size, hop > 0 and
  /// fft_size is a power of two.
  void validate() const;
};

/// Complex short-time spectra indexed (channel, frame, used bin).
struct StftFrames {
  StftConfig config;
  int channels = 0;
  int frame_count = 0;
  std::vector<std::complex<double>> values;

  int bin_count() const { return config.used_bin_count(); }
  double frame_time(int n) const {
    return static_cast<double>(n) * config.hop / config.sample_rate;
  }
  const std::complex<double>* frame(int channel, int n) const {
    return values.data() +
           (static_cast<std::size_t>(channel) * frame_count + n) * bin_count();
  }
  std::complex<double>* frame(int channel, int n) {
    return values.data() +
           (static_cast<std::size_t>(channel) * frame_count + n) * bin_count();
  }
};

/// Hann-windowed short-time Fourier analysis. Holds one FFTW plan per
/// instance; compute() is safe to call from several threads on distinct
/// instances.
class StftComputer {
 public:
  explicit StftComputer(StftConfig cfg);
  ~StftComputer();
  StftComputer(const StftComputer&) = delete;
  StftComputer& operator=(const StftComputer&) = delete;

  /// Frame n covers samples [n*hop, n*hop + fft_size); output frame count
  /// is floor((len - fft_size)/hop) + 1. Throws "input too short" when the
  /// signal does not fill one frame, and rejects mismatched sample rates.
  StftFrames compute(const MultiChannelAudio& audio) const;

  const StftConfig& config() const { return cfg_; }

 private:
  struct Plan;
  StftConfig cfg_;
  std::vector<double> window_;
  std::unique_ptr<Plan> plan_;
};

/// One-shot convenience wrapper around StftComputer.
StftFrames stft(const MultiChannelAudio& audio, const StftConfig& cfg);

}  // namespace spatialdiar
