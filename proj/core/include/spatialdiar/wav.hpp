#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace spatialdiar {

/// Channel-major multichannel audio. All channels have equal length.
struct MultiChannelAudio {
  int sample_rate = 16000;
  std::vector<std::vector<double>> channels;

  int channel_count() const { return static_cast<int>(channels.size()); }
  std::size_t sample_count() const {
    return channels.empty() ? 0 : channels.front().size();
  }
  double duration() const {
    return static_cast<double>(sample_count()) / sample_rate;
  }
};

/// Reads a RIFF/WAVE file. Supports PCM16 and IEEE float32, any channel
/// count. Throws std::runtime_error on malformed or unsupported input.
MultiChannelAudio read_wav(const std::string& path);

/// Writes IEEE float32 WAVE.
void write_wav_float32(const std::string& path, const MultiChannelAudio& audio);

}  // namespace spatialdiar
