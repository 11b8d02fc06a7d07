#include "spatialdiar/pipeline.hpp"

#include <ostream>

#include "spatialdiar/dpipd.hpp"

namespace spatialdiar {

std::vector<std::vector<SourceDetection>> localize_offline_phat(
    const MultiChannelAudio& audio, const StftConfig& stft_cfg,
    const SteeringTable& steering, const IdlConfig& idl, double alpha) {
  StftFrames frames = stft(audio, stft_cfg);
  PhatDpIpdProvider provider(frames, alpha);
  return localize_frames(provider, steering, idl);
}

std::vector<std::vector<SourceDetection>> localize_window_phat(
    const MultiChannelAudio& window, const StftComputer& stft_computer,
    const SteeringTable& steering, const IdlConfig& idl, double alpha) {
  const StftConfig& cfg = stft_computer.config();
  // Pad the tail so the frame grid covers every hop of the window.
  MultiChannelAudio padded = window;
  for (auto& ch : padded.channels) ch.resize(ch.size() + cfg.fft_size - cfg.hop, 0.0);

  StftFrames frames = stft_computer.compute(padded);
  PhatDpIpdProvider provider(frames, alpha);
  return localize_frames(provider, steering, idl);
}

std::vector<std::vector<SourceDetection>> localize_online_phat(
    const MultiChannelAudio& audio, const StftConfig& stft_cfg,
    const BlockConfig& block, const SteeringTable& steering, const IdlConfig& idl,
    double alpha) {
  StftComputer computer(stft_cfg);
  using FrameDetections = std::vector<SourceDetection>;
  auto process = [&](const MultiChannelAudio& window) {
    return localize_window_phat(window, computer, steering, idl, alpha);
  };
  std::vector<FrameDetections> out = stream_blocks<FrameDetections>(
      audio, block, stft_cfg.hop, process);
  for (std::size_t n = 0; n < out.size(); ++n)
    for (auto& det : out[n]) det.frame = static_cast<int>(n);
  return out;
}

void write_detections_csv(std::ostream& out,
                          const std::vector<std::vector<SourceDetection>>& detections,
                          double frame_period) {
  out << "frame,time_sec,azimuth_deg,weight\n";
  for (const auto& frame_dets : detections) {
    for (const auto& det : frame_dets)
      out << det.frame << ',' << det.frame * frame_period << ',' << det.azimuth_deg
          << ',' << det.weight << '\n';
  }
}

}  // namespace spatialdiar
