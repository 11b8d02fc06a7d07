#pragma once

#include <iosfwd>
#include <vector>

#include "spatialdiar/localizer.hpp"
#include "spatialdiar/stft.hpp"
#include "spatialdiar/streaming.hpp"
#include "spatialdiar/wav.hpp"

namespace spatialdiar {

/// Whole-file PHAT + IDL localization. One detection list per STFT frame.
std::vector<std::vector<SourceDetection>> localize_offline_phat(
    const MultiChannelAudio& audio, const StftConfig& stft_cfg,
    const SteeringTable& steering, const IdlConfig& idl, double alpha = 0.6);

/// Processes one padded block window with a fresh smoothing state and returns
/// exactly window_len/hop frame outputs (the tail is analyzed over zeros).
std::vector<std::vector<SourceDetection>> localize_window_phat(
    const MultiChannelAudio& window, const StftComputer& stft,
    const SteeringTable& steering, const IdlConfig& idl, double alpha);

/// Block-wise streaming PHAT + IDL localization; emits ceil(len/hop) frames
/// tiling the whole timeline. Frame indices in the detections are global.
std::vector<std::vector<SourceDetection>> localize_online_phat(
    const MultiChannelAudio& audio, const StftConfig& stft_cfg,
    const BlockConfig& block, const SteeringTable& steering, const IdlConfig& idl,
    double alpha = 0.6);

/// Header "frame,time_sec,azimuth_deg,weight", one row per detection.
void write_detections_csv(std::ostream& out,
                          const std::vector<std::vector<SourceDetection>>& detections,
                          double frame_period);

}  // namespace spatialdiar
