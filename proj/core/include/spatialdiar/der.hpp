#pragma once

#include "spatialdiar/rttm.hpp"

namespace spatialdiar {

/// Scoring options. Collar exclusion and oracle-VAD filtering exist for
/// experiments but default off; the standard protocol here is no collar and
/// no oracle VAD.
struct DerOptions {
  double frame_period = 0.01;  // seconds
  double collar = 0.0;         // seconds around reference boundaries, 0 = off
  bool oracle_vad = false;     // score only frames with reference speech
};

/// All components are fractions of total reference speech time and satisfy
/// der = missed + false_alarm + confusion.
struct DerResult {
  double missed = 0.0;
  double false_alarm = 0.0;
  double confusion = 0.0;
  double der = 0.0;
  double total_reference_seconds = 0.0;
};

/// Frame-based DER under the optimal reference-to-hypothesis speaker mapping
/// (maximum-weight assignment on overlap counts). Both inputs must describe
/// the same recording. Throws std::runtime_error("empty reference") when the
/// reference contains no speech.
DerResult compute_der(const SpeakerSegments& reference,
                      const SpeakerSegments& hypothesis,
                      const DerOptions& options = {});

}  // namespace spatialdiar
