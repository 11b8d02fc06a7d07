#include "spatialdiar/der.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "spatialdiar/assignment.hpp"

namespace spatialdiar {

namespace {

long frame_of(double seconds, double frame_period) {
  return std::max(0L, std::lround(seconds / frame_period));
}

struct FrameActivity {
  std::vector<std::string> labels;            // sorted
  std::vector<std::vector<char>> active;      // [speaker][frame]
};

FrameActivity discretize(const SpeakerSegments& segments, long total_frames,
                         double frame_period) {
  std::map<std::string, int> index;
  for (const auto& seg : segments.segments) index.emplace(seg.speaker, 0);
  FrameActivity fa;
  int next = 0;
  for (auto& [label, idx] : index) {
    idx = next++;
    fa.labels.push_back(label);
  }
  fa.active.assign(index.size(), std::vector<char>(total_frames, 0));
  for (const auto& seg : segments.segments) {
    long begin = frame_of(seg.onset, frame_period);
    long end = frame_of(seg.onset + seg.duration, frame_period);
    end = std::min(end, total_frames);
    auto& row = fa.active[index[seg.speaker]];
    for (long t = begin; t < end; ++t) row[t] = 1;
  }
  return fa;
}

}  // namespace

DerResult compute_der(const SpeakerSegments& reference,
                      const SpeakerSegments& hypothesis,
                      const DerOptions& options) {
  if (!reference.recording_id.empty() && !hypothesis.recording_id.empty() &&
      reference.recording_id != hypothesis.recording_id)
    throw std::invalid_argument("reference/hypothesis recording ids differ");
  const double fp = options.frame_period;
  if (fp <= 0.0) throw std::invalid_argument("frame_period must be positive");

  long total_frames = 0;
  for (const auto& seg : reference.segments)
    total_frames = std::max(total_frames, frame_of(seg.onset + seg.duration, fp));
  for (const auto& seg : hypothesis.segments)
    total_frames = std::max(total_frames, frame_of(seg.onset + seg.duration, fp));

  FrameActivity ref = discretize(reference, total_frames, fp);
  FrameActivity hyp = discretize(hypothesis, total_frames, fp);
  const int n_ref_spk = static_cast<int>(ref.labels.size());
  const int n_hyp_spk = static_cast<int>(hyp.labels.size());

  std::vector<char> scored(total_frames, 1);
  if (options.collar > 0.0) {
    for (const auto& seg : reference.segments) {
      for (double boundary : {seg.onset, seg.onset + seg.duration}) {
        long begin = frame_of(boundary - options.collar, fp);
        long end = std::min(frame_of(boundary + options.collar, fp), total_frames);
        for (long t = begin; t < end; ++t) scored[t] = 0;
      }
    }
  }
  if (options.oracle_vad) {
    for (long t = 0; t < total_frames; ++t) {
      bool speech = false;
      for (int r = 0; r < n_ref_spk && !speech; ++r) speech = ref.active[r][t];
      if (!speech) scored[t] = 0;
    }
  }

  // Optimal speaker mapping: maximize total co-active frames.
  std::vector<std::vector<double>> overlap(
      n_ref_spk, std::vector<double>(n_hyp_spk, 0.0));
  for (long t = 0; t < total_frames; ++t) {
    if (!scored[t]) continue;
    for (int r = 0; r < n_ref_spk; ++r) {
      if (!ref.active[r][t]) continue;
      for (int h = 0; h < n_hyp_spk; ++h)
        if (hyp.active[h][t]) overlap[r][h] += 1.0;
    }
  }
  std::vector<int> mapping = solve_assignment_max(overlap);

  long long total_ref = 0, err = 0, miss = 0, fa = 0;
  for (long t = 0; t < total_frames; ++t) {
    if (!scored[t]) continue;
    int n_ref = 0, n_hyp = 0, n_correct = 0;
    for (int r = 0; r < n_ref_spk; ++r) {
      if (!ref.active[r][t]) continue;
      ++n_ref;
      if (mapping[r] >= 0 && hyp.active[mapping[r]][t]) ++n_correct;
    }
    for (int h = 0; h < n_hyp_spk; ++h) n_hyp += hyp.active[h][t];
    total_ref += n_ref;
    err += std::max(n_ref, n_hyp) - n_correct;
    miss += std::max(0, n_ref - n_hyp);
    fa += std::max(0, n_hyp - n_ref);
  }

  if (total_ref == 0) throw std::runtime_error("empty reference");

  DerResult result;
  result.total_reference_seconds = static_cast<double>(total_ref) * fp;
  result.der = static_cast<double>(err) / static_cast<double>(total_ref);
  result.missed = static_cast<double>(miss) / static_cast<double>(total_ref);
  result.false_alarm = static_cast<double>(fa) / static_cast<double>(total_ref);
  result.confusion = result.der - result.missed - result.false_alarm;
  return result;
}

}  // namespace spatialdiar
