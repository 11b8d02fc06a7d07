#include "spatialdiar/dpipd.hpp"

#include <cmath>
#include <stdexcept>

namespace spatialdiar {

DpIpdField oracle_summed_dpipd(const ArrayGeometry& geom,
                               const std::vector<double>& freqs,
                               const SourceActivity& activity) {
  DpIpdField sum;
  sum.pair_count = geom.pair_count();
  sum.freq_bins = freqs;
  sum.values.assign(static_cast<std::size_t>(sum.pair_count) * freqs.size(),
                    {0.0, 0.0});
  for (const auto& src : activity.sources) {
    if (src.beta < 0.0 || src.beta > 1.0)
      throw std::invalid_argument("activity weight must be in [0, 1]");
    DpIpdField r = dp_ipd(geom, freqs, src.theta);
    for (std::size_t i = 0; i < sum.values.size(); ++i)
      sum.values[i] += src.beta * r.values[i];
  }
  return sum;
}

DpIpdField phat_summed_dpipd(const StftFrames& frames, int frame,
                             PhatSmoother& state) {
  if (frame < 0 || frame >= frames.frame_count)
    throw std::out_of_range("frame index out of range");
  const int channels = frames.channels;
  const int bins = frames.bin_count();
  const int pairs = channels * (channels - 1) / 2;
  const std::size_t entries = static_cast<std::size_t>(pairs) * bins;

  if (state.field.empty()) state.field.assign(entries, {0.0, 0.0});
  if (state.field.size() != entries)
    throw std::invalid_argument("smoothing state layout mismatch");

  DpIpdField out;
  out.pair_count = pairs;
  out.freq_bins = frames.config.used_bin_freqs();
  out.values.resize(entries);

  const double keep = state.alpha;
  const double take = 1.0 - state.alpha;
  std::size_t idx = 0;
  for (int m = 0; m < channels - 1; ++m) {
    for (int mp = m + 1; mp < channels; ++mp) {
      const std::complex<double>* xm = frames.frame(m, frame);
      const std::complex<double>* xp = frames.frame(mp, frame);
      for (int k = 0; k < bins; ++k, ++idx) {
        std::complex<double> cross = xm[k] * std::conj(xp[k]);
        double mag = std::abs(cross);
        std::complex<double> instant =
            mag < kPhatEpsilon ? std::complex<double>{0.0, 0.0} : cross / mag;
        state.field[idx] = keep * state.field[idx] + take * instant;
        out.values[idx] = state.field[idx];
      }
    }
  }
  return out;
}

}  // namespace spatialdiar
