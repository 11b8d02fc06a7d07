#pragma once

#include <vector>

#include "spatialdiar/geometry.hpp"
#include "spatialdiar/stft.hpp"

namespace spatialdiar {

/// Ground-truth source state for one frame: direction plus activity weight
/// beta in [0, 1].
struct SourceActivity {
  struct Entry {
    DoaAngle theta;
    double beta = 1.0;
  };
  std::vector<Entry> sources;
};

/// Summed direct-path IPD field R(n) = sum_k beta_k r(theta_k), entrywise.
DpIpdField oracle_summed_dpipd(const ArrayGeometry& geom,
                               const std::vector<double>& freqs,
                               const SourceActivity& activity);

inline constexpr double kPhatEpsilon = 1e-12;

/// Causal exponential-smoothing state for the PHAT estimator. One instance
/// per audio stream; never share across streams.
struct PhatSmoother {
  double alpha = 0.6;
  std::vector<std::complex<double>> field;  // empty until the first frame

  void reset() { field.clear(); }
};

/// Classical stand-in for a learned summed-DP-IPD predictor: PHAT-normalized
/// instantaneous cross-spectra, exponentially smoothed over frames. Entries
/// have magnitude <= 1; silent bins (cross power below kPhatEpsilon) give 0.
/// Output at frame n depends only on frames <= n through the carried state.
DpIpdField phat_summed_dpipd(const StftFrames& frames, int frame,
                             PhatSmoother& state);

/// Frame-sequential source of summed DP-IPD fields; lets the localizer run
/// unchanged on ground truth, on PHAT estimates, or on an external predictor.
class DpIpdProvider {
 public:
  virtual ~DpIpdProvider() = default;
  virtual int frame_count() const = 0;
  /// Must be called with non-decreasing frame indices.
  virtual DpIpdField field_at(int frame) = 0;
};

class OracleDpIpdProvider : public DpIpdProvider {
 public:
  OracleDpIpdProvider(const ArrayGeometry& geom, std::vector<double> freqs,
                      std::vector<SourceActivity> activities)
      : geom_(geom), freqs_(std::move(freqs)), activities_(std::move(activities)) {}

  int frame_count() const override {
    return static_cast<int>(activities_.size());
  }
  DpIpdField field_at(int frame) override {
    return oracle_summed_dpipd(geom_, freqs_, activities_[frame]);
  }

 private:
  ArrayGeometry geom_;
  std::vector<double> freqs_;
  std::vector<SourceActivity> activities_;
};

class PhatDpIpdProvider : public DpIpdProvider {
 public:
  explicit PhatDpIpdProvider(const StftFrames& frames, double alpha = 0.6)
      : frames_(frames) {
    smoother_.alpha = alpha;
  }

  int frame_count() const override { return frames_.frame_count; }
  DpIpdField field_at(int frame) override {
    return phat_summed_dpipd(frames_, frame, smoother_);
  }

 private:
  const StftFrames& frames_;
  PhatSmoother smoother_;
};

}  // namespace spatialdiar
