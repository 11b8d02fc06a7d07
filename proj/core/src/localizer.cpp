#include "spatialdiar/localizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spatialdiar {

namespace {

void check_layout(const DpIpdField& rhat, const SteeringTable& steering) {
  if (rhat.pair_count != steering.pair_count ||
      rhat.freq_bins.size() != steering.freqs.size())
    throw std::invalid_argument("field/steering layout mismatch");
}

// Re{ a^H b } summed over all entries. With interleaved complex storage this
// is a plain dot product, which the compiler vectorizes.
double srp_dot(const std::vector<std::complex<double>>& a,
               const std::vector<std::complex<double>>& b) {
  double sum = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    sum += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return sum;
}

}  // namespace

int circular_bin_distance(int a, int b, int bin_count) {
  int d = std::abs(a - b) % bin_count;
  return std::min(d, bin_count - d);
}

void IdlConfig::validate() const {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (w_min <= 0.0 || w_min >= 1.0)
    throw std::invalid_argument("w_min must be in (0, 1)");
  if (min_separation_bins < 0)
    throw std::invalid_argument("min_separation_bins must be >= 0");
}

SteeringTable build_steering_table(const ArrayGeometry& geom,
                                   const std::vector<double>& freqs,
                                   const AzimuthGrid& grid) {
  geom.validate();
  SteeringTable table;
  table.grid = grid;
  table.freqs = freqs;
  table.pair_count = geom.pair_count();
  table.fields.reserve(grid.bin_count());
  for (int a = 0; a < grid.bin_count(); ++a)
    table.fields.push_back(dp_ipd(geom, freqs, grid.bin_center(a)));
  return table;
}

SpatialSpectrum srp_spectrum(const DpIpdField& rhat, const SteeringTable& steering) {
  check_layout(rhat, steering);
  const double norm =
      static_cast<double>(rhat.pair_count) * static_cast<double>(rhat.freq_bins.size());
  SpatialSpectrum spec;
  spec.grid = steering.grid;
  spec.values.resize(steering.bin_count());
  for (int a = 0; a < steering.bin_count(); ++a)
    spec.values[a] = srp_dot(rhat.values, steering.fields[a].values) / norm;
  return spec;
}

std::pair<int, double> detect_peak(const SpatialSpectrum& spec) {
  if (spec.values.empty()) throw std::invalid_argument("empty spectrum");
  int best = 0;
  for (int a = 1; a < static_cast<int>(spec.values.size()); ++a)
    if (spec.values[a] > spec.values[best]) best = a;
  return {best, spec.values[best]};
}

double estimate_weight(const DpIpdField& rhat, int bin, const SteeringTable& steering) {
  check_layout(rhat, steering);
  const double norm =
      static_cast<double>(rhat.pair_count) * static_cast<double>(rhat.freq_bins.size());
  double p = srp_dot(rhat.values, steering.fields[bin].values) / norm;
  return std::clamp(p, 0.0, 1.0);
}

void remove_source(DpIpdField& rhat, int bin, double beta, const SteeringTable& steering) {
  check_layout(rhat, steering);
  const auto& r = steering.fields[bin].values;
  for (std::size_t i = 0; i < rhat.values.size(); ++i)
    rhat.values[i] -= beta * r[i];
}

std::vector<SourceDetection> idl_localize(const DpIpdField& rhat,
                                          const IdlConfig& cfg,
                                          const SteeringTable& steering,
                                          int frame) {
  cfg.validate();
  check_layout(rhat, steering);
  const int bins = steering.bin_count();

  std::vector<SourceDetection> detections;
  std::vector<char> excluded(bins, 0);
  DpIpdField residual = rhat;

  while (static_cast<int>(detections.size()) < cfg.n_max) {
    SpatialSpectrum spec = srp_spectrum(residual, steering);

    // Dominant peak outside the exclusion radius of prior detections.
    int best = -1;
    for (int a = 0; a < bins; ++a) {
      if (excluded[a]) continue;
      if (best < 0 || spec.values[a] > spec.values[best]) best = a;
    }
    if (best < 0) break;

    double weight = std::clamp(spec.values[best], 0.0, 1.0);
    if (weight < cfg.w_min) break;

    detections.push_back(
        {frame, best, steering.grid.bin_center_deg(best), weight});
    remove_source(residual, best, weight, steering);
    for (int a = 0; a < bins; ++a)
      if (circular_bin_distance(a, best, bins) < cfg.min_separation_bins)
        excluded[a] = 1;
  }

  std::stable_sort(detections.begin(), detections.end(),
                   [](const SourceDetection& a, const SourceDetection& b) {
                     return a.weight > b.weight;
                   });
  return detections;
}

std::vector<std::vector<SourceDetection>> localize_frames(
    DpIpdProvider& provider, const SteeringTable& steering, const IdlConfig& cfg) {
  std::vector<std::vector<SourceDetection>> out;
  out.reserve(provider.frame_count());
  for (int n = 0; n < provider.frame_count(); ++n) {
    DpIpdField field = provider.field_at(n);
    out.push_back(idl_localize(field, cfg, steering, n));
  }
  return out;
}

}  // namespace spatialdiar
