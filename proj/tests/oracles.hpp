#pragma once

// Brute-force reference implementations used only by tests. Everything here
// recomputes results from first principles with plain scalar loops, kept
// independent of the library code paths it checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

constexpr double kPi = 3.14159265358979323846;

struct Pos {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline void direction(double ele_rad, double azi_rad, double u[3]) {
  u[0] = std::sin(ele_rad) * std::cos(azi_rad);
  u[1] = std::sin(ele_rad) * std::sin(azi_rad);
  u[2] = std::cos(ele_rad);
}

inline double steering_delay(const Pos& pm, const Pos& pmp, double ele_rad,
                             double azi_rad, double speed) {
  double u[3];
  direction(ele_rad, azi_rad, u);
  return ((pm.x - pmp.x) * u[0] + (pm.y - pmp.y) * u[1] + (pm.z - pmp.z) * u[2]) /
         speed;
}

// DP-IPD field as a flat vector, pairs (m, m') with m < m' in lexicographic
// order, frequency-minor.
inline std::vector<std::complex<double>> dp_ipd_field(
    const std::vector<Pos>& mics, const std::vector<double>& freqs,
    double ele_rad, double azi_rad, double speed) {
  std::vector<std::complex<double>> field;
  for (std::size_t m = 0; m < mics.size(); ++m) {
    for (std::size_t mp = m + 1; mp < mics.size(); ++mp) {
      double tau = steering_delay(mics[m], mics[mp], ele_rad, azi_rad, speed);
      for (double f : freqs) {
        double phase = -2.0 * kPi * f * tau;
        field.emplace_back(std::cos(phase), std::sin(phase));
      }
    }
  }
  return field;
}

// Normalized steered-response value: (2 / (M(M-1)F)) sum Re{conj(R) r}.
inline double srp_value(const std::vector<std::complex<double>>& rhat,
                        const std::vector<std::complex<double>>& steer, int mics,
                        int freq_count) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rhat.size(); ++i)
    sum += rhat[i].real() * steer[i].real() + rhat[i].imag() * steer[i].imag();
  return 2.0 * sum / (static_cast<double>(mics) * (mics - 1) * freq_count);
}

// Direct O(N^2) DFT.
inline std::vector<std::complex<double>> dft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t t = 0; t < n; ++t) {
      double phase = -2.0 * kPi * static_cast<double>(k) * t / n;
      acc += x[t] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    out[k] = acc;
  }
  return out;
}

// Triple-loop matrix multiply: (rows x inner) * (inner x cols), row-major.
inline std::vector<double> matmul(const std::vector<double>& a, std::size_t rows,
                                  std::size_t inner, const std::vector<double>& b,
                                  std::size_t cols) {
  std::vector<double> c(rows * cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k)
        c[i * cols + j] += a[i * inner + k] * b[k * cols + j];
  return c;
}

inline std::size_t nearest_row(std::size_t t, std::size_t src_rows,
                               std::size_t dst_rows) {
  return t * src_rows / dst_rows;
}

// Cross-correlation peak lag: argmax_l sum_t a[t] * b[t - l], l in [-max, max].
inline int gcc_peak_lag(const std::vector<double>& a, const std::vector<double>& b,
                        int max_lag) {
  int best_lag = -max_lag;
  double best = -1e300;
  const long n = static_cast<long>(std::min(a.size(), b.size()));
  for (int l = -max_lag; l <= max_lag; ++l) {
    double s = 0.0;
    for (long t = 0; t < n; ++t) {
      long j = t - l;
      if (j >= 0 && j < n) s += a[t] * b[j];
    }
    if (s > best) {
      best = s;
      best_lag = l;
    }
  }
  return best_lag;
}

// Exhaustive-mapping DER: discretizes at frame_period (endpoints rounded to
// the nearest frame boundary) and tries every injective speaker mapping.
struct Seg {
  std::string speaker;
  double onset = 0.0;
  double duration = 0.0;
};

struct DerParts {
  double missed = 0.0, false_alarm = 0.0, confusion = 0.0, der = 0.0;
};

inline DerParts exhaustive_der(const std::vector<Seg>& ref,
                               const std::vector<Seg>& hyp, double frame_period) {
  auto frame_of = [&](double t) {
    return std::max(0L, std::lround(t / frame_period));
  };
  long frames = 0;
  for (const auto& s : ref) frames = std::max(frames, frame_of(s.onset + s.duration));
  for (const auto& s : hyp) frames = std::max(frames, frame_of(s.onset + s.duration));

  auto activity = [&](const std::vector<Seg>& segs,
                      std::vector<std::string>& labels) {
    std::set<std::string> names;
    for (const auto& s : segs) names.insert(s.speaker);
    labels.assign(names.begin(), names.end());
    std::vector<std::vector<char>> act(labels.size(),
                                       std::vector<char>(frames, 0));
    for (const auto& s : segs) {
      std::size_t idx = static_cast<std::size_t>(
          std::find(labels.begin(), labels.end(), s.speaker) - labels.begin());
      for (long t = frame_of(s.onset);
           t < std::min(frames, frame_of(s.onset + s.duration)); ++t)
        act[idx][t] = 1;
    }
    return act;
  };

  std::vector<std::string> ref_labels, hyp_labels;
  auto ref_act = activity(ref, ref_labels);
  auto hyp_act = activity(hyp, hyp_labels);
  const int nr = static_cast<int>(ref_labels.size());
  const int nh = static_cast<int>(hyp_labels.size());

  // Enumerate every assignment of hypothesis columns (padded with "unmapped")
  // to reference rows.
  const int n = std::max(nr, nh);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  long best_correct = -1;
  std::vector<int> best_map(nr, -1);
  do {
    long correct = 0;
    for (int r = 0; r < nr; ++r) {
      int h = perm[r];
      if (h >= nh) continue;
      for (long t = 0; t < frames; ++t)
        if (ref_act[r][t] && hyp_act[h][t]) ++correct;
    }
    if (correct > best_correct) {
      best_correct = correct;
      for (int r = 0; r < nr; ++r) best_map[r] = perm[r] < nh ? perm[r] : -1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  long long total_ref = 0, err = 0, miss = 0, fa = 0;
  for (long t = 0; t < frames; ++t) {
    int n_ref = 0, n_hyp = 0, n_correct = 0;
    for (int r = 0; r < nr; ++r) {
      if (!ref_act[r][t]) continue;
      ++n_ref;
      if (best_map[r] >= 0 && hyp_act[best_map[r]][t]) ++n_correct;
    }
    for (int h = 0; h < nh; ++h) n_hyp += hyp_act[h][t];
    total_ref += n_ref;
    err += std::max(n_ref, n_hyp) - n_correct;
    miss += std::max(0, n_ref - n_hyp);
    fa += std::max(0, n_hyp - n_ref);
  }

  DerParts parts;
  parts.der = static_cast<double>(err) / static_cast<double>(total_ref);
  parts.missed = static_cast<double>(miss) / static_cast<double>(total_ref);
  parts.false_alarm = static_cast<double>(fa) / static_cast<double>(total_ref);
  parts.confusion = parts.der - parts.missed - parts.false_alarm;
  return parts;
}

}  // namespace oracle
