#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace spatialdiar {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfSound = 343.0;  // m/s

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Wraps an angle in radians into [-pi, pi).
double normalize_azimuth(double rad);

/// Circular distance between two azimuths in degrees, result in [0, 180].
double circular_distance_deg(double a_deg, double b_deg);

/// Direction of arrival: elevation in [0, pi], azimuth in [-pi, pi).
/// Azimuth is normalized on construction; elevation is clamped.
struct DoaAngle {
  double elevation = kPi / 2.0;
  double azimuth = 0.0;

  DoaAngle() = default;
  DoaAngle(double elevation_rad, double azimuth_rad);
  static DoaAngle from_degrees(double elevation_deg, double azimuth_deg);

  double azimuth_deg() const { return azimuth * 180.0 / kPi; }
  double elevation_deg() const { return elevation * 180.0 / kPi; }

  /// Unit vector pointing from the array toward the source.
  Vec3 unit_vector() const;
};

/// Microphone positions plus propagation constants. Pairs are enumerated
/// (m, m') with m < m' in lexicographic order.
struct ArrayGeometry {
  std::vector<Vec3> mic_positions;
  double speed_of_sound = kSpeedOfSound;

  int mic_count() const { return static_cast<int>(mic_positions.size()); }
  int pair_count() const { return mic_count() * (mic_count() - 1) / 2; }
  std::pair<int, int> pair(int pair_index) const;

  /// Throws std::invalid_argument unless M >= 2 and positions are distinct.
  void validate() const;
};

/// Uniform circular array in the z=0 plane, mic 0 on the +x axis.
ArrayGeometry make_circular_array(int mics, double radius_m,
                                  double speed_of_sound = kSpeedOfSound);

/// Reads one "x y z" triple per line ('#' starts a comment).
ArrayGeometry load_geometry_file(const std::string& path);

/// Accepts "circular:M:R" or a path to a geometry file.
ArrayGeometry parse_array_spec(const std::string& spec);

/// Azimuth candidate grid. Bin a covers [-180 + a*res, -180 + (a+1)*res)
/// degrees; centers sit at -180 + (a+0.5)*res.
struct AzimuthGrid {
  double resolution_deg = 5.0;
  double fixed_elevation = kPi / 2.0;

  int bin_count() const { return static_cast<int>(360.0 / resolution_deg + 0.5); }
  double bin_center_deg(int a) const { return -180.0 + (a + 0.5) * resolution_deg; }
  DoaAngle bin_center(int a) const {
    return {fixed_elevation, bin_center_deg(a) * kPi / 180.0};
  }
  int quantize(double azimuth_rad) const;
  int quantize_deg(double azimuth_deg) const {
    return quantize(azimuth_deg * kPi / 180.0);
  }
};

/// Per-pair, per-frequency complex phase-difference field. Holds either a
/// candidate steering field r(theta) (unit magnitude everywhere) or a summed
/// field R (entry magnitudes bounded by the sum of source weights).
struct DpIpdField {
  int pair_count = 0;
  std::vector<double> freq_bins;              // Hz
  std::vector<std::complex<double>> values;   // pair-major, then frequency

  int freq_count() const { return static_cast<int>(freq_bins.size()); }
  std::complex<double>& at(int pair, int f) {
    return values[static_cast<std::size_t>(pair) * freq_bins.size() + f];
  }
  const std::complex<double>& at(int pair, int f) const {
    return values[static_cast<std::size_t>(pair) * freq_bins.size() + f];
  }
  bool same_layout(const DpIpdField& other) const {
    return pair_count == other.pair_count &&
           freq_bins.size() == other.freq_bins.size();
  }
};

/// Inter-channel propagation delay tau = (p_m - p_m') . u(theta) / c for the
/// far-field plane-wave model. Antisymmetric in pair order.
double steering_delay(const ArrayGeometry& geom, int pair_index,
                      const DoaAngle& theta);

/// Direct-path IPD steering field: entry (pair, f) = exp(-i 2 pi f tau).
DpIpdField dp_ipd(const ArrayGeometry& geom, const std::vector<double>& freqs,
                  const DoaAngle& theta);

}  // namespace spatialdiar
