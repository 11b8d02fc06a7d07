#include "spatialdiar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spatialdiar {

double normalize_azimuth(double rad) {
  const double two_pi = 2.0 * kPi;
  double r = std::fmod(rad + kPi, two_pi);
  if (r < 0.0) r += two_pi;
  double out = r - kPi;
  return out >= kPi ? -kPi : out;
}

double circular_distance_deg(double a_deg, double b_deg) {
  double d = std::fmod(std::abs(a_deg - b_deg), 360.0);
  return d > 180.0 ? 360.0 - d : d;
}

DoaAngle::DoaAngle(double elevation_rad, double azimuth_rad)
    : elevation(std::clamp(elevation_rad, 0.0, kPi)),
      azimuth(normalize_azimuth(azimuth_rad)) {}

DoaAngle DoaAngle::from_degrees(double elevation_deg, double azimuth_deg) {
  return {elevation_deg * kPi / 180.0, azimuth_deg * kPi / 180.0};
}

Vec3 DoaAngle::unit_vector() const {
  const double se = std::sin(elevation);
  return {se * std::cos(azimuth), se * std::sin(azimuth), std::cos(elevation)};
}

std::pair<int, int> ArrayGeometry::pair(int pair_index) const {
  int m = 0;
  int row = mic_count() - 1;
  while (pair_index >= row) {
    pair_index -= row;
    ++m;
    --row;
  }
  return {m, m + 1 + pair_index};
}

void ArrayGeometry::validate() const {
  if (mic_count() < 2)
    throw std::invalid_argument("array geometry needs at least 2 microphones");
  if (speed_of_sound <= 0.0)
    throw std::invalid_argument("speed of sound must be positive");
  for (int i = 0; i < mic_count(); ++i) {
    for (int j = i + 1; j < mic_count(); ++j) {
      Vec3 d = mic_positions[i] - mic_positions[j];
      if (dot(d, d) == 0.0)
        throw std::invalid_argument("microphone positions must be distinct");
    }
  }
}

ArrayGeometry make_circular_array(int mics, double radius_m,
                                  double speed_of_sound) {
  if (mics < 2) throw std::invalid_argument("circular array needs >= 2 mics");
  if (radius_m <= 0.0) throw std::invalid_argument("radius must be positive");
  ArrayGeometry geom;
  geom.speed_of_sound = speed_of_sound;
  geom.mic_positions.reserve(mics);
  for (int m = 0; m < mics; ++m) {
    double phi = 2.0 * kPi * m / mics;
    geom.mic_positions.push_back(
        {radius_m * std::cos(phi), radius_m * std::sin(phi), 0.0});
  }
  return geom;
}

ArrayGeometry load_geometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open geometry file: " + path);
  ArrayGeometry geom;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x, y, z;
    if (!(ls >> x)) continue;  // blank line
    if (!(ls >> y >> z))
      throw std::runtime_error("geometry file " + path + " line " +
                               std::to_string(line_no) +
                               ": expected 'x y z' triple");
    geom.mic_positions.push_back({x, y, z});
  }
  geom.validate();
  return geom;
}

ArrayGeometry parse_array_spec(const std::string& spec) {
  if (spec.rfind("circular:", 0) == 0) {
    std::istringstream ss(spec.substr(9));
    std::string mics_str, radius_str;
    if (!std::getline(ss, mics_str, ':') || !std::getline(ss, radius_str))
      throw std::invalid_argument("array spec must be circular:M:R, got " + spec);
    try {
      return make_circular_array(std::stoi(mics_str), std::stod(radius_str));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("array spec must be circular:M:R, got " + spec);
    }
  }
  return load_geometry_file(spec);
}

int AzimuthGrid::quantize(double azimuth_rad) const {
  double deg = normalize_azimuth(azimuth_rad) * 180.0 / kPi;
  int a = static_cast<int>(std::floor((deg + 180.0) / resolution_deg));
  return std::clamp(a, 0, bin_count() - 1);
}

double steering_delay(const ArrayGeometry& geom, int pair_index,
                      const DoaAngle& theta) {
  auto [m, mp] = geom.pair(pair_index);
  Vec3 baseline = geom.mic_positions[m] - geom.mic_positions[mp];
  return dot(baseline, theta.unit_vector()) / geom.speed_of_sound;
}

DpIpdField dp_ipd(const ArrayGeometry& geom, const std::vector<double>& freqs,
                  const DoaAngle& theta) {
  DpIpdField field;
  field.pair_count = geom.pair_count();
  field.freq_bins = freqs;
  field.values.resize(static_cast<std::size_t>(field.pair_count) * freqs.size());
  std::size_t idx = 0;
  for (int p = 0; p < field.pair_count; ++p) {
    const double tau = steering_delay(geom, p, theta);
    for (double f : freqs) field.values[idx++] = std::polar(1.0, -2.0 * kPi * f * tau);
  }
  return field;
}

}  // namespace spatialdiar
