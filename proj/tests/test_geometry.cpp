#include "spatialdiar/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "oracles.hpp"

using namespace spatialdiar;

namespace {
ArrayGeometry pair_on_x(double spacing) {
  // mic 0 ahead of mic 1 along +x, so tau > 0 toward azimuth 0.
  ArrayGeometry g;
  g.mic_positions = {{spacing, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  return g;
}
}  // namespace

TEST_CASE("normalize_azimuth wraps into [-pi, pi)") {
  CHECK(normalize_azimuth(0.0) == doctest::Approx(0.0));
  CHECK(normalize_azimuth(kPi) == doctest::Approx(-kPi));
  CHECK(normalize_azimuth(-kPi) == doctest::Approx(-kPi));
  CHECK(normalize_azimuth(3.0 * kPi) == doctest::Approx(-kPi));
  CHECK(normalize_azimuth(2.5 * kPi) == doctest::Approx(0.5 * kPi));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    double a = normalize_azimuth(dist(rng));
    CHECK(a >= -kPi);
    CHECK(a < kPi);
  }
}

TEST_CASE("circular_distance_deg handles the wrap") {
  CHECK(circular_distance_deg(170.0, -170.0) == doctest::Approx(20.0));
  CHECK(circular_distance_deg(-90.0, 90.0) == doctest::Approx(180.0));
  CHECK(circular_distance_deg(10.0, 10.0) == doctest::Approx(0.0));
}

TEST_CASE("steering_delay broadside is zero") {
  auto g = pair_on_x(0.1);
  CHECK(steering_delay(g, 0, DoaAngle::from_degrees(90.0, 90.0)) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("steering_delay endfire hand value") {
  auto g = pair_on_x(0.1);
  double tau = steering_delay(g, 0, DoaAngle::from_degrees(90.0, 0.0));
  CHECK(tau == doctest::Approx(0.1 / 343.0).epsilon(1e-12));
  CHECK(tau == doctest::Approx(2.915e-4).epsilon(1e-3));
}

TEST_CASE("steering_delay negates when the pair order swaps") {
  ArrayGeometry fwd = pair_on_x(0.13);
  ArrayGeometry rev;
  rev.mic_positions = {fwd.mic_positions[1], fwd.mic_positions[0]};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> azi(-kPi, kPi);
  std::uniform_real_distribution<double> ele(0.0, kPi);
  for (int i = 0; i < 100; ++i) {
    DoaAngle theta(ele(rng), azi(rng));
    CHECK(steering_delay(fwd, 0, theta) ==
          doctest::Approx(-steering_delay(rev, 0, theta)).epsilon(1e-15));
  }
}

TEST_CASE("steering_delay bounded by spacing over c and matches the oracle") {
  ArrayGeometry g = make_circular_array(8, 0.05);
  std::vector<oracle::Pos> mics;
  for (const auto& p : g.mic_positions) mics.push_back({p.x, p.y, p.z});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> azi(-kPi, kPi);
  std::uniform_real_distribution<double> ele(0.0, kPi);
  for (int i = 0; i < 200; ++i) {
    DoaAngle theta(ele(rng), azi(rng));
    for (int p = 0; p < g.pair_count(); ++p) {
      auto [m, mp] = g.pair(p);
      double tau = steering_delay(g, p, theta);
      double expected = oracle::steering_delay(mics[m], mics[mp], theta.elevation,
                                               theta.azimuth, g.speed_of_sound);
      CHECK(tau == doctest::Approx(expected).epsilon(1e-12));
      Vec3 baseline = g.mic_positions[m] - g.mic_positions[mp];
      double spacing = std::sqrt(dot(baseline, baseline));
      CHECK(std::abs(tau) <= spacing / g.speed_of_sound + 1e-15);
    }
  }
}

TEST_CASE("dp_ipd is the identity at broadside") {
  auto g = pair_on_x(0.1);
  DpIpdField field = dp_ipd(g, {500.0, 1000.0, 2000.0},
                            DoaAngle::from_degrees(90.0, 90.0));
  for (const auto& v : field.values) {
    CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("dp_ipd endfire phase hand value") {
  auto g = pair_on_x(0.1);
  DpIpdField field = dp_ipd(g, {1000.0}, DoaAngle::from_degrees(90.0, 0.0));
  double phase = std::arg(field.at(0, 0));
  CHECK(phase == doctest::Approx(-2.0 * kPi * 1000.0 * 0.1 / 343.0).epsilon(1e-12));
  CHECK(phase == doctest::Approx(-1.832).epsilon(1e-3));
}

TEST_CASE("dp_ipd entries have unit magnitude for random directions") {
  ArrayGeometry g = make_circular_array(8, 0.05);
  std::vector<double> freqs;
  for (int k = 1; k <= 64; ++k) freqs.push_back(k * 125.0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> azi(-kPi, kPi);
  std::uniform_real_distribution<double> ele(0.0, kPi);
  for (int i = 0; i < 100; ++i) {
    DpIpdField field = dp_ipd(g, freqs, DoaAngle(ele(rng), azi(rng)));
    for (const auto& v : field.values)
      CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("quantize_azimuth bin convention") {
  AzimuthGrid grid;
  CHECK(grid.bin_count() == 72);
  CHECK(grid.quantize_deg(0.0) == 36);
  CHECK(grid.quantize_deg(-180.0) == 0);
  CHECK(grid.quantize_deg(179.9) == 71);
  CHECK(grid.quantize_deg(180.0) == 0);   // wraps to -180
  CHECK(grid.quantize_deg(-180.1) == 71); // wraps just below the edge
  CHECK(grid.bin_center_deg(36) == doctest::Approx(2.5));
}

TEST_CASE("quantize then bin-center then quantize is idempotent") {
  AzimuthGrid grid;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> azi(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    int a = grid.quantize(azi(rng));
    CHECK(grid.quantize_deg(grid.bin_center_deg(a)) == a);
  }
}

TEST_CASE("pair enumeration covers all m < m'") {
  ArrayGeometry g = make_circular_array(8, 0.05);
  CHECK(g.mic_count() == 8);
  CHECK(g.pair_count() == 28);
  int idx = 0;
  for (int m = 0; m < 8; ++m) {
    for (int mp = m + 1; mp < 8; ++mp) {
      auto [a, b] = g.pair(idx++);
      CHECK(a == m);
      CHECK(b == mp);
    }
  }
}

TEST_CASE("geometry validation rejects degenerate arrays") {
  ArrayGeometry one;
  one.mic_positions = {{0, 0, 0}};
  CHECK_THROWS_AS(one.validate(), std::invalid_argument);
  ArrayGeometry dup;
  dup.mic_positions = {{0, 0, 0}, {0, 0, 0}};
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
}

TEST_CASE("parse_array_spec handles presets and files") {
  ArrayGeometry circ = parse_array_spec("circular:8:0.05");
  CHECK(circ.mic_count() == 8);
  double r = std::sqrt(dot(circ.mic_positions[3], circ.mic_positions[3]));
  CHECK(r == doctest::Approx(0.05));

  CHECK_THROWS(parse_array_spec("circular:8"));
  CHECK_THROWS(parse_array_spec("circular:x:y"));

  std::string path = "test_geometry_tmp.txt";
  {
    std::ofstream out(path);
    out << "# a two mic array\n";
    out << "0.0 0.0 0.0\n";
    out << "0.1 0.0 0.0  # second mic\n";
  }
  ArrayGeometry loaded = parse_array_spec(path);
  CHECK(loaded.mic_count() == 2);
  CHECK(loaded.mic_positions[1].x == doctest::Approx(0.1));
  std::remove(path.c_str());

  CHECK_THROWS(parse_array_spec("no_such_file.txt"));
}
