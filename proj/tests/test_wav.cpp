#include "spatialdiar/wav.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

using namespace spatialdiar;

TEST_CASE("float32 wav round-trips exactly") {
  MultiChannelAudio audio;
  audio.sample_rate = 16000;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  audio.channels.assign(3, std::vector<double>(500));
  for (auto& ch : audio.channels)
    for (auto& v : ch) v = static_cast<float>(dist(rng));  // float-representable

  const std::string path = "test_wav_tmp.wav";
  write_wav_float32(path, audio);
  MultiChannelAudio back = read_wav(path);
  std::remove(path.c_str());

  REQUIRE(back.channel_count() == 3);
  REQUIRE(back.sample_count() == 500);
  CHECK(back.sample_rate == 16000);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < 500; ++i)
      CHECK(back.channels[c][i] == audio.channels[c][i]);
}

TEST_CASE("pcm16 wav reads with the expected scaling") {
  const std::string path = "test_wav_pcm_tmp.wav";
  {
    // Hand-built 1-channel PCM16 file with samples {0, 16384, -32768}.
    std::ofstream out(path, std::ios::binary);
    auto u32 = [&](uint32_t v) { out.write(reinterpret_cast<char*>(&v), 4); };
    auto u16 = [&](uint16_t v) { out.write(reinterpret_cast<char*>(&v), 2); };
    out.write("RIFF", 4);
    u32(36 + 6);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    u32(16);
    u16(1);      // PCM
    u16(1);      // mono
    u32(8000);   // rate
    u32(16000);  // byte rate
    u16(2);      // block align
    u16(16);     // bits
    out.write("data", 4);
    u32(6);
    u16(0);
    u16(16384);
    u16(0x8000);
  }
  MultiChannelAudio audio = read_wav(path);
  std::remove(path.c_str());
  REQUIRE(audio.channel_count() == 1);
  REQUIRE(audio.sample_count() == 3);
  CHECK(audio.sample_rate == 8000);
  CHECK(audio.channels[0][0] == doctest::Approx(0.0));
  CHECK(audio.channels[0][1] == doctest::Approx(0.5));
  CHECK(audio.channels[0][2] == doctest::Approx(-1.0));
}

TEST_CASE("wav reader rejects missing and malformed files") {
  CHECK_THROWS_AS(read_wav("definitely_missing.wav"), std::runtime_error);
  const std::string path = "test_wav_bad_tmp.wav";
  {
    std::ofstream out(path, std::ios::binary);
    out << "this is not a wav file";
  }
  CHECK_THROWS_AS(read_wav(path), std::runtime_error);
  std::remove(path.c_str());
}
