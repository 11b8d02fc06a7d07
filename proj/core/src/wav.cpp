#include "spatialdiar/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace spatialdiar {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
               static_cast<char>((v >> 16) & 0xFF),
               static_cast<char>((v >> 24) & 0xFF)};
  out.write(b, 4);
}

void write_u16(std::ostream& out, uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF)};
  out.write(b, 2);
}

}  // namespace

MultiChannelAudio read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open wav file: " + path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0)
    throw std::runtime_error(path + ": not a RIFF file");
  read_u32(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0)
    throw std::runtime_error(path + ": not a WAVE file");

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  std::vector<char> data;
  bool have_fmt = false, have_data = false;

  while (in.read(tag, 4)) {
    uint32_t size = read_u32(in);
    if (!in) break;
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format = read_u16(in);
      channels = read_u16(in);
      sample_rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      if (size > 16) in.ignore(size - 16);
      if (format == kFormatExtensible) {
        // SubFormat GUID's first two bytes carry the actual format code; we
        // already skipped the extension, so reparse is not possible. Treat
        // by bit depth below.
        format = (bits == 32) ? kFormatFloat : kFormatPcm;
      }
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data.resize(size);
      in.read(data.data(), size);
      if (static_cast<uint32_t>(in.gcount()) != size)
        throw std::runtime_error(path + ": truncated data chunk");
      have_data = true;
    } else {
      in.ignore(size);
    }
    if (size & 1) in.ignore(1);  // chunks are word-aligned
  }

  if (!have_fmt || !have_data)
    throw std::runtime_error(path + ": missing fmt or data chunk");
  if (channels == 0 || sample_rate == 0)
    throw std::runtime_error(path + ": invalid fmt chunk");

  const bool is_float = format == kFormatFloat && bits == 32;
  const bool is_pcm16 = format == kFormatPcm && bits == 16;
  if (!is_float && !is_pcm16)
    throw std::runtime_error(path + ": unsupported format (need PCM16 or float32)");

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frame_bytes = bytes_per_sample * channels;
  const std::size_t frames = data.size() / frame_bytes;

  MultiChannelAudio audio;
  audio.sample_rate = static_cast<int>(sample_rate);
  audio.channels.assign(channels, std::vector<double>(frames));
  const unsigned char* raw = reinterpret_cast<const unsigned char*>(data.data());
  for (std::size_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      const unsigned char* s = raw + i * frame_bytes + c * bytes_per_sample;
      if (is_pcm16) {
        int16_t v = static_cast<int16_t>(s[0] | (s[1] << 8));
        audio.channels[c][i] = v / 32768.0;
      } else {
        float v;
        std::memcpy(&v, s, 4);
        audio.channels[c][i] = v;
      }
    }
  }
  return audio;
}

void write_wav_float32(const std::string& path, const MultiChannelAudio& audio) {
  if (audio.channels.empty())
    throw std::invalid_argument("cannot write wav with zero channels");
  for (const auto& ch : audio.channels)
    if (ch.size() != audio.sample_count())
      throw std::invalid_argument("channel lengths differ");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot create wav file: " + path);

  const uint16_t channels = static_cast<uint16_t>(audio.channel_count());
  const uint32_t frames = static_cast<uint32_t>(audio.sample_count());
  const uint32_t data_bytes = frames * channels * 4;

  out.write("RIFF", 4);
  write_u32(out, 4 + (8 + 16) + (8 + 4) + (8 + data_bytes));
  out.write("WAVE", 4);

  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, kFormatFloat);
  write_u16(out, channels);
  write_u32(out, static_cast<uint32_t>(audio.sample_rate));
  write_u32(out, static_cast<uint32_t>(audio.sample_rate) * channels * 4);
  write_u16(out, channels * 4);
  write_u16(out, 32);

  out.write("fact", 4);
  write_u32(out, 4);
  write_u32(out, frames);

  out.write("data", 4);
  write_u32(out, data_bytes);
  for (uint32_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      float v = static_cast<float>(audio.channels[c][i]);
      char b[4];
      std::memcpy(b, &v, 4);
      out.write(b, 4);
    }
  }
  if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace spatialdiar
