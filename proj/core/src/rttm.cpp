#include "spatialdiar/rttm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spatialdiar {

namespace {

bool parse_seconds(const std::string& s, double& out) {
  std::size_t pos = 0;
  try {
    out = std::stod(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

// Floor to 10 ms, with a guard against values like 1.23 stored as 1.2299...
std::string format_time(double seconds) {
  long long cs = static_cast<long long>(std::floor(seconds * 100.0 + 1e-7));
  if (cs < 0) cs = 0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld", cs / 100, cs % 100);
  return buf;
}

}  // namespace

std::map<std::string, SpeakerSegments> parse_rttm(std::istream& in) {
  std::map<std::string, SpeakerSegments> recordings;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> fields;
    std::string tok;
    while (ls >> tok) fields.push_back(tok);
    if (fields.empty()) continue;
    if (fields[0][0] == '#' || fields[0].rfind(";;", 0) == 0) continue;
    if (fields[0] != "SPEAKER") continue;  // other record types
    if (fields.size() != 10)
      throw std::runtime_error("rttm line " + std::to_string(line_no) +
                               ": expected 10 fields, got " +
                               std::to_string(fields.size()));
    double onset = 0.0, duration = 0.0;
    if (!parse_seconds(fields[3], onset))
      throw std::runtime_error("rttm line " + std::to_string(line_no) +
                               ": bad onset '" + fields[3] + "'");
    if (!parse_seconds(fields[4], duration))
      throw std::runtime_error("rttm line " + std::to_string(line_no) +
                               ": bad duration '" + fields[4] + "'");
    if (onset < 0.0)
      throw std::runtime_error("rttm line " + std::to_string(line_no) +
                               ": negative onset");
    if (duration <= 0.0)
      throw std::runtime_error("rttm line " + std::to_string(line_no) +
                               ": duration must be > 0");
    auto& rec = recordings[fields[1]];
    rec.recording_id = fields[1];
    rec.segments.push_back({fields[7], onset, duration});
  }
  return recordings;
}

std::map<std::string, SpeakerSegments> parse_rttm(const std::string& text) {
  std::istringstream in(text);
  return parse_rttm(in);
}

std::map<std::string, SpeakerSegments> parse_rttm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rttm file: " + path);
  try {
    return parse_rttm(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_rttm(std::ostream& out, const SpeakerSegments& segments) {
  for (const auto& seg : segments.segments)
    out << "SPEAKER " << segments.recording_id << " 1 " << format_time(seg.onset)
        << ' ' << format_time(seg.duration) << " <NA> <NA> " << seg.speaker
        << " <NA> <NA>\n";
}

std::string write_rttm(const SpeakerSegments& segments) {
  std::ostringstream out;
  write_rttm(out, segments);
  return out.str();
}

void write_rttm_file(const std::string& path,
                     const std::vector<SpeakerSegments>& recordings) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot create rttm file: " + path);
  for (const auto& rec : recordings) write_rttm(out, rec);
}

}  // namespace spatialdiar
