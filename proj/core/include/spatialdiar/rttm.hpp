#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace spatialdiar {

/// Labeled speech intervals for one recording; the interchange type between
/// the diarizer, RTTM I/O and the DER scorer.
struct SpeakerSegments {
  std::string recording_id;
  struct Segment {
    std::string speaker;
    double onset = 0.0;     // seconds
    double duration = 0.0;  // seconds, > 0

    bool operator==(const Segment&) const = default;
  };
  std::vector<Segment> segments;

  bool operator==(const SpeakerSegments&) const = default;
};

/// Parses `SPEAKER <file> <chan> <onset> <dur> <NA> <NA> <spk> <NA> <NA>`
/// records grouped by file id. Blank lines and '#'/';;' comments are
/// ignored, as are non-SPEAKER record types. Malformed SPEAKER lines throw
/// std::runtime_error naming the line number.
std::map<std::string, SpeakerSegments> parse_rttm(std::istream& in);
std::map<std::string, SpeakerSegments> parse_rttm(const std::string& text);
std::map<std::string, SpeakerSegments> parse_rttm_file(const std::string& path);

/// Serializes segments; onsets and durations are floored to 10 ms.
void write_rttm(std::ostream& out, const SpeakerSegments& segments);
std::string write_rttm(const SpeakerSegments& segments);
void write_rttm_file(const std::string& path,
                     const std::vector<SpeakerSegments>& recordings);

}  // namespace spatialdiar
