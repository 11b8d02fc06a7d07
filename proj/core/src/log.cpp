#include "spatialdiar/log.hpp"

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace spatialdiar {

namespace {

LogLevel parse_level(const char* value) {
  if (!value || !*value) return LogLevel::kWarn;
  if (std::strcmp(value, "off") == 0) return LogLevel::kOff;
  if (std::strcmp(value, "error") == 0) return LogLevel::kError;
  if (std::strcmp(value, "warn") == 0) return LogLevel::kWarn;
  if (std::strcmp(value, "info") == 0) return LogLevel::kInfo;
  if (std::strcmp(value, "debug") == 0) return LogLevel::kDebug;
  char* end = nullptr;
  long n = std::strtol(value, &end, 10);
  if (end && *end == '\0' && n >= 0 && n <= 4) return static_cast<LogLevel>(n);
  return LogLevel::kWarn;
}

void emit(LogLevel level, const char* tag, const char* fmt, va_list args) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::fprintf(stderr, "[%s] ", tag);
  std::vfprintf(stderr, fmt, args);
  std::fputc('\n', stderr);
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("SPATIAL_DIAR_LOG"));
  return level;
}

#define SPATIALDIAR_LOG_IMPL(level, tag)      \
  va_list args;                               \
  va_start(args, fmt);                        \
  emit(level, tag, fmt, args);                \
  va_end(args)

void log_error(const char* fmt, ...) { SPATIALDIAR_LOG_IMPL(LogLevel::kError, "error"); }
void log_warn(const char* fmt, ...) { SPATIALDIAR_LOG_IMPL(LogLevel::kWarn, "warn"); }
void log_info(const char* fmt, ...) { SPATIALDIAR_LOG_IMPL(LogLevel::kInfo, "info"); }
void log_debug(const char* fmt, ...) { SPATIALDIAR_LOG_IMPL(LogLevel::kDebug, "debug"); }

#undef SPATIALDIAR_LOG_IMPL

}  // namespace spatialdiar
