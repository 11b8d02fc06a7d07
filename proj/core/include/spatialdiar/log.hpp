#pragma once

namespace spatialdiar {

/// Verbosity is read once from the SPATIAL_DIAR_LOG environment variable:
/// off|error|warn|info|debug or a number 0-4. Default is warn.
enum class LogLevel { kOff = 0, kError, kWarn, kInfo, kDebug };

LogLevel log_level();

void log_error(const char* fmt, ...);
void log_warn(const char* fmt, ...);
void log_info(const char* fmt, ...);
void log_debug(const char* fmt, ...);

}  // namespace spatialdiar
