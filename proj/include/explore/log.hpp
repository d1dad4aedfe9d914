#pragma once

#include <string_view>

namespace explore {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Threshold comes from EXPLORE_LOG (error|warn|info|debug), default warn.
LogLevel log_threshold();
void log_message(LogLevel level, std::string_view text);

inline void log_info(std::string_view text) { log_message(LogLevel::Info, text); }
inline void log_warn(std::string_view text) { log_message(LogLevel::Warn, text); }
inline void log_debug(std::string_view text) {
  if (log_threshold() >= LogLevel::Debug) log_message(LogLevel::Debug, text);
}

}  // namespace explore
