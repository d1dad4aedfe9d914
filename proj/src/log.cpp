#include "explore/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace explore {

LogLevel log_threshold() {
  static const LogLevel level = [] {
    const char* env = std::getenv("EXPLORE_LOG");
    std::string v = env ? env : "";
    if (v == "error") return LogLevel::Error;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

void log_message(LogLevel level, std::string_view text) {
  if (level > log_threshold()) return;
  static std::mutex mu;
  static constexpr const char* kNames[] = {"error", "warn", "info", "debug"};
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[" << kNames[static_cast<int>(level)] << "] " << text << '\n';
}

}  // namespace explore
