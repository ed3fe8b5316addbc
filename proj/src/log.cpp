#include "wigprop/log.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace wigprop {

namespace {

std::mutex g_mutex;

void stderr_sink(LogLevel level, std::string_view message) {
  std::cerr << (level == LogLevel::Warning ? "warning: " : "note: ")
            << message << '\n';
}

LogSink& sink() {
  static LogSink s = stderr_sink;
  return s;
}

void emit(LogLevel level, std::string_view message) {
  std::lock_guard lock(g_mutex);
  if (sink()) sink()(level, message);
}

}  // namespace

LogSink set_log_sink(LogSink next) {
  std::lock_guard lock(g_mutex);
  return std::exchange(sink(), std::move(next));
}

void note(std::string_view message) { emit(LogLevel::Note, message); }
void warn(std::string_view message) { emit(LogLevel::Warning, message); }

}  // namespace wigprop
