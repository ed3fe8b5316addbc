#pragma once

#include <functional>
#include <string_view>

namespace wigprop {

enum class LogLevel { Note, Warning };

using LogSink = std::function<void(LogLevel, std::string_view)>;

/// Replaces the process-wide sink (default: stderr). Returns the previous
/// one so callers can restore it.
LogSink set_log_sink(LogSink sink);

void note(std::string_view message);
void warn(std::string_view message);

}  // namespace wigprop
