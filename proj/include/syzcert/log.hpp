// Copyright 2026 The syzcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <atomic>
#include <iostream>
#include <string>

namespace syzcert {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarning = 2, kQuiet = 3 };

inline std::atomic<LogLevel>& log_level() {
  static std::atomic<LogLevel> level{LogLevel::kWarning};
  return level;
}

inline void log_at(LogLevel lvl, const std::string& msg) {
  if (lvl < log_level().load()) return;
  static const char* names[] = {"debug", "info", "warning"};
  std::cerr << names[static_cast<int>(lvl)] << ": " << msg << '\n';
}

inline void log_warning(const std::string& msg) { log_at(LogLevel::kWarning, msg); }
inline void log_debug(const std::string& msg) { log_at(LogLevel::kDebug, msg); }

}  // namespace syzcert
