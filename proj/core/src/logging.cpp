// Copyright 2026 The magic-switch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magicswitch/logging.hpp"

#include <memory>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "logger.hpp"

namespace magicswitch {
namespace detail {

spdlog::logger& logger() {
  static const std::shared_ptr<spdlog::logger> instance = [] {
    auto sink = std::make_shared<spdlog::sinks::stderr_sink_mt>();
    auto lg = std::make_shared<spdlog::logger>("magicswitch", sink);
    lg->set_pattern("[%l] %v");
    lg->set_level(spdlog::level::info);
    return lg;
  }();
  return *instance;
}

}  // namespace detail

void set_log_level(LogLevel level) {
  using spdlog::level::level_enum;
  level_enum mapped = level_enum::info;
  switch (level) {
    case LogLevel::debug: mapped = level_enum::debug; break;
    case LogLevel::info: mapped = level_enum::info; break;
    case LogLevel::warn: mapped = level_enum::warn; break;
    case LogLevel::error: mapped = level_enum::err; break;
    case LogLevel::off: mapped = level_enum::off; break;
  }
  detail::logger().set_level(mapped);
}

LogLevel log_level() {
  switch (detail::logger().level()) {
    case spdlog::level::trace:
    case spdlog::level::debug: return LogLevel::debug;
    case spdlog::level::info: return LogLevel::info;
    case spdlog::level::warn: return LogLevel::warn;
    case spdlog::level::err:
    case spdlog::level::critical: return LogLevel::error;
    default: return LogLevel::off;
  }
}

}  // namespace magicswitch
