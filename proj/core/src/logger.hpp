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

#ifndef MAGICSWITCH_SRC_LOGGER_HPP_
#define MAGICSWITCH_SRC_LOGGER_HPP_

#include <spdlog/logger.h>

namespace magicswitch::detail {

spdlog::logger& logger();

}  // namespace magicswitch::detail

#endif  // MAGICSWITCH_SRC_LOGGER_HPP_
