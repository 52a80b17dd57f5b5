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

#ifndef MAGICSWITCH_LOGGING_HPP_
#define MAGICSWITCH_LOGGING_HPP_

namespace magicswitch {

// The library logs renormalization factors and LP statuses to stderr at
// info level. Sweeps over hundreds of points produce a lot of output, so
// tests and quiet callers usually lower this to warn.
enum class LogLevel { debug, info, warn, error, off };

void set_log_level(LogLevel level);
LogLevel log_level();

}  // namespace magicswitch

#endif  // MAGICSWITCH_LOGGING_HPP_
