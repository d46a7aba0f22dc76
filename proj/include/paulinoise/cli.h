// Copyright 2026 The paulinoise Authors
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

#ifndef PAULINOISE_CLI_H
#define PAULINOISE_CLI_H

#include <ostream>

namespace paulinoise {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_INTERNAL = 1;
inline constexpr int EXIT_VALIDATION = 2;
inline constexpr int EXIT_PHYSICALITY = 3;

/// Entry point of the `paulinoise` tool. Returns the process exit code:
/// 0 on success, 2 on validation errors (flags, files, shapes, caps), 3 on
/// physicality errors, 1 on anything unexpected.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace paulinoise

#endif
