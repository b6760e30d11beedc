/*
 * Copyright 2026 The dolphin-los Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// YAML experiment configuration. Every default can be overridden; unknown
// keys are rejected. Angle-valued entries take a plain number in radians or
// a string with a `deg` or `rad` suffix, e.g. `30deg`.

#ifndef DOLPHIN_CONFIG_HPP_
#define DOLPHIN_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "dolphin/sweep.hpp"

namespace dolphin {

/// Parses configuration text on top of the defaults. `source` names the
/// input in error messages. Throws ConfigError with the key path and, where
/// available, the line number.
SweepSpec parse_config(std::string_view text, std::string_view source = "<config>");

/// Reads and parses a file. A missing or unreadable file is a ConfigError.
SweepSpec load_config(const std::filesystem::path& path);

/// Complete configuration as YAML. Angles are written in radians with
/// round-trip precision, so parse_config(serialize_config(s)) reproduces s.
std::string serialize_config(const SweepSpec& spec);

/// Parses "0.5", "30deg", "30 deg" or "0.5rad" into radians.
double parse_angle_text(std::string_view text);

}  // namespace dolphin

#endif  // DOLPHIN_CONFIG_HPP_
