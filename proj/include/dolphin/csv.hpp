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

#ifndef DOLPHIN_CSV_HPP_
#define DOLPHIN_CSV_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dolphin {

/// Locale-independent `%.9g`.
std::string format_double(double value, int significant_digits = 9);

/// Splits one CSV line on commas. No quoting support; none of the files
/// written here need it.
std::vector<std::string> split_csv_line(std::string_view line);

/// Writes `contents` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

/// Throws IoError.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace dolphin

#endif  // DOLPHIN_CSV_HPP_
