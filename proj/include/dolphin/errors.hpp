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

#ifndef DOLPHIN_ERRORS_HPP_
#define DOLPHIN_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace dolphin {

// Invalid parameters or configuration. Raised at construction/load time,
// never from inside a simulation step.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degenerate geometry, e.g. coincident waypoints.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A simulation step produced a non-finite or runaway state.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(long step, std::string field, double value)
      : std::runtime_error("state diverged at step " + std::to_string(step) +
                           ": " + field + " = " + std::to_string(value)),
        step_(step),
        field_(std::move(field)) {}

  long step() const { return step_; }
  const std::string& field() const { return field_; }

 private:
  long step_;
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dolphin

#endif  // DOLPHIN_ERRORS_HPP_
