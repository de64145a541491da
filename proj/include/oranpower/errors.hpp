/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The oranpower authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace oranpower {

// Equipment or server spec violates an invariant (non-positive capacity etc).
class InvalidSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Config text could not be parsed or contains an unknown key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  // 1-based line number, 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Parsed values violate a catalog/topology invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Node counts implied by a fanout case are not integral.
class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oranpower
