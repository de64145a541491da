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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oranpower/catalog.hpp"
#include "oranpower/powermodel.hpp"
#include "oranpower/topology.hpp"

namespace oranpower {

// One `section.key = value` assignment.
struct ConfigEntry {
  std::string key;  // full dotted key
  double value = 0.0;
  int line = 0;
};

/// Splits config text into entries. `#` starts a comment; blank lines are
/// skipped. Later duplicates replace earlier ones (warning on `diag`). Throws
/// ConfigError for malformed lines, non-numeric values and unknown keys.
std::vector<ConfigEntry> parse_config(std::string_view text, std::ostream* diag = nullptr);

/// Everything the config file can override. Topology counts stay optional so
/// command-line flags can take precedence.
struct ModelConfig {
  EquipmentCatalog catalog = default_catalog();
  SegmentTable segments = default_segment_params();
  TrafficModel traffic;
  ProvisioningPolicy policy = ProvisioningPolicy::defaults();
  std::optional<std::int64_t> n_ru;
  std::optional<std::int64_t> users_per_ru;
  std::int64_t du_fanout_cap = 4;
  bool provision_to_cap = true;
};

ModelConfig load_model_config(std::string_view text, std::ostream* diag = nullptr);

/// Reads a file and forwards to load_model_config(). Throws ConfigError when
/// the file cannot be opened.
ModelConfig load_model_config_file(const std::string& path, std::ostream* diag = nullptr);

}  // namespace oranpower
