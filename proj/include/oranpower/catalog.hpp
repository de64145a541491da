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

#include <iosfwd>
#include <string>
#include <string_view>

namespace oranpower {

/// A transport or radio device operated at its rated power regardless of load.
struct EquipmentSpec {
  std::string name;
  double rated_power_w = 0.0;
  double capacity_gbps = 0.0;

  void validate() const;
  bool operator==(const EquipmentSpec&) const = default;
};

/// Watts per Gbps of provisioned capacity. Throws InvalidSpecError when the
/// capacity is not positive.
double energy_per_capacity(const EquipmentSpec& spec);

/// A baseband-processing server.
///
/// The server is treated as a pool of `cores` identical cores; its energy per
/// bit is total power over total capacity, which equals the per-core ratio
/// when `server_capacity_gbps == cores * per_core_capacity_gbps`.
struct ServerSpec {
  int cores = 1;
  double per_core_power_w = 0.0;
  double per_core_capacity_gbps = 0.0;
  double server_capacity_gbps = 0.0;

  double total_power_w() const { return cores * per_core_power_w; }
  double energy_per_capacity() const { return total_power_w() / server_capacity_gbps; }

  void validate(std::string_view name = "server") const;
  bool operator==(const ServerSpec&) const = default;
};

struct EquipmentCatalog {
  EquipmentSpec radio;
  EquipmentSpec access_switch;
  EquipmentSpec core_switch;
  EquipmentSpec wdm_link;
  EquipmentSpec router;
  ServerSpec edge_server;  // O-RU, O-DU and O-CU sites
  ServerSpec dc_server;
  double ue_energy_j_per_bit = 0.0;

  void validate() const;
  bool operator==(const EquipmentCatalog&) const = default;
};

/// Commercial equipment figures used throughout the model: Cisco 8000 router,
/// Cisco 9600 core switch, Cisco 1300 access switch, 1FINITY T600 WDM line
/// system, Benetel 650 radio, 4x6 W / 1 Gbps edge servers, 20x5.5 W / 5 Gbps
/// DC servers and 25 nJ/bit at the UE.
EquipmentCatalog default_catalog();

/// Applies the catalog keys of a `section.key = value` config text on top of
/// default_catalog(). Keys belonging to the topology/segment/traffic/policy
/// sections are accepted and ignored; anything else is rejected. Duplicate
/// keys are reported on `diag` when it is non-null.
EquipmentCatalog load_catalog(std::string_view config_text, std::ostream* diag = nullptr);

/// Renders every catalog field as config text that load_catalog() accepts.
std::string to_config_text(const EquipmentCatalog& catalog);

}  // namespace oranpower
