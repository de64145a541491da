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

#include "oranpower/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include "oranpower/config.hpp"
#include "oranpower/errors.hpp"

namespace oranpower {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void append_number(std::ostringstream& os, const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << key << " = " << buf << '\n';
}

}  // namespace

void EquipmentSpec::validate() const {
  if (!positive_finite(rated_power_w)) {
    throw InvalidSpecError(name + ": rated_power must be > 0");
  }
  if (!positive_finite(capacity_gbps)) {
    throw InvalidSpecError(name + ": capacity must be > 0");
  }
}

double energy_per_capacity(const EquipmentSpec& spec) {
  spec.validate();
  return spec.rated_power_w / spec.capacity_gbps;
}

void ServerSpec::validate(std::string_view name) const {
  const std::string n(name);
  if (cores < 1) throw InvalidSpecError(n + ": cores must be >= 1");
  if (!positive_finite(per_core_power_w)) throw InvalidSpecError(n + ": per_core_power must be > 0");
  if (!positive_finite(per_core_capacity_gbps)) {
    throw InvalidSpecError(n + ": per_core_capacity must be > 0");
  }
  if (!positive_finite(server_capacity_gbps)) {
    throw InvalidSpecError(n + ": server_capacity must be > 0");
  }
  const double pooled = cores * per_core_capacity_gbps;
  if (std::abs(pooled - server_capacity_gbps) > 1e-12 * server_capacity_gbps) {
    throw InvalidSpecError(n + ": server_capacity must equal cores x per_core_capacity");
  }
}

void EquipmentCatalog::validate() const {
  for (const EquipmentSpec* e : {&radio, &access_switch, &core_switch, &wdm_link, &router}) {
    e->validate();
  }
  edge_server.validate("edge_server");
  dc_server.validate("dc_server");
  if (!std::isfinite(ue_energy_j_per_bit) || ue_energy_j_per_bit < 0.0) {
    throw InvalidSpecError("ue: energy per bit must be >= 0");
  }
}

EquipmentCatalog default_catalog() {
  EquipmentCatalog c;
  c.router = {"router", 172.0, 3200.0};
  c.core_switch = {"core_switch", 3000.0, 25600.0};
  c.access_switch = {"access_switch", 86.7, 480.0};
  c.wdm_link = {"wdm_link", 4265.0, 9600.0};
  c.radio = {"radio", 110.0, 22.0};
  c.edge_server = {4, 6.0, 0.25, 1.0};
  c.dc_server = {20, 5.5, 0.25, 5.0};
  c.ue_energy_j_per_bit = 25e-9;
  return c;
}

EquipmentCatalog load_catalog(std::string_view config_text, std::ostream* diag) {
  return load_model_config(config_text, diag).catalog;
}

std::string to_config_text(const EquipmentCatalog& catalog) {
  std::ostringstream os;
  const std::pair<const char*, const EquipmentSpec*> devices[] = {
      {"router", &catalog.router},   {"core_switch", &catalog.core_switch},
      {"access_switch", &catalog.access_switch}, {"wdm_link", &catalog.wdm_link},
      {"radio", &catalog.radio}};
  for (const auto& [name, e] : devices) {
    const std::string prefix(name);
    append_number(os, (prefix + ".power_w").c_str(), e->rated_power_w);
    append_number(os, (prefix + ".capacity_gbps").c_str(), e->capacity_gbps);
  }
  const std::pair<const char*, const ServerSpec*> servers[] = {{"edge_server", &catalog.edge_server},
                                                              {"dc_server", &catalog.dc_server}};
  for (const auto& [name, s] : servers) {
    const std::string prefix(name);
    append_number(os, (prefix + ".cores").c_str(), s->cores);
    append_number(os, (prefix + ".per_core_power_w").c_str(), s->per_core_power_w);
    append_number(os, (prefix + ".per_core_capacity_gbps").c_str(), s->per_core_capacity_gbps);
    append_number(os, (prefix + ".server_capacity_gbps").c_str(), s->server_capacity_gbps);
  }
  append_number(os, "ue.energy_nj_per_bit", catalog.ue_energy_j_per_bit * 1e9);
  return os.str();
}

}  // namespace oranpower
