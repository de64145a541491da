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

#include "oranpower/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "oranpower/errors.hpp"

namespace oranpower {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_dots(std::string_view key) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    parts.push_back(key.substr(start, dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts;
}

template <std::size_t N>
bool one_of(std::string_view s, const std::array<std::string_view, N>& options) {
  for (auto o : options) {
    if (o == s) return true;
  }
  return false;
}

constexpr std::array<std::string_view, 5> kDevices = {"router", "core_switch", "access_switch", "wdm_link",
                                                      "radio"};
constexpr std::array<std::string_view, 2> kServers = {"edge_server", "dc_server"};
constexpr std::array<std::string_view, 4> kServerFields = {"cores", "per_core_power_w", "per_core_capacity_gbps",
                                                           "server_capacity_gbps"};
constexpr std::array<std::string_view, 4> kTopologyFields = {"n_ru", "users_per_ru", "du_fanout_cap",
                                                             "provision_to_cap"};
constexpr std::array<std::string_view, 6> kSegmentFields = {"sigma",   "alpha",       "hops_switch",
                                                            "hops_wdm", "hops_router", "gamma"};
constexpr std::array<std::string_view, 5> kPolicyClasses = {"servers", "interfaces", "switches", "links",
                                                            "routers"};
constexpr std::array<std::string_view, 3> kPolicyFields = {"quantized", "unit_gbps", "min_units"};

struct KeyInfo {
  bool known = false;
  bool integral = false;
};

KeyInfo classify(std::string_view key) {
  const auto parts = split_dots(key);
  if (parts.size() == 2) {
    const auto section = parts[0];
    const auto field = parts[1];
    if (one_of(section, kDevices)) return {field == "power_w" || field == "capacity_gbps", false};
    if (one_of(section, kServers)) return {one_of(field, kServerFields), field == "cores"};
    if (section == "ue") return {field == "energy_nj_per_bit", false};
    if (section == "topology") return {one_of(field, kTopologyFields), true};
    if (section == "traffic") return {field == "monthly_gb" || field == "ecpri_gbps", false};
  }
  if (parts.size() == 3) {
    if (parts[0] == "segment" && parse_segment(parts[1]) && one_of(parts[2], kSegmentFields)) {
      return {true, parts[2] != "sigma" && parts[2] != "alpha"};
    }
    if (parts[0] == "policy" && one_of(parts[1], kPolicyClasses) && one_of(parts[2], kPolicyFields)) {
      return {true, parts[2] != "unit_gbps"};
    }
  }
  return {};
}

double parse_number(std::string_view text, int line, std::string_view key) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError("value for '" + std::string(key) + "' is not a number: '" + std::string(text) + "'",
                      line);
  }
  return value;
}

std::int64_t as_integer(const ConfigEntry& e) {
  if (e.value != std::floor(e.value) || std::abs(e.value) > 9.0e15) {
    throw ConfigError("'" + e.key + "' expects an integer", e.line);
  }
  return static_cast<std::int64_t>(e.value);
}

bool as_flag(const ConfigEntry& e) {
  const auto v = as_integer(e);
  if (v != 0 && v != 1) throw ConfigError("'" + e.key + "' expects 0 or 1", e.line);
  return v == 1;
}

EquipmentSpec& device_for(EquipmentCatalog& c, std::string_view name) {
  if (name == "router") return c.router;
  if (name == "core_switch") return c.core_switch;
  if (name == "access_switch") return c.access_switch;
  if (name == "wdm_link") return c.wdm_link;
  return c.radio;
}

struct PolicyOverride {
  std::optional<bool> quantized;
  std::optional<double> unit;
  std::optional<std::int64_t> min_units;
};

}  // namespace

std::vector<ConfigEntry> parse_config(std::string_view text, std::ostream* diag) {
  std::vector<ConfigEntry> entries;
  std::map<std::string, std::size_t, std::less<>> index;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'section.key = value'", line_no);
    const auto key = trim(line.substr(0, eq));
    const auto raw = trim(line.substr(eq + 1));
    const KeyInfo info = classify(key);
    if (!info.known) throw ConfigError("unknown key '" + std::string(key) + "'", line_no);

    ConfigEntry entry{std::string(key), parse_number(raw, line_no, key), line_no};
    if (info.integral) (void)as_integer(entry);

    if (auto it = index.find(key); it != index.end()) {
      if (diag) {
        *diag << "warning: line " << line_no << ": duplicate key '" << key << "' overrides line "
              << entries[it->second].line << '\n';
      }
      entries[it->second] = std::move(entry);
    } else {
      index.emplace(std::string(key), entries.size());
      entries.push_back(std::move(entry));
    }
  }
  return entries;
}

ModelConfig load_model_config(std::string_view text, std::ostream* diag) {
  ModelConfig cfg;
  std::map<std::string_view, PolicyOverride> policy;
  const auto entries = parse_config(text, diag);

  for (const ConfigEntry& e : entries) {
    const auto parts = split_dots(e.key);
    const auto section = parts[0];
    const auto field = parts[1];
    if (parts.size() == 2 && one_of(section, kDevices)) {
      EquipmentSpec& d = device_for(cfg.catalog, section);
      (field == "power_w" ? d.rated_power_w : d.capacity_gbps) = e.value;
    } else if (parts.size() == 2 && one_of(section, kServers)) {
      ServerSpec& s = section == "edge_server" ? cfg.catalog.edge_server : cfg.catalog.dc_server;
      if (field == "cores") {
        const auto cores = as_integer(e);
        if (cores < 1 || cores > 1'000'000) throw ValidationError(e.key + ": cores >= 1");
        s.cores = static_cast<int>(cores);
      } else if (field == "per_core_power_w") {
        s.per_core_power_w = e.value;
      } else if (field == "per_core_capacity_gbps") {
        s.per_core_capacity_gbps = e.value;
      } else {
        s.server_capacity_gbps = e.value;
      }
    } else if (section == "ue") {
      cfg.catalog.ue_energy_j_per_bit = e.value * 1e-9;
    } else if (section == "topology") {
      if (field == "provision_to_cap") {
        cfg.provision_to_cap = as_flag(e);
        continue;
      }
      const auto v = as_integer(e);
      if (v < 1) throw ValidationError(e.key + " >= 1");
      if (field == "n_ru") cfg.n_ru = v;
      if (field == "users_per_ru") cfg.users_per_ru = v;
      if (field == "du_fanout_cap") cfg.du_fanout_cap = v;
    } else if (section == "traffic") {
      if (e.value < 0.0) throw ValidationError(e.key + " >= 0");
      (field == "monthly_gb" ? cfg.traffic.monthly_gb_per_user : cfg.traffic.ecpri_per_ru_gbps) = e.value;
    } else if (section == "segment") {
      SegmentParams& p = params_for(cfg.segments, *parse_segment(field));
      const auto attr = parts[2];
      if (attr == "sigma") p.sigma = e.value;
      if (attr == "alpha") p.alpha = e.value;
      if (attr == "hops_switch") p.hops_switch = static_cast<int>(as_integer(e));
      if (attr == "hops_wdm") p.hops_wdm = static_cast<int>(as_integer(e));
      if (attr == "hops_router") p.hops_router = static_cast<int>(as_integer(e));
      if (attr == "gamma") p.gamma = as_flag(e) ? 1 : 0;
    } else if (section == "policy") {
      PolicyOverride& o = policy[field];
      const auto attr = parts[2];
      if (attr == "quantized") o.quantized = as_flag(e);
      if (attr == "unit_gbps") o.unit = e.value;
      if (attr == "min_units") o.min_units = as_integer(e);
    }
  }

  for (std::size_t i = 0; i < kPolicyClasses.size(); ++i) {
    auto it = policy.find(kPolicyClasses[i]);
    if (it == policy.end()) continue;
    const PolicyOverride& o = it->second;
    Provisioning& rule = cfg.policy.classes[i];
    const bool quantized = o.quantized.value_or(rule.is_quantized() || o.unit || o.min_units);
    rule.mode = quantized ? Provisioning::Mode::Quantized : Provisioning::Mode::Linear;
    if (o.unit) rule.unit_capacity_gbps = *o.unit;
    if (o.min_units) rule.minimum_units = *o.min_units;
  }

  try {
    cfg.catalog.validate();
  } catch (const InvalidSpecError& e) {
    throw ValidationError(e.what());
  }
  if (const auto v = validate(cfg.segments); !v.empty()) {
    throw ValidationError("segment parameters violate: " + v.front());
  }
  cfg.policy.validate();
  return cfg;
}

ModelConfig load_model_config_file(const std::string& path, std::ostream* diag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model_config(buf.str(), diag);
}

}  // namespace oranpower
