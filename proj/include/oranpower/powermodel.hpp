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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "oranpower/catalog.hpp"
#include "oranpower/topology.hpp"

namespace oranpower {

inline constexpr double kBitsPerGigabyte = 8e9;
inline constexpr double kSecondsPerMonth = 30.0 * 24.0 * 3600.0;

/// Mean baseband rate in Gbps of a user consuming `monthly_gb` per 30-day month.
double user_baseband_rate(double monthly_gb);

struct TrafficModel {
  double monthly_gb_per_user = 10.0;
  double ecpri_per_ru_gbps = 11.0;  // 7.2 split, provisioned peak

  double user_rate_gbps() const { return user_baseband_rate(monthly_gb_per_user); }
  bool operator==(const TrafficModel&) const = default;
};

// Where baseband processing happens. Exactly one node per evaluation.
using BbpPlacement = NodeKind;

enum class Branch { BeforeBbp, OnNode, AfterBbp };

Branch branch_for(NodeKind node, BbpPlacement placement);

// True when the link still carries eCPRI, i.e. BBP happens at or past its far end.
bool segment_precedes_bbp(Segment link, BbpPlacement placement);

enum class EquipmentClass : int { Servers = 0, Interfaces, Switches, Links, Routers };

std::string_view to_string(EquipmentClass c);

/// Capacity-to-hardware mapping for one equipment class.
///
/// Linear charges load * (power / capacity). Quantized buys whole units of
/// `unit_capacity_gbps` (the equipment's own capacity when unset), at least
/// `minimum_units` of them; a unit costs rated_power * unit / capacity.
struct Provisioning {
  enum class Mode { Linear, Quantized };

  Mode mode = Mode::Linear;
  std::optional<double> unit_capacity_gbps;
  std::int64_t minimum_units = 0;

  static Provisioning linear() { return {}; }
  static Provisioning quantized(std::optional<double> unit = std::nullopt, std::int64_t min_units = 0) {
    return {Mode::Quantized, unit, min_units};
  }

  bool is_quantized() const { return mode == Mode::Quantized; }
  bool operator==(const Provisioning&) const = default;
};

struct ProvisioningPolicy {
  std::array<Provisioning, 5> classes{};

  const Provisioning& operator[](EquipmentClass c) const {
    return classes[static_cast<std::size_t>(c)];
  }
  Provisioning& operator[](EquipmentClass c) { return classes[static_cast<std::size_t>(c)]; }

  /// Every class linear.
  static ProvisioningPolicy all_linear();
  /// Servers quantized to whole servers, transport linear.
  static ProvisioningPolicy defaults();

  void validate() const;
  bool operator==(const ProvisioningPolicy&) const = default;
};

/// max(minimum_units, ceil(load / unit_capacity)). Throws DomainError when the
/// unit capacity is not positive or the load is negative.
std::int64_t provision_units(double load_gbps, double unit_capacity_gbps, std::int64_t minimum_units);

/// Power of one device class carrying `load_gbps` under `rule`.
double provisioned_power(double load_gbps, const EquipmentSpec& equipment, const Provisioning& rule);

/// Power of the BBP servers at one node instance.
double bbp_server_power(double load_gbps, const ServerSpec& server, const Provisioning& rule);

/// Everything an evaluation depends on.
struct ModelInputs {
  Topology topology;
  TrafficModel traffic;
  EquipmentCatalog catalog = default_catalog();
  SegmentTable segments = default_segment_params();
  ProvisioningPolicy policy = ProvisioningPolicy::defaults();
  // O-DUs sized for du_fanout_cap O-RUs rather than the attached average.
  bool provision_to_cap = true;

  void validate() const;
};

struct NodeLoad {
  NodeKind node = NodeKind::ORU;
  double load_gbps = 0.0;  // provisioned eCPRI per node instance
  std::int64_t instances = 1;
};

NodeLoad node_ecpri_load(const Topology& topology, const TrafficModel& traffic, NodeKind node,
                         bool provision_to_cap);

// Node-interface equipment: radio at the O-RU, access switch at the O-DU,
// core switch at the O-CU and DC.
const EquipmentSpec& interface_equipment(const EquipmentCatalog& catalog, NodeKind node);
const ServerSpec& server_for(const EquipmentCatalog& catalog, NodeKind node);
// Fronthaul aggregates on access switches; midhaul and backhaul on core switches.
const EquipmentSpec& switch_equipment(const EquipmentCatalog& catalog, Segment link);

/// Processing watts per user attributed to `node`.
double processing_power_per_user(const ModelInputs& inputs, BbpPlacement placement, NodeKind node);

struct NodeTerm {
  NodeKind node = NodeKind::ORU;
  Branch branch = Branch::BeforeBbp;
  double watts = 0.0;
};

struct SegmentTerm {
  Segment segment = Segment::Fronthaul;
  bool carries_ecpri = false;
  double watts = 0.0;
};

struct TransmissionPower {
  std::array<SegmentTerm, 3> segments{};
  double ue_w = 0.0;
  double total_w = 0.0;
};

TransmissionPower transmission_power_per_user(const ModelInputs& inputs, BbpPlacement placement);

/// Per-user power split by node, link segment and UE.
struct PowerBreakdown {
  std::array<NodeTerm, 4> nodes{};
  std::array<SegmentTerm, 3> segments{};
  double ue_w = 0.0;
  double processing_w = 0.0;
  double transmission_w = 0.0;
  double total_w = 0.0;

  double node_watts(NodeKind n) const { return nodes[static_cast<std::size_t>(index_of(n))].watts; }
  double segment_watts(Segment link) const;
};

PowerBreakdown total_power_per_user(const ModelInputs& inputs, BbpPlacement placement);

}  // namespace oranpower
