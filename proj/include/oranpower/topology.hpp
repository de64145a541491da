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
#include <string>
#include <string_view>
#include <vector>

namespace oranpower {

// Aggregation order from the cell edge toward the data center.
enum class NodeKind : int { ORU = 0, ODU = 1, OCU = 2, DC = 3 };

inline constexpr std::array<NodeKind, 4> kNodeKinds = {NodeKind::ORU, NodeKind::ODU, NodeKind::OCU,
                                                       NodeKind::DC};

enum class Segment : int {
  ORU = 0,
  ODU,
  OCU,
  DC,
  Fronthaul,
  Midhaul,
  Backhaul,
};

inline constexpr std::array<Segment, 3> kLinkSegments = {Segment::Fronthaul, Segment::Midhaul,
                                                         Segment::Backhaul};

inline constexpr int index_of(NodeKind n) { return static_cast<int>(n); }
inline constexpr int index_of(Segment s) { return static_cast<int>(s); }

// Node segment for a node kind.
inline constexpr Segment segment_of(NodeKind n) { return static_cast<Segment>(index_of(n)); }

// Upstream endpoint of a link segment (Fronthaul ends at the O-DU, ...).
NodeKind downstream_endpoint(Segment link);

// Lowercase names: "oru", "odu", "ocu", "dc", "fronthaul", "midhaul", "backhaul".
std::string_view to_string(NodeKind n);
std::string_view to_string(Segment s);
std::optional<NodeKind> parse_node_kind(std::string_view text);
std::optional<Segment> parse_segment(std::string_view text);

struct Topology {
  std::int64_t n_ru = 1;
  std::int64_t n_du = 1;
  std::int64_t n_cu = 1;
  std::int64_t n_dc = 1;
  std::int64_t users_per_ru = 1;
  std::int64_t n_users = 1;
  // Number of O-RUs an O-DU is provisioned for.
  std::int64_t du_fanout_cap = 1;

  std::int64_t count(NodeKind n) const;

  bool operator==(const Topology&) const = default;
};

/// Builds a topology with consistent derived fields. Does not validate.
Topology make_topology(std::int64_t n_ru, std::int64_t n_du, std::int64_t n_cu, std::int64_t n_dc,
                       std::int64_t users_per_ru, std::int64_t du_fanout_cap);

/// Returns every violated invariant as a readable message; empty means valid.
std::vector<std::string> validate(const Topology& topology);

/// Throws ValidationError listing all violations.
void require_valid(const Topology& topology);

/// Per-segment modeling parameters (overhead, overprovisioning, coverage, hops).
struct SegmentParams {
  Segment segment = Segment::ORU;
  double sigma = 1.0;  // overhead: cooling, conversion, distribution losses
  double alpha = 1.0;  // overprovisioning headroom
  NodeKind coverage_node = NodeKind::ORU;
  int hops_switch = 0;
  int hops_wdm = 0;
  int hops_router = 0;
  int gamma = 0;  // 1 when routers are on the path

  bool operator==(const SegmentParams&) const = default;
};

using SegmentTable = std::array<SegmentParams, 7>;

inline const SegmentParams& params_for(const SegmentTable& table, Segment s) {
  return table[static_cast<std::size_t>(index_of(s))];
}
inline SegmentParams& params_for(SegmentTable& table, Segment s) {
  return table[static_cast<std::size_t>(index_of(s))];
}

SegmentTable default_segment_params();

/// Returns violations of sigma >= 1, alpha >= 1, hops >= 0, gamma in {0,1}.
std::vector<std::string> validate(const SegmentTable& table);

/// Instance count of the segment's coverage node divided by the user count.
double coverage_factor(const Topology& topology, const SegmentParams& params);

/// O-RU sweep topology: one more O-DU whenever n_ru passes a multiple of the cap;
/// a single O-CU and DC.
Topology build_sweep_topology(std::int64_t n_ru, std::int64_t users_per_ru,
                              std::int64_t du_fanout_cap);

struct FanoutCase {
  std::string label;
  std::int64_t du_fanout = 1;  // O-RUs per O-DU
  std::int64_t cu_fanout = 1;  // O-DUs per O-CU
  std::int64_t dc_fanout = 1;  // O-CUs per DC

  bool operator==(const FanoutCase&) const = default;
};

/// C-1 .. C-5.
const std::vector<FanoutCase>& builtin_fanout_cases();
std::optional<FanoutCase> find_fanout_case(std::string_view label);

/// Derives node counts from exact fanout ratios. The O-DU fanout cap is set to
/// the case's O-DU fanout. Throws DivisibilityError naming the level that does
/// not divide.
Topology from_fanout_case(const FanoutCase& fanout, std::int64_t n_ru, std::int64_t users_per_ru);

}  // namespace oranpower
