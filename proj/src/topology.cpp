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

#include "oranpower/topology.hpp"

#include <algorithm>
#include <sstream>

#include "oranpower/errors.hpp"

namespace oranpower {

namespace {

constexpr std::array<std::string_view, 7> kSegmentNames = {"oru",       "odu",     "ocu",     "dc",
                                                           "fronthaul", "midhaul", "backhaul"};

}  // namespace

NodeKind downstream_endpoint(Segment link) {
  switch (link) {
    case Segment::Fronthaul:
      return NodeKind::ODU;
    case Segment::Midhaul:
      return NodeKind::OCU;
    case Segment::Backhaul:
      return NodeKind::DC;
    default:
      throw DomainError("not a link segment: " + std::string(to_string(link)));
  }
}

std::string_view to_string(NodeKind n) { return kSegmentNames[static_cast<std::size_t>(index_of(n))]; }

std::string_view to_string(Segment s) { return kSegmentNames[static_cast<std::size_t>(index_of(s))]; }

std::optional<NodeKind> parse_node_kind(std::string_view text) {
  for (NodeKind n : kNodeKinds) {
    if (to_string(n) == text) return n;
  }
  return std::nullopt;
}

std::optional<Segment> parse_segment(std::string_view text) {
  for (std::size_t i = 0; i < kSegmentNames.size(); ++i) {
    if (kSegmentNames[i] == text) return static_cast<Segment>(i);
  }
  return std::nullopt;
}

std::int64_t Topology::count(NodeKind n) const {
  switch (n) {
    case NodeKind::ORU:
      return n_ru;
    case NodeKind::ODU:
      return n_du;
    case NodeKind::OCU:
      return n_cu;
    case NodeKind::DC:
      return n_dc;
  }
  throw DomainError("unknown node kind");
}

Topology make_topology(std::int64_t n_ru, std::int64_t n_du, std::int64_t n_cu, std::int64_t n_dc,
                       std::int64_t users_per_ru, std::int64_t du_fanout_cap) {
  return Topology{n_ru, n_du, n_cu, n_dc, users_per_ru, n_ru * users_per_ru, du_fanout_cap};
}

std::vector<std::string> validate(const Topology& t) {
  std::vector<std::string> out;
  if (t.n_dc < 1) out.emplace_back("n_dc >= 1");
  if (t.n_cu < t.n_dc) out.emplace_back("n_cu >= n_dc");
  if (t.n_du < t.n_cu) out.emplace_back("n_du >= n_cu");
  if (t.n_ru < t.n_du) out.emplace_back("n_ru >= n_du");
  if (t.users_per_ru < 1) out.emplace_back("users_per_ru >= 1");
  if (t.du_fanout_cap < 1) out.emplace_back("du_fanout_cap >= 1");
  if (t.n_users != t.n_ru * t.users_per_ru) out.emplace_back("n_users = n_ru x users_per_ru");
  return out;
}

void require_valid(const Topology& topology) {
  const auto violations = validate(topology);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "invalid topology:";
  for (const auto& v : violations) os << " [" << v << "]";
  throw ValidationError(os.str());
}

SegmentTable default_segment_params() {
  // sigma, alpha, coverage node; hops default to a single device per class.
  return {{
      {Segment::ORU, 1.0, 5.0, NodeKind::ORU},
      {Segment::ODU, 2.0, 5.0, NodeKind::ODU},
      {Segment::OCU, 2.0, 5.0, NodeKind::OCU},
      {Segment::DC, 1.5, 1.3, NodeKind::DC},
      {Segment::Fronthaul, 2.0, 5.0, NodeKind::ORU},
      {Segment::Midhaul, 2.0, 5.0, NodeKind::ODU},
      {Segment::Backhaul, 1.5, 2.0, NodeKind::OCU, 0, 0, 0, 1},
  }};
}

std::vector<std::string> validate(const SegmentTable& table) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const SegmentParams& p = table[i];
    const std::string name(kSegmentNames[i]);
    if (index_of(p.segment) != static_cast<int>(i)) out.push_back(name + ": entry out of order");
    if (!(p.sigma >= 1.0)) out.push_back(name + ": sigma >= 1");
    if (!(p.alpha >= 1.0)) out.push_back(name + ": alpha >= 1");
    if (p.hops_switch < 0 || p.hops_wdm < 0 || p.hops_router < 0) out.push_back(name + ": hops >= 0");
    if (p.gamma != 0 && p.gamma != 1) out.push_back(name + ": gamma in {0, 1}");
  }
  return out;
}

double coverage_factor(const Topology& topology, const SegmentParams& params) {
  return static_cast<double>(topology.count(params.coverage_node)) /
         static_cast<double>(topology.n_users);
}

Topology build_sweep_topology(std::int64_t n_ru, std::int64_t users_per_ru,
                              std::int64_t du_fanout_cap) {
  if (n_ru < 1 || users_per_ru < 1 || du_fanout_cap < 1) {
    throw DomainError("sweep topology needs n_ru, users_per_ru and du_fanout_cap >= 1");
  }
  const std::int64_t n_du = (n_ru + du_fanout_cap - 1) / du_fanout_cap;
  return make_topology(n_ru, n_du, 1, 1, users_per_ru, du_fanout_cap);
}

const std::vector<FanoutCase>& builtin_fanout_cases() {
  static const std::vector<FanoutCase> cases = {
      {"C-1", 1, 1, 1}, {"C-2", 1, 10, 1}, {"C-3", 1, 1, 10}, {"C-4", 10, 1, 1}, {"C-5", 2, 2, 2},
  };
  return cases;
}

std::optional<FanoutCase> find_fanout_case(std::string_view label) {
  const auto& cases = builtin_fanout_cases();
  auto it = std::find_if(cases.begin(), cases.end(), [&](const FanoutCase& c) { return c.label == label; });
  if (it == cases.end()) return std::nullopt;
  return *it;
}

Topology from_fanout_case(const FanoutCase& fanout, std::int64_t n_ru, std::int64_t users_per_ru) {
  if (fanout.du_fanout < 1 || fanout.cu_fanout < 1 || fanout.dc_fanout < 1) {
    throw DomainError(fanout.label + ": fanouts must be >= 1");
  }
  if (n_ru < 1 || users_per_ru < 1) throw DomainError("n_ru and users_per_ru must be >= 1");

  auto divide = [&](std::int64_t children, std::int64_t fan, const char* level) {
    if (children % fan != 0) {
      std::ostringstream os;
      os << fanout.label << ": " << level << " fanout " << fan << " does not divide " << children;
      throw DivisibilityError(os.str());
    }
    return children / fan;
  };
  const std::int64_t n_du = divide(n_ru, fanout.du_fanout, "O-DU");
  const std::int64_t n_cu = divide(n_du, fanout.cu_fanout, "O-CU");
  const std::int64_t n_dc = divide(n_cu, fanout.dc_fanout, "DC");
  return make_topology(n_ru, n_du, n_cu, n_dc, users_per_ru, fanout.du_fanout);
}

}  // namespace oranpower
