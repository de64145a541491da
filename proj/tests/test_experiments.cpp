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

#include <doctest.h>

#include <cmath>

#include "oranpower/errors.hpp"
#include "oranpower/experiments.hpp"

using namespace oranpower;

namespace {

const std::vector<BbpPlacement> kAll(kNodeKinds.begin(), kNodeKinds.end());

ModelInputs with_policy(ProvisioningPolicy policy) {
  ModelInputs in;
  in.policy = policy;
  return in;
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("sweep cardinality and ordering") {
  const auto records = sweep_orus(1, 100, 10, kAll, ModelInputs{});
  REQUIRE(records.size() == 400);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].n_ru == static_cast<std::int64_t>(i / 4 + 1));
    CHECK(records[i].placement == kAll[i % 4]);
  }
  CHECK_THROWS_AS(sweep_orus(1, 0, 10, kAll, ModelInputs{}), DomainError);
  CHECK_THROWS_AS(sweep_orus(1, 5, 10, {}, ModelInputs{}), DomainError);
}

TEST_CASE("sweep record at 100 O-RUs, BBP at the DC") {
  const auto records = sweep_orus(100, 100, 10, {NodeKind::DC}, with_policy(ProvisioningPolicy::all_linear()));
  REQUIRE(records.size() == 1);
  CHECK(records[0].breakdown.total_w == doctest::Approx(93.2981596257716).epsilon(1e-12));
}

TEST_CASE("O-DU processing jumps when a fifth O-RU needs a second O-DU") {
  const auto records = sweep_orus(4, 5, 10, {NodeKind::ODU}, with_policy(ProvisioningPolicy::defaults()));
  REQUIRE(records.size() == 2);
  CHECK(records[1].breakdown.processing_w > records[0].breakdown.processing_w);
  CHECK(records[0].breakdown.processing_w == doctest::Approx(293.48691822193285).epsilon(1e-12));
  CHECK(records[1].breakdown.processing_w == doctest::Approx(453.07904322193286).epsilon(1e-12));
}

TEST_CASE("fanout study: O-CU fanout amortises node interfaces") {
  ModelInputs base;
  base.policy[EquipmentClass::Interfaces] = Provisioning::quantized(480.0, 1);
  const auto records = fanout_study({*find_fanout_case("C-1"), *find_fanout_case("C-2")}, 20, 10,
                                    {NodeKind::OCU}, base);
  REQUIRE(records.size() == 2);
  CHECK(records[1].breakdown.processing_w < records[0].breakdown.processing_w);
}

TEST_CASE("fanout study: DC fanout removes server rounding waste") {
  const auto records = fanout_study({*find_fanout_case("C-1"), *find_fanout_case("C-3")}, 10, 10,
                                    {NodeKind::DC}, ModelInputs{});
  REQUIRE(records.size() == 2);
  const auto& c1 = records[0];
  const auto& c3 = records[1];
  CHECK(c1.topology.n_dc == 10);
  CHECK(c3.topology.n_dc == 1);
  // C-3: 110 Gbps per DC = 22 servers exactly; C-1: 11 Gbps per DC rounds up to 3 servers.
  CHECK(c3.breakdown.node_watts(NodeKind::DC) ==
        doctest::Approx(1.95 * 0.01 * (22 * 110.0 + 110.0 * 0.1171875)).epsilon(1e-12));
  CHECK(c1.breakdown.node_watts(NodeKind::DC) ==
        doctest::Approx(1.95 * 0.1 * (3 * 110.0 + 11.0 * 0.1171875)).epsilon(1e-12));
  CHECK(c3.breakdown.processing_w < c1.breakdown.processing_w);
}

TEST_CASE("fanout study: BBP at the O-RU is identical for every case") {
  const auto records = fanout_study(builtin_fanout_cases(), 40, 10, {NodeKind::ORU}, ModelInputs{});
  REQUIRE(records.size() == 5);
  for (const auto& r : records) {
    CHECK(r.breakdown.total_w == records[0].breakdown.total_w);
    CHECK(r.breakdown.processing_w == records[0].breakdown.processing_w);
    CHECK(r.breakdown.transmission_w == records[0].breakdown.transmission_w);
  }
}

TEST_CASE("fanout study propagates divisibility errors with the case label") {
  try {
    fanout_study({*find_fanout_case("C-4")}, 7, 10, kAll, ModelInputs{});
    FAIL("expected DivisibilityError");
  } catch (const DivisibilityError& e) {
    CHECK(std::string(e.what()).find("C-4") != std::string::npos);
  }
}

TEST_CASE("reduction ratio") {
  PowerBreakdown a, b;
  a.total_w = 159.5;
  b.total_w = 93.3;
  CHECK(reduction_ratio(a, b) == doctest::Approx(1.0 - 93.3 / 159.5));
  CHECK(reduction_ratio(a, a) == 0.0);
  b.total_w = 0.0;
  CHECK(reduction_ratio(a, b) == 1.0);
  a.total_w = 0.0;
  CHECK_THROWS_AS(reduction_ratio(a, b), DomainError);
}

TEST_CASE("oracle: single radio with a single user") {
  ModelInputs in;
  in.topology = build_sweep_topology(1, 1, 4);
  const double closed = total_power_per_user(in, NodeKind::ORU).total_w;
  CHECK(closed == doctest::Approx(1595.001293697756).epsilon(1e-12));
  CHECK(close_rel(brute_force_oracle(in, NodeKind::ORU), closed, 1e-9));
}

TEST_CASE("oracle: O-DU provisioned to cap with three radios") {
  ModelInputs in;
  in.topology = build_sweep_topology(3, 10, 4);
  for (BbpPlacement p : kNodeKinds) {
    CHECK(close_rel(brute_force_oracle(in, p) / 30.0, total_power_per_user(in, p).total_w, 1e-9));
  }
  // One O-DU server pool sized for 44 Gbps: 44 edge servers at 24 W each, weighted by alpha*sigma = 10.
  const double odu_only = total_power_per_user(in, NodeKind::ODU).node_watts(NodeKind::ODU);
  CHECK(odu_only * 30.0 == doctest::Approx(10.0 * (44 * 24.0 + 44.0 * 86.7 / 480.0)).epsilon(1e-12));
}

TEST_CASE("oracle agrees on fanout topologies with hops and quantized transport") {
  ModelInputs in;
  in.policy[EquipmentClass::Interfaces] = Provisioning::quantized(480.0, 1);
  in.policy[EquipmentClass::Switches] = Provisioning::quantized();
  in.policy[EquipmentClass::Links] = Provisioning::quantized(100.0);
  in.policy[EquipmentClass::Routers] = Provisioning::quantized();
  for (Segment s : kLinkSegments) {
    params_for(in.segments, s).hops_switch = 2;
    params_for(in.segments, s).hops_wdm = 1;
    params_for(in.segments, s).hops_router = 3;
  }
  for (const FanoutCase& c : builtin_fanout_cases()) {
    in.topology = from_fanout_case(c, 40, 7);
    for (BbpPlacement p : kNodeKinds) {
      CAPTURE(c.label);
      CHECK(close_rel(brute_force_oracle(in, p) / static_cast<double>(in.topology.n_users),
                      total_power_per_user(in, p).total_w, 1e-9));
    }
  }
}

TEST_CASE("oracle agrees with attached-load O-DUs in linear mode") {
  ModelInputs in;
  in.policy = ProvisioningPolicy::all_linear();
  in.provision_to_cap = false;
  for (std::int64_t n_ru = 1; n_ru <= 30; ++n_ru) {
    in.topology = build_sweep_topology(n_ru, 10, 4);
    for (BbpPlacement p : kNodeKinds) {
      CHECK(close_rel(brute_force_oracle(in, p) / static_cast<double>(in.topology.n_users),
                      total_power_per_user(in, p).total_w, 1e-9));
    }
  }
}

TEST_CASE("sweep is deterministic") {
  const auto a = sweep_orus(1, 30, 10, kAll, ModelInputs{});
  const auto b = sweep_orus(1, 30, 10, kAll, ModelInputs{});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].breakdown.total_w == b[i].breakdown.total_w);
    CHECK(a[i].breakdown.processing_w == b[i].breakdown.processing_w);
  }
}
