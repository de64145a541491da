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
#include <random>

#include "oranpower/catalog.hpp"
#include "oranpower/errors.hpp"

using namespace oranpower;

namespace {

bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("default catalog carries the commercial equipment figures") {
  const EquipmentCatalog c = default_catalog();
  CHECK(c.router.rated_power_w == 172.0);
  CHECK(c.router.capacity_gbps == 3200.0);
  CHECK(c.core_switch.rated_power_w == 3000.0);
  CHECK(c.core_switch.capacity_gbps == 25600.0);
  CHECK(c.access_switch.rated_power_w == 86.7);
  CHECK(c.access_switch.capacity_gbps == 480.0);
  CHECK(c.wdm_link.rated_power_w == 4265.0);
  CHECK(c.wdm_link.capacity_gbps == 9600.0);
  CHECK(c.radio.rated_power_w == 110.0);
  CHECK(c.radio.capacity_gbps == 22.0);
  CHECK(c.edge_server.cores == 4);
  CHECK(c.edge_server.per_core_power_w == 6.0);
  CHECK(c.edge_server.server_capacity_gbps == 1.0);
  CHECK(c.dc_server.cores == 20);
  CHECK(c.dc_server.per_core_power_w == 5.5);
  CHECK(c.dc_server.server_capacity_gbps == 5.0);
  CHECK(c.ue_energy_j_per_bit == doctest::Approx(25e-9).epsilon(1e-15));
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("server energy per bit is total power over total capacity") {
  const EquipmentCatalog c = default_catalog();
  CHECK(c.edge_server.energy_per_capacity() == doctest::Approx(24.0));
  CHECK(c.dc_server.energy_per_capacity() == doctest::Approx(22.0));
  for (const ServerSpec* s : {&c.edge_server, &c.dc_server}) {
    CHECK(close_rel(s->per_core_power_w / s->per_core_capacity_gbps, s->energy_per_capacity(), 1e-12));
  }
}

TEST_CASE("energy_per_capacity") {
  const EquipmentCatalog c = default_catalog();
  CHECK(energy_per_capacity(c.core_switch) == 0.1171875);
  CHECK(energy_per_capacity(c.radio) == 5.0);
  CHECK_THROWS_AS(energy_per_capacity(EquipmentSpec{"broken", 10.0, 0.0}), InvalidSpecError);
  CHECK_THROWS_AS(energy_per_capacity(EquipmentSpec{"broken", -1.0, 10.0}), InvalidSpecError);
}

TEST_CASE("server spec rejects inconsistent pooled capacity") {
  ServerSpec s{3, 6.0, 0.25, 1.0};
  CHECK_THROWS_AS(s.validate(), InvalidSpecError);
  s.server_capacity_gbps = 0.75;
  CHECK_NOTHROW(s.validate());
  s.cores = 0;
  CHECK_THROWS_AS(s.validate(), InvalidSpecError);
}

TEST_CASE("negative UE energy is invalid") {
  EquipmentCatalog c = default_catalog();
  c.ue_energy_j_per_bit = -1e-9;
  CHECK_THROWS_AS(c.validate(), InvalidSpecError);
  c.ue_energy_j_per_bit = 0.0;
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("catalog survives a config text round trip") {
  std::mt19937_64 rng(20260415);
  std::uniform_real_distribution<double> power(0.1, 5000.0);
  std::uniform_real_distribution<double> cap(0.01, 30000.0);
  std::uniform_int_distribution<int> cores(1, 64);

  for (int trial = 0; trial < 200; ++trial) {
    EquipmentCatalog c = default_catalog();
    for (EquipmentSpec* e : {&c.radio, &c.access_switch, &c.core_switch, &c.wdm_link, &c.router}) {
      e->rated_power_w = power(rng);
      e->capacity_gbps = cap(rng);
    }
    for (ServerSpec* s : {&c.edge_server, &c.dc_server}) {
      s->cores = cores(rng);
      s->per_core_power_w = power(rng) / 100.0;
      s->per_core_capacity_gbps = cap(rng) / 1000.0;
      s->server_capacity_gbps = s->cores * s->per_core_capacity_gbps;
    }
    c.ue_energy_j_per_bit = power(rng) * 1e-11;
    REQUIRE_NOTHROW(c.validate());

    const EquipmentCatalog back = load_catalog(to_config_text(c));
    for (auto [a, b] : {std::pair{&c.radio, &back.radio}, std::pair{&c.router, &back.router},
                        std::pair{&c.wdm_link, &back.wdm_link}, std::pair{&c.core_switch, &back.core_switch},
                        std::pair{&c.access_switch, &back.access_switch}}) {
      CHECK(close_rel(a->rated_power_w, b->rated_power_w, 1e-12));
      CHECK(close_rel(a->capacity_gbps, b->capacity_gbps, 1e-12));
    }
    CHECK(back.edge_server.cores == c.edge_server.cores);
    CHECK(close_rel(back.dc_server.server_capacity_gbps, c.dc_server.server_capacity_gbps, 1e-12));
    CHECK(close_rel(back.dc_server.per_core_power_w, c.dc_server.per_core_power_w, 1e-12));
    CHECK(close_rel(back.ue_energy_j_per_bit, c.ue_energy_j_per_bit, 1e-12));
  }
}
