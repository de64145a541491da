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

#include "oranpower/experiments.hpp"

#include <vector>

#include "oranpower/errors.hpp"

namespace oranpower {

std::vector<SweepRecord> sweep_orus(std::int64_t first_ru, std::int64_t last_ru,
                                    std::int64_t users_per_ru,
                                    const std::vector<BbpPlacement>& placements,
                                    const ModelInputs& base, std::int64_t du_fanout_cap) {
  if (first_ru < 1 || last_ru < first_ru) throw DomainError("O-RU range is empty");
  if (placements.empty()) throw DomainError("no placements requested");

  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(last_ru - first_ru + 1) * placements.size());
  ModelInputs inputs = base;
  for (std::int64_t n_ru = first_ru; n_ru <= last_ru; ++n_ru) {
    inputs.topology = build_sweep_topology(n_ru, users_per_ru, du_fanout_cap);
    for (BbpPlacement placement : placements) {
      records.push_back({n_ru, placement, total_power_per_user(inputs, placement)});
    }
  }
  return records;
}

std::vector<FanoutStudyRecord> fanout_study(const std::vector<FanoutCase>& cases, std::int64_t n_ru,
                                            std::int64_t users_per_ru,
                                            const std::vector<BbpPlacement>& placements,
                                            const ModelInputs& base) {
  if (placements.empty()) throw DomainError("no placements requested");

  std::vector<FanoutStudyRecord> records;
  records.reserve(cases.size() * placements.size());
  ModelInputs inputs = base;
  for (const FanoutCase& fanout : cases) {
    inputs.topology = from_fanout_case(fanout, n_ru, users_per_ru);
    for (BbpPlacement placement : placements) {
      records.push_back({fanout, placement, inputs.topology, total_power_per_user(inputs, placement)});
    }
  }
  return records;
}

double reduction_ratio(const PowerBreakdown& a, const PowerBreakdown& b) {
  if (a.total_w == 0.0) throw DomainError("reference total power is zero");
  return 1.0 - b.total_w / a.total_w;
}

namespace {

// Device pricing is restated here rather than borrowed from the closed form.
double device_watts(double load, double rated_w, double capacity, const Provisioning& rule) {
  if (!rule.is_quantized()) return load * rated_w / capacity;
  const double unit = rule.unit_capacity_gbps.value_or(capacity);
  return static_cast<double>(provision_units(load, unit, rule.minimum_units)) * rated_w * (unit / capacity);
}

double device_watts(double load, const EquipmentSpec& e, const Provisioning& rule) {
  return device_watts(load, e.rated_power_w, e.capacity_gbps, rule);
}

// One physical site: a node instance or a link instance.
struct Site {
  std::int64_t radios = 0;  // O-RUs aggregated behind this site
  double load_gbps = 0.0;
};

// Parent index of child `i` when `children` are split into `parents`
// contiguous, balanced blocks.
std::int64_t parent_of(std::int64_t i, std::int64_t children, std::int64_t parents) {
  return i * parents / children;
}

}  // namespace

double brute_force_oracle(const ModelInputs& in, BbpPlacement placement) {
  in.validate();
  const Topology& t = in.topology;
  const double ecpri = in.traffic.ecpri_per_ru_gbps;
  const double user_rate = in.traffic.user_rate_gbps();
  const EquipmentCatalog& cat = in.catalog;

  // Walk every radio up the tree and count what each site aggregates.
  std::vector<Site> rus(static_cast<std::size_t>(t.n_ru));
  std::vector<Site> dus(static_cast<std::size_t>(t.n_du));
  std::vector<Site> cus(static_cast<std::size_t>(t.n_cu));
  std::vector<Site> dcs(static_cast<std::size_t>(t.n_dc));
  for (std::int64_t r = 0; r < t.n_ru; ++r) {
    const std::int64_t du = parent_of(r, t.n_ru, t.n_du);
    const std::int64_t cu = parent_of(du, t.n_du, t.n_cu);
    const std::int64_t dc = parent_of(cu, t.n_cu, t.n_dc);
    rus[static_cast<std::size_t>(r)].radios += 1;
    dus[static_cast<std::size_t>(du)].radios += 1;
    cus[static_cast<std::size_t>(cu)].radios += 1;
    dcs[static_cast<std::size_t>(dc)].radios += 1;
  }
  for (Site& s : rus) s.load_gbps = ecpri;
  for (Site& s : dus) {
    s.load_gbps = in.provision_to_cap ? static_cast<double>(t.du_fanout_cap) * ecpri
                                      : static_cast<double>(s.radios) * ecpri;
  }
  for (Site& s : cus) s.load_gbps = static_cast<double>(s.radios) * ecpri;
  for (Site& s : dcs) s.load_gbps = static_cast<double>(s.radios) * ecpri;

  double total = 0.0;

  // Nodes.
  const std::vector<Site>* sites_by_node[] = {&rus, &dus, &cus, &dcs};
  const EquipmentSpec* nic_by_node[] = {&cat.radio, &cat.access_switch, &cat.core_switch, &cat.core_switch};
  const ServerSpec* server_by_node[] = {&cat.edge_server, &cat.edge_server, &cat.edge_server, &cat.dc_server};
  for (int k = 0; k < 4; ++k) {
    const SegmentParams& p = in.segments[static_cast<std::size_t>(k)];
    const double weight = p.alpha * p.sigma;
    const EquipmentSpec& nic = *nic_by_node[k];
    const ServerSpec& server = *server_by_node[k];
    for (const Site& site : *sites_by_node[k]) {
      if (k < index_of(placement)) {
        total += weight * device_watts(site.load_gbps, nic, in.policy[EquipmentClass::Interfaces]);
      } else if (k == index_of(placement)) {
        total += weight * (device_watts(site.load_gbps, server.total_power_w(), server.server_capacity_gbps,
                                        in.policy[EquipmentClass::Servers]) +
                           device_watts(site.load_gbps, nic, in.policy[EquipmentClass::Interfaces]));
      } else {
        const std::int64_t users = site.radios * t.users_per_ru;
        for (std::int64_t u = 0; u < users; ++u) {
          total += weight * user_rate * nic.rated_power_w / nic.capacity_gbps;
        }
      }
    }
  }

  // Links: fronthaul per O-RU, midhaul per O-DU, backhaul per O-CU.
  const std::vector<Site>* sites_by_link[] = {&rus, &dus, &cus};
  const EquipmentSpec* switch_by_link[] = {&cat.access_switch, &cat.core_switch, &cat.core_switch};
  for (int k = 0; k < 3; ++k) {
    const SegmentParams& p = in.segments[static_cast<std::size_t>(4 + k)];
    const double weight = p.alpha * p.sigma;
    // The link ends at node k + 1; it carries eCPRI if BBP happens there or later.
    const bool carries_ecpri = k + 1 <= index_of(placement);

    struct Device {
      const EquipmentSpec* spec;
      EquipmentClass cls;
    };
    std::vector<Device> devices;
    for (int h = 0; h <= p.hops_switch; ++h) devices.push_back({switch_by_link[k], EquipmentClass::Switches});
    for (int h = 0; h <= p.hops_wdm; ++h) devices.push_back({&cat.wdm_link, EquipmentClass::Links});
    if (p.gamma == 1) {
      for (int h = 0; h <= p.hops_router; ++h) devices.push_back({&cat.router, EquipmentClass::Routers});
    }

    for (const Site& site : *sites_by_link[k]) {
      if (carries_ecpri) {
        for (const Device& d : devices) total += weight * device_watts(site.load_gbps, *d.spec, in.policy[d.cls]);
      } else {
        const std::int64_t users = site.radios * t.users_per_ru;
        for (std::int64_t u = 0; u < users; ++u) {
          for (const Device& d : devices) {
            total += weight * user_rate * d.spec->rated_power_w / d.spec->capacity_gbps;
          }
        }
      }
    }
  }

  // UEs.
  for (std::int64_t u = 0; u < t.n_users; ++u) total += user_rate * 1e9 * cat.ue_energy_j_per_bit;

  return total;
}

}  // namespace oranpower
