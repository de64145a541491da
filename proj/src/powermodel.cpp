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

#include "oranpower/powermodel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "oranpower/errors.hpp"

namespace oranpower {

double user_baseband_rate(double monthly_gb) {
  if (!(monthly_gb >= 0.0) || !std::isfinite(monthly_gb)) {
    throw DomainError("monthly data volume must be a finite value >= 0");
  }
  return monthly_gb * kBitsPerGigabyte / kSecondsPerMonth / 1e9;
}

Branch branch_for(NodeKind node, BbpPlacement placement) {
  if (index_of(node) < index_of(placement)) return Branch::BeforeBbp;
  if (node == placement) return Branch::OnNode;
  return Branch::AfterBbp;
}

bool segment_precedes_bbp(Segment link, BbpPlacement placement) {
  return index_of(downstream_endpoint(link)) <= index_of(placement);
}

std::string_view to_string(EquipmentClass c) {
  switch (c) {
    case EquipmentClass::Servers:
      return "servers";
    case EquipmentClass::Interfaces:
      return "interfaces";
    case EquipmentClass::Switches:
      return "switches";
    case EquipmentClass::Links:
      return "links";
    case EquipmentClass::Routers:
      return "routers";
  }
  return "?";
}

ProvisioningPolicy ProvisioningPolicy::all_linear() { return {}; }

ProvisioningPolicy ProvisioningPolicy::defaults() {
  ProvisioningPolicy p;
  p[EquipmentClass::Servers] = Provisioning::quantized();
  return p;
}

void ProvisioningPolicy::validate() const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Provisioning& rule = classes[i];
    const std::string name(to_string(static_cast<EquipmentClass>(i)));
    if (rule.minimum_units < 0) throw ValidationError("policy " + name + ": minimum_units >= 0");
    if (rule.unit_capacity_gbps && !(*rule.unit_capacity_gbps > 0.0)) {
      throw ValidationError("policy " + name + ": unit_capacity > 0");
    }
  }
}

std::int64_t provision_units(double load_gbps, double unit_capacity_gbps, std::int64_t minimum_units) {
  if (!(unit_capacity_gbps > 0.0)) throw DomainError("unit capacity must be > 0");
  if (!(load_gbps >= 0.0)) throw DomainError("load must be >= 0");
  const double ratio = load_gbps / unit_capacity_gbps;
  // Absorb representation error so that e.g. 3.3 / 1.1 counts as 3 units.
  const double nearest = std::round(ratio);
  const double units = std::abs(ratio - nearest) <= 1e-12 * nearest ? nearest : std::ceil(ratio);
  return std::max(minimum_units, static_cast<std::int64_t>(units));
}

namespace {

// Quantized power of `units` devices each sized `unit` Gbps drawn from a model
// rated at `rated_w` for `capacity` Gbps.
double quantized_power(double load, double rated_w, double capacity, const Provisioning& rule) {
  const double unit = rule.unit_capacity_gbps.value_or(capacity);
  const double unit_power = rated_w * (unit / capacity);
  return static_cast<double>(provision_units(load, unit, rule.minimum_units)) * unit_power;
}

}  // namespace

double provisioned_power(double load_gbps, const EquipmentSpec& equipment, const Provisioning& rule) {
  if (rule.is_quantized()) {
    return quantized_power(load_gbps, equipment.rated_power_w, equipment.capacity_gbps, rule);
  }
  return load_gbps * energy_per_capacity(equipment);
}

double bbp_server_power(double load_gbps, const ServerSpec& server, const Provisioning& rule) {
  if (!(load_gbps >= 0.0)) throw DomainError("load must be >= 0");
  if (rule.is_quantized()) {
    return quantized_power(load_gbps, server.total_power_w(), server.server_capacity_gbps, rule);
  }
  return load_gbps * server.energy_per_capacity();
}

void ModelInputs::validate() const {
  catalog.validate();
  require_valid(topology);
  if (const auto v = oranpower::validate(segments); !v.empty()) {
    std::ostringstream os;
    os << "invalid segment parameters:";
    for (const auto& m : v) os << " [" << m << "]";
    throw ValidationError(os.str());
  }
  policy.validate();
  if (!(traffic.ecpri_per_ru_gbps >= 0.0)) throw ValidationError("traffic: ecpri_per_ru >= 0");
  (void)traffic.user_rate_gbps();
}

NodeLoad node_ecpri_load(const Topology& topology, const TrafficModel& traffic, NodeKind node,
                         bool provision_to_cap) {
  const double ecpri = traffic.ecpri_per_ru_gbps;
  const auto per_instance = [&](std::int64_t parents) {
    return static_cast<double>(topology.n_ru) / static_cast<double>(parents) * ecpri;
  };
  NodeLoad out{node, 0.0, topology.count(node)};
  switch (node) {
    case NodeKind::ORU:
      out.load_gbps = ecpri;
      break;
    case NodeKind::ODU:
      out.load_gbps = provision_to_cap ? static_cast<double>(topology.du_fanout_cap) * ecpri
                                       : per_instance(topology.n_du);
      break;
    case NodeKind::OCU:
      out.load_gbps = per_instance(topology.n_cu);
      break;
    case NodeKind::DC:
      out.load_gbps = per_instance(topology.n_dc);
      break;
  }
  return out;
}

const EquipmentSpec& interface_equipment(const EquipmentCatalog& catalog, NodeKind node) {
  switch (node) {
    case NodeKind::ORU:
      return catalog.radio;
    case NodeKind::ODU:
      return catalog.access_switch;
    case NodeKind::OCU:
    case NodeKind::DC:
      return catalog.core_switch;
  }
  throw DomainError("unknown node kind");
}

const ServerSpec& server_for(const EquipmentCatalog& catalog, NodeKind node) {
  return node == NodeKind::DC ? catalog.dc_server : catalog.edge_server;
}

const EquipmentSpec& switch_equipment(const EquipmentCatalog& catalog, Segment link) {
  switch (link) {
    case Segment::Fronthaul:
      return catalog.access_switch;
    case Segment::Midhaul:
    case Segment::Backhaul:
      return catalog.core_switch;
    default:
      throw DomainError("not a link segment: " + std::string(to_string(link)));
  }
}

namespace {

double node_term(const ModelInputs& in, BbpPlacement placement, NodeKind node, double user_rate) {
  const SegmentParams& p = params_for(in.segments, segment_of(node));
  const EquipmentSpec& nic = interface_equipment(in.catalog, node);
  const double weight = p.alpha * p.sigma;

  const Branch branch = branch_for(node, placement);
  if (branch == Branch::AfterBbp) {
    // Multiplexed baseband traffic: no coverage weighting, no quantization.
    return weight * user_rate * energy_per_capacity(nic);
  }

  const double rho = coverage_factor(in.topology, p);
  const double load = node_ecpri_load(in.topology, in.traffic, node, in.provision_to_cap).load_gbps;
  double instance_w = provisioned_power(load, nic, in.policy[EquipmentClass::Interfaces]);
  if (branch == Branch::OnNode) {
    instance_w += bbp_server_power(load, server_for(in.catalog, node), in.policy[EquipmentClass::Servers]);
  }
  return weight * rho * instance_w;
}

double link_load(const ModelInputs& in, Segment link) {
  NodeKind source = NodeKind::ORU;
  if (link == Segment::Midhaul) source = NodeKind::ODU;
  if (link == Segment::Backhaul) source = NodeKind::OCU;
  return node_ecpri_load(in.topology, in.traffic, source, in.provision_to_cap).load_gbps;
}

SegmentTerm segment_term(const ModelInputs& in, BbpPlacement placement, Segment link, double user_rate) {
  const SegmentParams& p = params_for(in.segments, link);
  const EquipmentSpec& sw = switch_equipment(in.catalog, link);
  const EquipmentSpec& wdm = in.catalog.wdm_link;
  const EquipmentSpec& router = in.catalog.router;
  const double weight = p.alpha * p.sigma;
  const double switches = p.hops_switch + 1;
  const double wdm_spans = p.hops_wdm + 1;
  const double routers = p.gamma * (p.hops_router + 1);

  SegmentTerm term{link, segment_precedes_bbp(link, placement), 0.0};
  if (!term.carries_ecpri) {
    const double bracket = switches * energy_per_capacity(sw) + wdm_spans * energy_per_capacity(wdm) +
                           routers * energy_per_capacity(router);
    term.watts = weight * user_rate * bracket;
    return term;
  }

  const double load = link_load(in, link);
  const double devices_w = switches * provisioned_power(load, sw, in.policy[EquipmentClass::Switches]) +
                           wdm_spans * provisioned_power(load, wdm, in.policy[EquipmentClass::Links]) +
                           routers * provisioned_power(load, router, in.policy[EquipmentClass::Routers]);
  term.watts = weight * coverage_factor(in.topology, p) * devices_w;
  return term;
}

}  // namespace

double processing_power_per_user(const ModelInputs& inputs, BbpPlacement placement, NodeKind node) {
  if (index_of(node) < 0 || index_of(node) > index_of(NodeKind::DC)) {
    throw DomainError("unknown node kind");
  }
  inputs.validate();
  return node_term(inputs, placement, node, inputs.traffic.user_rate_gbps());
}

TransmissionPower transmission_power_per_user(const ModelInputs& inputs, BbpPlacement placement) {
  inputs.validate();
  const double user_rate = inputs.traffic.user_rate_gbps();
  TransmissionPower out;
  out.ue_w = user_rate * 1e9 * inputs.catalog.ue_energy_j_per_bit;
  out.total_w = out.ue_w;
  for (std::size_t i = 0; i < kLinkSegments.size(); ++i) {
    out.segments[i] = segment_term(inputs, placement, kLinkSegments[i], user_rate);
    out.total_w += out.segments[i].watts;
  }
  return out;
}

double PowerBreakdown::segment_watts(Segment link) const {
  for (const SegmentTerm& s : segments) {
    if (s.segment == link) return s.watts;
  }
  throw DomainError("not a link segment: " + std::string(to_string(link)));
}

PowerBreakdown total_power_per_user(const ModelInputs& inputs, BbpPlacement placement) {
  inputs.validate();
  const double user_rate = inputs.traffic.user_rate_gbps();

  PowerBreakdown out;
  for (std::size_t i = 0; i < kNodeKinds.size(); ++i) {
    const NodeKind node = kNodeKinds[i];
    out.nodes[i] = {node, branch_for(node, placement), node_term(inputs, placement, node, user_rate)};
    out.processing_w += out.nodes[i].watts;
  }
  const TransmissionPower tx = transmission_power_per_user(inputs, placement);
  out.segments = tx.segments;
  out.ue_w = tx.ue_w;
  out.transmission_w = tx.total_w;
  out.total_w = out.processing_w + out.transmission_w;
  return out;
}

}  // namespace oranpower
