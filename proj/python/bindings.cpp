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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oranpower/catalog.hpp"
#include "oranpower/config.hpp"
#include "oranpower/errors.hpp"
#include "oranpower/experiments.hpp"
#include "oranpower/powermodel.hpp"
#include "oranpower/topology.hpp"

namespace py = pybind11;
using namespace oranpower;

namespace {

py::dict breakdown_nodes(const PowerBreakdown& b) {
  py::dict d;
  for (const NodeTerm& n : b.nodes) d[py::str(std::string(to_string(n.node)))] = n.watts;
  return d;
}

py::dict breakdown_segments(const PowerBreakdown& b) {
  py::dict d;
  for (const SegmentTerm& s : b.segments) d[py::str(std::string(to_string(s.segment)))] = s.watts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Transaction-based per-user power model for centralized O-RAN deployments";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DivisibilityError>(m, "DivisibilityError", PyExc_ValueError);

  py::enum_<NodeKind>(m, "Node")
      .value("ORU", NodeKind::ORU)
      .value("ODU", NodeKind::ODU)
      .value("OCU", NodeKind::OCU)
      .value("DC", NodeKind::DC);

  py::class_<EquipmentSpec>(m, "EquipmentSpec")
      .def(py::init<std::string, double, double>(), py::arg("name"), py::arg("rated_power_w"),
           py::arg("capacity_gbps"))
      .def_readwrite("name", &EquipmentSpec::name)
      .def_readwrite("rated_power_w", &EquipmentSpec::rated_power_w)
      .def_readwrite("capacity_gbps", &EquipmentSpec::capacity_gbps)
      .def("__eq__", &EquipmentSpec::operator==);

  py::class_<ServerSpec>(m, "ServerSpec")
      .def_readwrite("cores", &ServerSpec::cores)
      .def_readwrite("per_core_power_w", &ServerSpec::per_core_power_w)
      .def_readwrite("per_core_capacity_gbps", &ServerSpec::per_core_capacity_gbps)
      .def_readwrite("server_capacity_gbps", &ServerSpec::server_capacity_gbps)
      .def("energy_per_capacity", &ServerSpec::energy_per_capacity);

  py::class_<EquipmentCatalog>(m, "EquipmentCatalog")
      .def_readwrite("radio", &EquipmentCatalog::radio)
      .def_readwrite("access_switch", &EquipmentCatalog::access_switch)
      .def_readwrite("core_switch", &EquipmentCatalog::core_switch)
      .def_readwrite("wdm_link", &EquipmentCatalog::wdm_link)
      .def_readwrite("router", &EquipmentCatalog::router)
      .def_readwrite("edge_server", &EquipmentCatalog::edge_server)
      .def_readwrite("dc_server", &EquipmentCatalog::dc_server)
      .def_readwrite("ue_energy_j_per_bit", &EquipmentCatalog::ue_energy_j_per_bit)
      .def("validate", &EquipmentCatalog::validate)
      .def("__eq__", &EquipmentCatalog::operator==);

  m.def("default_catalog", &default_catalog);
  m.def("energy_per_capacity", &energy_per_capacity);
  m.def("load_catalog", [](const std::string& text) { return load_catalog(text); });
  m.def("to_config_text", &to_config_text);

  py::class_<Topology>(m, "Topology")
      .def_readonly("n_ru", &Topology::n_ru)
      .def_readonly("n_du", &Topology::n_du)
      .def_readonly("n_cu", &Topology::n_cu)
      .def_readonly("n_dc", &Topology::n_dc)
      .def_readonly("users_per_ru", &Topology::users_per_ru)
      .def_readonly("n_users", &Topology::n_users)
      .def_readonly("du_fanout_cap", &Topology::du_fanout_cap)
      .def("__repr__", [](const Topology& t) {
        return "Topology(n_ru=" + std::to_string(t.n_ru) + ", n_du=" + std::to_string(t.n_du) +
               ", n_cu=" + std::to_string(t.n_cu) + ", n_dc=" + std::to_string(t.n_dc) +
               ", n_users=" + std::to_string(t.n_users) + ")";
      });

  m.def("make_topology", &make_topology, py::arg("n_ru"), py::arg("n_du"), py::arg("n_cu"), py::arg("n_dc"),
        py::arg("users_per_ru"), py::arg("du_fanout_cap"));
  m.def("validate_topology", py::overload_cast<const Topology&>(&validate));
  m.def("build_sweep_topology", &build_sweep_topology, py::arg("n_ru"), py::arg("users_per_ru") = 10,
        py::arg("du_fanout_cap") = kSweepDuFanoutCap);

  py::class_<FanoutCase>(m, "FanoutCase")
      .def(py::init<std::string, std::int64_t, std::int64_t, std::int64_t>(), py::arg("label"),
           py::arg("du_fanout"), py::arg("cu_fanout"), py::arg("dc_fanout"))
      .def_readonly("label", &FanoutCase::label)
      .def_readonly("du_fanout", &FanoutCase::du_fanout)
      .def_readonly("cu_fanout", &FanoutCase::cu_fanout)
      .def_readonly("dc_fanout", &FanoutCase::dc_fanout);
  m.def("builtin_fanout_cases", &builtin_fanout_cases);
  m.def("from_fanout_case", &from_fanout_case, py::arg("case"), py::arg("n_ru"), py::arg("users_per_ru") = 10);

  py::class_<TrafficModel>(m, "TrafficModel")
      .def(py::init<>())
      .def_readwrite("monthly_gb_per_user", &TrafficModel::monthly_gb_per_user)
      .def_readwrite("ecpri_per_ru_gbps", &TrafficModel::ecpri_per_ru_gbps)
      .def_property_readonly("user_rate_gbps", &TrafficModel::user_rate_gbps);
  m.def("user_baseband_rate", &user_baseband_rate);
  m.def("provision_units", &provision_units);

  py::class_<ProvisioningPolicy>(m, "ProvisioningPolicy")
      .def_static("all_linear", &ProvisioningPolicy::all_linear)
      .def_static("defaults", &ProvisioningPolicy::defaults)
      .def(
          "quantize",
          [](ProvisioningPolicy& p, const std::string& cls, std::optional<double> unit, std::int64_t min_units) {
            for (std::size_t i = 0; i < p.classes.size(); ++i) {
              if (to_string(static_cast<EquipmentClass>(i)) == cls) {
                p.classes[i] = Provisioning::quantized(unit, min_units);
                return;
              }
            }
            throw py::value_error("unknown equipment class: " + cls);
          },
          py::arg("equipment_class"), py::arg("unit_capacity_gbps") = py::none(), py::arg("minimum_units") = 0);

  py::class_<ModelInputs>(m, "ModelInputs")
      .def(py::init<>())
      .def(py::init([](const Topology& t, const std::string& policy) {
             ModelInputs in;
             in.topology = t;
             if (policy == "linear") {
               in.policy = ProvisioningPolicy::all_linear();
             } else if (policy != "quantized") {
               throw py::value_error("policy must be 'linear' or 'quantized'");
             }
             return in;
           }),
           py::arg("topology"), py::arg("policy") = "quantized")
      .def_readwrite("topology", &ModelInputs::topology)
      .def_readwrite("traffic", &ModelInputs::traffic)
      .def_readwrite("catalog", &ModelInputs::catalog)
      .def_readwrite("policy", &ModelInputs::policy)
      .def_readwrite("provision_to_cap", &ModelInputs::provision_to_cap);

  py::class_<PowerBreakdown>(m, "PowerBreakdown")
      .def_readonly("processing_w", &PowerBreakdown::processing_w)
      .def_readonly("transmission_w", &PowerBreakdown::transmission_w)
      .def_readonly("total_w", &PowerBreakdown::total_w)
      .def_readonly("ue_w", &PowerBreakdown::ue_w)
      .def_property_readonly("nodes", &breakdown_nodes)
      .def_property_readonly("segments", &breakdown_segments);

  m.def("total_power_per_user", &total_power_per_user, py::arg("inputs"), py::arg("placement"));
  m.def("processing_power_per_user", &processing_power_per_user, py::arg("inputs"), py::arg("placement"),
        py::arg("node"));
  m.def("brute_force_oracle", &brute_force_oracle, py::arg("inputs"), py::arg("placement"));
  m.def("reduction_ratio", &reduction_ratio);

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("n_ru", &SweepRecord::n_ru)
      .def_readonly("placement", &SweepRecord::placement)
      .def_readonly("breakdown", &SweepRecord::breakdown);
  py::class_<FanoutStudyRecord>(m, "FanoutStudyRecord")
      .def_property_readonly("case", [](const FanoutStudyRecord& r) { return r.fanout.label; })
      .def_readonly("placement", &FanoutStudyRecord::placement)
      .def_readonly("topology", &FanoutStudyRecord::topology)
      .def_readonly("breakdown", &FanoutStudyRecord::breakdown);

  const std::vector<BbpPlacement> all(kNodeKinds.begin(), kNodeKinds.end());
  m.def(
      "sweep_orus",
      [](std::int64_t max_ru, std::int64_t users_per_ru, const std::vector<BbpPlacement>& placements,
         const ModelInputs& base) { return sweep_orus(1, max_ru, users_per_ru, placements, base); },
      py::arg("max_ru") = 100, py::arg("users_per_ru") = 10, py::arg("placements") = all,
      py::arg("base") = ModelInputs{});
  m.def("fanout_study", &fanout_study, py::arg("cases") = builtin_fanout_cases(),
        py::arg("n_ru") = kDefaultFanoutStudyRu, py::arg("users_per_ru") = 10, py::arg("placements") = all,
        py::arg("base") = ModelInputs{});
}
