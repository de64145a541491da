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

#include "oranpower/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "oranpower/config.hpp"
#include "oranpower/errors.hpp"
#include "oranpower/experiments.hpp"
#include "oranpower/report.hpp"

namespace oranpower::cli {

namespace {

struct GlobalFlags {
  std::string config_path;
  std::string policy = "quantized";
  std::string output = "-";
};

struct EvalFlags {
  std::optional<std::int64_t> n_ru;
  std::optional<std::int64_t> users_per_ru;
  std::optional<std::int64_t> du_cap;
  std::string bbp;
  std::string format = "table";
  bool attached_load = false;
};

struct SweepFlags {
  std::int64_t max_ru = 100;
  std::optional<std::int64_t> users_per_ru;
  std::optional<std::int64_t> du_cap;
  std::vector<std::string> placements{"oru", "odu", "ocu", "dc"};
  bool attached_load = false;
};

struct FanoutFlags {
  std::optional<std::int64_t> n_ru;
  std::optional<std::int64_t> users_per_ru;
  std::vector<std::string> cases{"C-1", "C-2", "C-3", "C-4", "C-5"};
  std::vector<std::string> placements{"oru", "odu", "ocu", "dc"};
};

const std::vector<std::string> kPlacementNames{"oru", "odu", "ocu", "dc"};

// Deduplicated, in hierarchy order so output rows sort by placement.
std::vector<BbpPlacement> to_placements(const std::vector<std::string>& names) {
  std::vector<BbpPlacement> out;
  for (NodeKind n : kNodeKinds) {
    if (std::find(names.begin(), names.end(), to_string(n)) != names.end()) out.push_back(n);
  }
  return out;
}

ModelConfig load_config(const GlobalFlags& g, std::ostream& err) {
  ModelConfig cfg = g.config_path.empty() ? ModelConfig{} : load_model_config_file(g.config_path, &err);
  if (g.policy == "linear") cfg.policy = ProvisioningPolicy::all_linear();
  return cfg;
}

ModelInputs base_inputs(const ModelConfig& cfg) {
  ModelInputs in;
  in.catalog = cfg.catalog;
  in.segments = cfg.segments;
  in.traffic = cfg.traffic;
  in.policy = cfg.policy;
  in.provision_to_cap = cfg.provision_to_cap;
  return in;
}

Metadata common_metadata(const GlobalFlags& g, const ModelConfig& cfg, std::int64_t users_per_ru) {
  return {{"users_per_ru", std::to_string(users_per_ru)},
          {"policy", g.policy},
          {"provision_to_cap", cfg.provision_to_cap ? "1" : "0"},
          {"monthly_gb_per_user", format_number(cfg.traffic.monthly_gb_per_user)},
          {"ecpri_per_ru_gbps", format_number(cfg.traffic.ecpri_per_ru_gbps)}};
}

// Writes to --output, or `out` when it is "-" / "stdout".
template <typename Fn>
void emit(const GlobalFlags& g, std::ostream& out, Fn&& write) {
  if (g.output == "-" || g.output == "stdout") {
    write(out);
    return;
  }
  std::ofstream file(g.output, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output file '" + g.output + "'", 0);
  write(file);
  if (!file) throw ConfigError("failed writing '" + g.output + "'", 0);
}

void run_eval(const GlobalFlags& g, const EvalFlags& f, std::ostream& out, std::ostream& err) {
  const ModelConfig cfg = load_config(g, err);
  ModelInputs in = base_inputs(cfg);
  if (f.attached_load) in.provision_to_cap = false;
  const auto n_ru = f.n_ru.value_or(cfg.n_ru.value_or(100));
  const auto users = f.users_per_ru.value_or(cfg.users_per_ru.value_or(kDefaultUsersPerRu));
  const auto cap = f.du_cap.value_or(cfg.du_fanout_cap);
  in.topology = build_sweep_topology(n_ru, users, cap);
  const BbpPlacement placement = *parse_node_kind(f.bbp);
  const PowerBreakdown b = total_power_per_user(in, placement);

  emit(g, out, [&](std::ostream& os) {
    if (f.format == "csv") {
      Metadata meta = common_metadata(g, cfg, users);
      meta.insert(meta.begin(), {{"n_ru", std::to_string(n_ru)},
                                 {"n_du", std::to_string(in.topology.n_du)},
                                 {"n_cu", "1"},
                                 {"n_dc", "1"},
                                 {"bbp", f.bbp}});
      write_breakdown_csv(os, b, meta);
    } else {
      os << "n_ru=" << n_ru << " n_du=" << in.topology.n_du << " n_cu=1 n_dc=1 users_per_ru=" << users
         << " bbp=" << f.bbp << " policy=" << g.policy << '\n';
      write_breakdown_table(os, b);
    }
  });
}

void run_sweep(const GlobalFlags& g, const SweepFlags& f, std::ostream& out, std::ostream& err) {
  const ModelConfig cfg = load_config(g, err);
  ModelInputs in = base_inputs(cfg);
  if (f.attached_load) in.provision_to_cap = false;
  const auto users = f.users_per_ru.value_or(cfg.users_per_ru.value_or(kDefaultUsersPerRu));
  const auto cap = f.du_cap.value_or(cfg.du_fanout_cap);
  const auto records = sweep_orus(1, f.max_ru, users, to_placements(f.placements), in, cap);

  Metadata meta = common_metadata(g, cfg, users);
  meta.emplace_back("du_fanout_cap", std::to_string(cap));
  meta.emplace_back("n_cu", "1 (sweep convention)");
  meta.emplace_back("n_dc", "1 (sweep convention)");
  emit(g, out, [&](std::ostream& os) { write_sweep_csv(os, records, meta); });
}

void run_fanout(const GlobalFlags& g, const FanoutFlags& f, std::ostream& out, std::ostream& err) {
  const ModelConfig cfg = load_config(g, err);
  const ModelInputs in = base_inputs(cfg);
  const auto n_ru = f.n_ru.value_or(cfg.n_ru.value_or(kDefaultFanoutStudyRu));
  const auto users = f.users_per_ru.value_or(cfg.users_per_ru.value_or(kDefaultUsersPerRu));

  std::vector<FanoutCase> cases;
  for (const auto& label : f.cases) cases.push_back(*find_fanout_case(label));
  const auto records = fanout_study(cases, n_ru, users, to_placements(f.placements), in);

  Metadata meta = common_metadata(g, cfg, users);
  meta.insert(meta.begin(), {"n_ru", std::to_string(n_ru)});
  emit(g, out, [&](std::ostream& os) { write_fanout_csv(os, records, meta); });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Per-user power of centralized O-RAN deployments", "oranpower"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config_path, "Config file with section.key = value overrides");
  app.add_option("--policy", g.policy, "Provisioning: linear, or quantized (config-driven, servers quantized)")
      ->check(CLI::IsMember({"linear", "quantized"}));
  app.add_option("--output", g.output, "Output path, or - for stdout");

  const CLI::Range positive{std::int64_t{1}, std::int64_t{1'000'000}};

  EvalFlags ef;
  auto* eval = app.add_subcommand("eval", "Evaluate one placement on a sweep topology");
  eval->add_option("--n-ru", ef.n_ru, "Number of O-RUs")->check(positive);
  eval->add_option("--users-per-ru", ef.users_per_ru, "Users per O-RU")->check(positive);
  eval->add_option("--du-cap", ef.du_cap, "O-RUs per O-DU")->check(positive);
  eval->add_option("--bbp", ef.bbp, "Baseband processing node")->required()->check(CLI::IsMember(kPlacementNames));
  eval->add_option("--format", ef.format, "csv or table")->check(CLI::IsMember({"csv", "table"}));
  eval->add_flag("--attached-load", ef.attached_load, "Size O-DUs for attached O-RUs instead of the cap");

  SweepFlags sf;
  auto* sweep = app.add_subcommand("sweep", "Sweep the number of O-RUs from 1 to --max-ru");
  sweep->add_option("--max-ru", sf.max_ru, "Largest O-RU count")->check(positive);
  sweep->add_option("--users-per-ru", sf.users_per_ru, "Users per O-RU")->check(positive);
  sweep->add_option("--du-cap", sf.du_cap, "O-RUs per O-DU")->check(positive);
  sweep->add_option("--placements", sf.placements, "Comma-separated BBP nodes")
      ->delimiter(',')
      ->check(CLI::IsMember(kPlacementNames));
  sweep->add_flag("--attached-load", sf.attached_load, "Size O-DUs for attached O-RUs instead of the cap");

  FanoutFlags ff;
  auto* fanout = app.add_subcommand("fanout", "Evaluate the built-in nodal fanout cases");
  fanout->add_option("--n-ru", ff.n_ru, "Number of O-RUs")->check(positive);
  fanout->add_option("--users-per-ru", ff.users_per_ru, "Users per O-RU")->check(positive);
  fanout->add_option("--cases", ff.cases, "Comma-separated case labels")
      ->delimiter(',')
      ->check(CLI::IsMember({"C-1", "C-2", "C-3", "C-4", "C-5"}));
  fanout->add_option("--placements", ff.placements, "Comma-separated BBP nodes")
      ->delimiter(',')
      ->check(CLI::IsMember(kPlacementNames));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*eval) run_eval(g, ef, out, err);
    if (*sweep) run_sweep(g, sf, out, err);
    if (*fanout) run_fanout(g, ff, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace oranpower::cli
