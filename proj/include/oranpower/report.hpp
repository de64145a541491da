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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "oranpower/experiments.hpp"
#include "oranpower/powermodel.hpp"

namespace oranpower {

// `# key = value` lines written ahead of the CSV header.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Six significant digits, locale independent.
std::string format_number(double v);

std::string_view to_string(Branch b);

void write_breakdown_table(std::ostream& os, const PowerBreakdown& breakdown);
void write_breakdown_csv(std::ostream& os, const PowerBreakdown& breakdown, const Metadata& meta);

/// Columns: n_ru, placement, totals, then per-node and per-segment watts.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records, const Metadata& meta);

/// Columns: case, placement, p_processing_w, p_transmission_w, p_total_w.
void write_fanout_csv(std::ostream& os, const std::vector<FanoutStudyRecord>& records, const Metadata& meta);

}  // namespace oranpower
