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

#include <cstdint>
#include <vector>

#include "oranpower/powermodel.hpp"
#include "oranpower/topology.hpp"

namespace oranpower {

inline constexpr std::int64_t kSweepDuFanoutCap = 4;
inline constexpr std::int64_t kDefaultUsersPerRu = 10;
// Smallest O-RU count divisible by every built-in fanout chain (10 and 2*2*2).
inline constexpr std::int64_t kDefaultFanoutStudyRu = 40;

struct SweepRecord {
  std::int64_t n_ru = 0;
  BbpPlacement placement = BbpPlacement::ORU;
  PowerBreakdown breakdown;
};

struct FanoutStudyRecord {
  FanoutCase fanout;
  BbpPlacement placement = BbpPlacement::ORU;
  Topology topology;
  PowerBreakdown breakdown;
};

/// Evaluates every (n_ru, placement) for n_ru in [first_ru, last_ru] on sweep
/// topologies. `base` supplies catalog, segments, traffic and policy; its
/// topology is ignored. Records are ordered by n_ru, then placement in the
/// order given.
std::vector<SweepRecord> sweep_orus(std::int64_t first_ru, std::int64_t last_ru,
                                    std::int64_t users_per_ru,
                                    const std::vector<BbpPlacement>& placements,
                                    const ModelInputs& base,
                                    std::int64_t du_fanout_cap = kSweepDuFanoutCap);

/// One record per (case, placement). Throws DivisibilityError naming the case
/// when `n_ru` does not split evenly.
std::vector<FanoutStudyRecord> fanout_study(const std::vector<FanoutCase>& cases, std::int64_t n_ru,
                                            std::int64_t users_per_ru,
                                            const std::vector<BbpPlacement>& placements,
                                            const ModelInputs& base);

/// 1 - b.total / a.total. Throws DomainError when a.total is zero.
double reduction_ratio(const PowerBreakdown& a, const PowerBreakdown& b);

/// Network-wide watts obtained by walking every radio, node instance, link
/// instance, hop device and UE explicitly. Independent of the per-user
/// closed form; dividing by n_users must reproduce total_power_per_user().
///
/// O-RUs are spread over O-DUs (and O-DUs over O-CUs, O-CUs over DCs) in
/// balanced contiguous blocks. Coverage is taken from the node that owns each
/// segment, as in the default segment table.
double brute_force_oracle(const ModelInputs& inputs, BbpPlacement placement);

}  // namespace oranpower
