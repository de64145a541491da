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

#include <algorithm>

#include "oranpower/errors.hpp"
#include "oranpower/topology.hpp"

using namespace oranpower;

TEST_CASE("default segment parameters") {
  const SegmentTable t = default_segment_params();
  struct Row {
    Segment s;
    double sigma, alpha;
    NodeKind coverage;
  };
  const Row rows[] = {
      {Segment::ORU, 1.0, 5.0, NodeKind::ORU},       {Segment::ODU, 2.0, 5.0, NodeKind::ODU},
      {Segment::OCU, 2.0, 5.0, NodeKind::OCU},       {Segment::DC, 1.5, 1.3, NodeKind::DC},
      {Segment::Fronthaul, 2.0, 5.0, NodeKind::ORU}, {Segment::Midhaul, 2.0, 5.0, NodeKind::ODU},
      {Segment::Backhaul, 1.5, 2.0, NodeKind::OCU},
  };
  for (const Row& r : rows) {
    const SegmentParams& p = params_for(t, r.s);
    CAPTURE(to_string(r.s));
    CHECK(p.segment == r.s);
    CHECK(p.sigma == r.sigma);
    CHECK(p.alpha == r.alpha);
    CHECK(p.coverage_node == r.coverage);
    CHECK(p.hops_switch == 0);
    CHECK(p.hops_wdm == 0);
    CHECK(p.hops_router == 0);
    CHECK(p.gamma == (r.s == Segment::Backhaul ? 1 : 0));
  }
  CHECK(validate(t).empty());
}

TEST_CASE("coverage factor") {
  const Topology t = make_topology(10, 3, 1, 1, 10, 4);
  CHECK(coverage_factor(t, params_for(default_segment_params(), Segment::ORU)) == doctest::Approx(0.1));

  const Topology big = make_topology(100, 25, 1, 1, 10, 4);
  CHECK(coverage_factor(big, params_for(default_segment_params(), Segment::DC)) == doctest::Approx(0.001));

  const Topology one = make_topology(8, 2, 1, 1, 1, 4);
  CHECK(coverage_factor(one, params_for(default_segment_params(), Segment::ORU)) == 1.0);
}

TEST_CASE("coverage is in (0, 1] and non-increasing up the hierarchy") {
  const SegmentTable params = default_segment_params();
  for (std::int64_t n_ru = 1; n_ru <= 60; ++n_ru) {
    for (std::int64_t users : {1, 3, 10}) {
      for (std::int64_t cap : {1, 2, 4, 7}) {
        const Topology t = build_sweep_topology(n_ru, users, cap);
        REQUIRE(validate(t).empty());
        double prev = 2.0;
        for (NodeKind n : kNodeKinds) {
          const double rho = coverage_factor(t, params_for(params, segment_of(n)));
          CHECK(rho > 0.0);
          CHECK(rho <= 1.0);
          CHECK(rho <= prev);
          prev = rho;
        }
      }
    }
  }
}

TEST_CASE("sweep topology adds an O-DU past each multiple of the cap") {
  Topology t = build_sweep_topology(5, 10, 4);
  CHECK(t.n_du == 2);
  CHECK(t.n_cu == 1);
  CHECK(t.n_dc == 1);
  CHECK(t.n_users == 50);

  CHECK(build_sweep_topology(4, 10, 4).n_du == 1);

  t = build_sweep_topology(100, 10, 4);
  CHECK(t.n_du == 25);
  CHECK(t.n_users == 1000);

  CHECK_THROWS_AS(build_sweep_topology(0, 10, 4), DomainError);
}

TEST_CASE("sweep n_du steps by exactly one when crossing a multiple of the cap") {
  for (std::int64_t cap = 1; cap <= 9; ++cap) {
    std::int64_t prev = build_sweep_topology(1, 10, cap).n_du;
    for (std::int64_t n_ru = 2; n_ru <= 120; ++n_ru) {
      const std::int64_t n_du = build_sweep_topology(n_ru, 10, cap).n_du;
      if ((n_ru - 1) % cap == 0) {
        CHECK(n_du == prev + 1);
      } else {
        CHECK(n_du == prev);
      }
      prev = n_du;
    }
  }
}

TEST_CASE("built-in fanout cases") {
  const auto& cases = builtin_fanout_cases();
  REQUIRE(cases.size() == 5);
  CHECK(cases[0] == FanoutCase{"C-1", 1, 1, 1});
  CHECK(cases[1] == FanoutCase{"C-2", 1, 10, 1});
  CHECK(cases[2] == FanoutCase{"C-3", 1, 1, 10});
  CHECK(cases[3] == FanoutCase{"C-4", 10, 1, 1});
  CHECK(cases[4] == FanoutCase{"C-5", 2, 2, 2});
  CHECK(find_fanout_case("C-4")->du_fanout == 10);
  CHECK_FALSE(find_fanout_case("C-9").has_value());
}

TEST_CASE("from_fanout_case derives node counts") {
  Topology t = from_fanout_case(*find_fanout_case("C-2"), 20, 10);
  CHECK(t.n_du == 20);
  CHECK(t.n_cu == 2);
  CHECK(t.n_dc == 2);

  t = from_fanout_case(*find_fanout_case("C-5"), 8, 10);
  CHECK(t.n_du == 4);
  CHECK(t.n_cu == 2);
  CHECK(t.n_dc == 1);
  CHECK(t.du_fanout_cap == 2);

  try {
    from_fanout_case(*find_fanout_case("C-4"), 7, 10);
    FAIL("expected DivisibilityError");
  } catch (const DivisibilityError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("C-4") != std::string::npos);
    CHECK(msg.find("O-DU") != std::string::npos);
  }
  try {
    from_fanout_case(*find_fanout_case("C-5"), 4, 10);
    FAIL("expected DivisibilityError");
  } catch (const DivisibilityError& e) {
    CHECK(std::string(e.what()).find("DC") != std::string::npos);
  }
}

TEST_CASE("fanouts recomputed from a case topology match the case") {
  for (const FanoutCase& c : builtin_fanout_cases()) {
    for (std::int64_t n_ru : {40, 80, 200}) {
      const Topology t = from_fanout_case(c, n_ru, 10);
      CHECK(validate(t).empty());
      CHECK(t.n_ru / t.n_du == c.du_fanout);
      CHECK(t.n_du / t.n_cu == c.cu_fanout);
      CHECK(t.n_cu / t.n_dc == c.dc_fanout);
      CHECK(t.n_ru % t.n_du == 0);
    }
  }
}

TEST_CASE("validate lists violations") {
  CHECK(validate(make_topology(4, 1, 1, 1, 10, 4)).empty());

  const auto inverted = validate(make_topology(2, 4, 1, 1, 10, 4));
  CHECK(std::find(inverted.begin(), inverted.end(), "n_ru >= n_du") != inverted.end());

  Topology t = make_topology(10, 3, 1, 1, 10, 4);
  t.n_users = 99;
  const auto mismatch = validate(t);
  REQUIRE(mismatch.size() == 1);
  CHECK(mismatch[0] == "n_users = n_ru x users_per_ru");
  CHECK_THROWS_AS(require_valid(t), ValidationError);
}

TEST_CASE("names round trip") {
  for (NodeKind n : kNodeKinds) CHECK(parse_node_kind(to_string(n)) == n);
  for (int i = 0; i < 7; ++i) CHECK(parse_segment(to_string(static_cast<Segment>(i))) == static_cast<Segment>(i));
  CHECK(downstream_endpoint(Segment::Fronthaul) == NodeKind::ODU);
  CHECK(downstream_endpoint(Segment::Backhaul) == NodeKind::DC);
  CHECK_THROWS_AS(downstream_endpoint(Segment::OCU), DomainError);
}
