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

#include "oranpower/report.hpp"

#include <cstdio>
#include <ostream>

namespace oranpower {

namespace {

void write_metadata(std::ostream& os, const Metadata& meta) {
  for (const auto& [key, value] : meta) os << "# " << key << " = " << value << '\n';
}

void write_detail_header(std::ostream& os) {
  for (NodeKind n : kNodeKinds) os << ",p_node_" << to_string(n) << "_w";
  for (Segment s : kLinkSegments) os << ",p_" << to_string(s) << "_w";
  os << ",p_ue_w";
}

void write_detail_row(std::ostream& os, const PowerBreakdown& b) {
  for (const NodeTerm& n : b.nodes) os << ',' << format_number(n.watts);
  for (const SegmentTerm& s : b.segments) os << ',' << format_number(s.watts);
  os << ',' << format_number(b.ue_w);
}

void write_totals(std::ostream& os, const PowerBreakdown& b) {
  os << ',' << format_number(b.processing_w) << ',' << format_number(b.transmission_w) << ','
     << format_number(b.total_w);
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::BeforeBbp:
      return "before-bbp";
    case Branch::OnNode:
      return "bbp";
    case Branch::AfterBbp:
      return "after-bbp";
  }
  return "?";
}

void write_breakdown_table(std::ostream& os, const PowerBreakdown& b) {
  char line[128];
  os << "per-user power\n";
  for (const NodeTerm& n : b.nodes) {
    std::snprintf(line, sizeof line, "  node %-10s %-11s %14s W\n", std::string(to_string(n.node)).c_str(),
                  std::string(to_string(n.branch)).c_str(), format_number(n.watts).c_str());
    os << line;
  }
  for (const SegmentTerm& s : b.segments) {
    std::snprintf(line, sizeof line, "  link %-10s %-11s %14s W\n", std::string(to_string(s.segment)).c_str(),
                  s.carries_ecpri ? "ecpri" : "baseband", format_number(s.watts).c_str());
    os << line;
  }
  std::snprintf(line, sizeof line, "  ue                          %14s W\n", format_number(b.ue_w).c_str());
  os << line;
  std::snprintf(line, sizeof line, "  processing                  %14s W\n", format_number(b.processing_w).c_str());
  os << line;
  std::snprintf(line, sizeof line, "  transmission                %14s W\n",
                format_number(b.transmission_w).c_str());
  os << line;
  std::snprintf(line, sizeof line, "  total                       %14s W\n", format_number(b.total_w).c_str());
  os << line;
}

void write_breakdown_csv(std::ostream& os, const PowerBreakdown& b, const Metadata& meta) {
  write_metadata(os, meta);
  os << "p_processing_w,p_transmission_w,p_total_w";
  write_detail_header(os);
  os << '\n';
  os << format_number(b.processing_w) << ',' << format_number(b.transmission_w) << ','
     << format_number(b.total_w);
  write_detail_row(os, b);
  os << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records, const Metadata& meta) {
  write_metadata(os, meta);
  os << "n_ru,placement,p_processing_w,p_transmission_w,p_total_w";
  write_detail_header(os);
  os << '\n';
  for (const SweepRecord& r : records) {
    os << r.n_ru << ',' << to_string(r.placement);
    write_totals(os, r.breakdown);
    write_detail_row(os, r.breakdown);
    os << '\n';
  }
}

void write_fanout_csv(std::ostream& os, const std::vector<FanoutStudyRecord>& records, const Metadata& meta) {
  write_metadata(os, meta);
  os << "case,placement,p_processing_w,p_transmission_w,p_total_w\n";
  for (const FanoutStudyRecord& r : records) {
    os << r.fanout.label << ',' << to_string(r.placement);
    write_totals(os, r.breakdown);
    os << '\n';
  }
}

}  // namespace oranpower
