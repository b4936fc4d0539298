// Copyright 2026 The l2plan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef L2PLAN_IO_HPP
#define L2PLAN_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "l2plan/simulate.hpp"
#include "l2plan/types.hpp"

namespace l2plan {

// Query schema: {"p0":[x,y],"v0":[x,y],"pG":[x,y],"vG":[x,y]|"zero"|"free",
// "a_m":..,"v_m":..} plus an optional "id". Unknown fields are rejected.
struct QueryRecord {
  Query query;
  std::string id;
};

QueryRecord query_from_json(const nlohmann::json& j);
nlohmann::json query_to_json(const Query& query, const std::string& id = "");

// A file holds one query object or an array of them.
std::vector<QueryRecord> parse_query_file(const std::string& text);

nlohmann::json plan_to_json(const QueryRecord& rec, const Plan& plan,
                            const ValidationReport& report);

// Stored plan record, for re-simulation (`plan --verify`).
struct PlanRecord {
  QueryRecord query;
  Plan plan;
  State terminal;
};
PlanRecord plan_record_from_json(const nlohmann::json& j);

struct TrajectorySample {
  double t = 0.0;
  Vec2 position{0, 0};
  Vec2 velocity{0, 0};
  Vec2 accel{0, 0};
};

// Samples at fixed dt with the exact switch times inserted. A sample at a
// switch time reports the acceleration of the phase it enters.
std::vector<TrajectorySample> sample_trajectory(const Query& query, const Plan& plan,
                                                double dt);

// RFC 4180 CSV (CRLF rows): t,px,py,vx,vy,ux,uy,speed,accel.
std::string trajectory_csv(const std::vector<TrajectorySample>& samples);

std::string format_double(double v);

}  // namespace l2plan

#endif  // L2PLAN_IO_HPP
