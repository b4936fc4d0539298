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

#include "l2plan/planner.hpp"

#include <cmath>

#include "l2plan/reach.hpp"
#include "l2plan/rendezvous.hpp"
#include "l2plan/stop.hpp"

namespace l2plan {

void check_query(const Query& query) {
  auto finite = [](const Vec2& v) { return v.allFinite(); };
  if (!finite(query.start.position) || !finite(query.start.velocity) ||
      !finite(query.goal_position) || !finite(query.goal_velocity.value)) {
    throw std::invalid_argument("query contains non-finite values");
  }
  if (!(query.limits.a_max > 0.0) || !(query.limits.v_max > 0.0)) {
    throw std::invalid_argument("limits must be positive");
  }
  const double vm = query.limits.v_max;
  if (query.start.velocity.norm() > vm * (1.0 + 1e-9)) {
    throw std::invalid_argument("start speed exceeds v_max");
  }
  if (query.goal_velocity.mode == GoalVelocity::Mode::Fixed &&
      query.goal_velocity.value.norm() > vm * (1.0 + 1e-9)) {
    throw std::invalid_argument("goal speed exceeds v_max");
  }
}

Plan plan_query(const Query& query, const SolverConfig& cfg) {
  check_query(query);
  switch (query.goal_velocity.mode) {
    case GoalVelocity::Mode::Free:
      return reach_position(query, cfg);
    case GoalVelocity::Mode::Zero:
      return stop_at_goal(query, cfg);
    case GoalVelocity::Mode::Fixed:
      return rendezvous(query, cfg);
  }
  throw std::logic_error("unreachable");
}

}  // namespace l2plan
