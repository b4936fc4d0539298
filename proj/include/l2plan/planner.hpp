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

#ifndef L2PLAN_PLANNER_HPP
#define L2PLAN_PLANNER_HPP

#include "l2plan/types.hpp"

namespace l2plan {

// Validates the query and dispatches on the goal-velocity mode.
Plan plan_query(const Query& query, const SolverConfig& cfg = {});

// Throws std::invalid_argument when the query violates its invariants
// (non-finite values, non-positive limits, start or goal speed above v_max).
void check_query(const Query& query);

}  // namespace l2plan

#endif  // L2PLAN_PLANNER_HPP
