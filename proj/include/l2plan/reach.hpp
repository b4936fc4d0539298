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

#ifndef L2PLAN_REACH_HPP
#define L2PLAN_REACH_HPP

#include "l2plan/roots.hpp"
#include "l2plan/types.hpp"

namespace l2plan {

// Time for the speed to reach v_max under constant thrust at angle theta,
// starting from velocity v0 (requires |v0| <= v_max).
double time_to_speed_limit(const Vec2& v0, double theta, const Limits& limits);

// Candidate first phase of a thrust-then-cruise solution: thrust at theta1
// for t1 brings the speed to v_max with the velocity aimed at the goal.
struct CoastCandidate {
  double theta1 = 0.0;
  double t1 = 0.0;
  bool direction_ok = false;
};

// Degree-6 polynomial in s = sin(theta1) whose real roots give the coast
// candidates. Local frame: goal at the origin, v0 = (v0x, 0).
Polynomial coast_sextic(const Vec2& p0, double v0x, const Limits& limits);

// Solves the coast problem in the local frame (goal at origin, v0 = (v0x, 0),
// |v0x| < v_max). Returns the candidate minimizing t1 plus cruise time.
// Throws NoValidRoot when every root fails the aim-at-goal check.
CoastCandidate reach_position_coast(const Vec2& p0, double v0x, const Limits& limits,
                                    const SolverConfig& cfg);

// Minimum-time plan to the goal position with unconstrained final velocity.
// One thrust phase when the speed stays under v_max, thrust plus cruise
// otherwise.
Plan reach_position(const Query& query, const SolverConfig& cfg);

}  // namespace l2plan

#endif  // L2PLAN_REACH_HPP
