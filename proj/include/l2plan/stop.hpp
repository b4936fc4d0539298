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

#ifndef L2PLAN_STOP_HPP
#define L2PLAN_STOP_HPP

#include "l2plan/roots.hpp"
#include "l2plan/types.hpp"

namespace l2plan {

// Two-thrust stop: thrust at theta1 for t1, then full deceleration opposing
// the velocity for t2 = |v(t1)|/a_max. All values in the scaled local frame
// (goal at origin, v0 = (v0x, 0), lengths and speeds divided by a_max).
struct StopBangBangSolution {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double peak_speed = 0.0;  // |v(t1)| in scaled units; multiply by a_max
};

// Thrust to v_max aimed at the goal, cruise, then brake over the last
// braking_radius meters. World-frame angles.
struct StopCruiseSolution {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double t1 = 0.0;
  double t_c = 0.0;
  double t2 = 0.0;
  double braking_radius = 0.0;   // v_max^2 / (2 a_max)
  double cruise_distance = 0.0;  // from p(t1) to the goal
};

// Degree-6 polynomial in t1 for the bang-bang stop problem, scaled frame.
Polynomial stop_sextic(const Vec2& p0_tilde, double v0x_tilde);

// Bang-bang stop in the scaled local frame. Throws NoValidRoot when no
// sextic root survives the position residual test.
StopBangBangSolution stop_bang_bang(const Vec2& p0_tilde, double v0x_tilde,
                                    const SolverConfig& cfg);

// Three-phase stop used when the bang-bang peak exceeds v_max. Throws
// NegativeCruise when the goal sits inside the braking radius.
StopCruiseSolution stop_with_cruise(const Query& query, const SolverConfig& cfg);

// Minimum-time plan that stops at the goal position.
Plan stop_at_goal(const Query& query, const SolverConfig& cfg);

}  // namespace l2plan

#endif  // L2PLAN_STOP_HPP
