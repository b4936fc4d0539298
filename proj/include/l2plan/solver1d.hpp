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

#ifndef L2PLAN_SOLVER1D_HPP
#define L2PLAN_SOLVER1D_HPP

#include <optional>

#include "l2plan/types.hpp"

namespace l2plan {

enum class ProfileShape { Triangular, Trapezoidal };

// 1D velocity profile: acceleration s_p*a_max for t1, zero for t_c, then
// s_f*a_max for t2. Time-optimal profiles always have s_f = -s_p; the
// fixed-duration profiles used for axis synchronization may ramp the same
// way twice. In the critical case (the goal displacement equals the
// single-ramp displacement) the whole motion is the t1 ramp and s_p is the
// ramp direction.
struct Profile1D {
  int s_p = 0;
  int s_f = 0;
  double t1 = 0.0;
  double t_c = 0.0;
  double t2 = 0.0;
  double v_peak = 0.0;    // largest |velocity| over the profile
  double v_cruise = 0.0;  // signed velocity held during t_c
  ProfileShape shape = ProfileShape::Triangular;

  double total_time() const { return t1 + t_c + t2; }
};

// Minimal-time profile from (p0, v0) to (pG, vG). Requires |v0|, |vG| <= v_max.
Profile1D solve_1d(double p0, double v0, double pG, double vG, const Limits& limits);

// Position and velocity after running a profile from (p0, v0).
std::pair<double, double> simulate_1d(double p0, double v0, const Profile1D& prof,
                                      double a_max);

// Minimal time to pass through pG with unconstrained final velocity:
// thrust toward the goal, capped at v_max, coasting the remainder.
double min_time_free_end_1d(double p0, double v0, double pG, const Limits& limits);

// A profile from (p0, v0) to (pG, vG) taking exactly time T, when one
// exists. Parameterized by the cruise velocity; used by the box-bound
// baseline to synchronize axes.
std::optional<Profile1D> profile_for_duration(double p0, double v0, double pG, double vG,
                                              const Limits& limits, double T);

}  // namespace l2plan

#endif  // L2PLAN_SOLVER1D_HPP
