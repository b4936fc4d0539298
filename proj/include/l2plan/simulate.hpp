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

#ifndef L2PLAN_SIMULATE_HPP
#define L2PLAN_SIMULATE_HPP

#include <span>

#include "l2plan/types.hpp"

namespace l2plan {

// Acceleration vector applied during a phase.
inline Vec2 phase_accel(const Phase& ph, double a_max) {
  return ph.kind == PhaseKind::Thrust ? Vec2(a_max * unit_dir(ph.theta)) : Vec2::Zero();
}

// State after applying one phase for time t (0 <= t <= ph.duration).
State advance(const State& s, const Phase& ph, double a_max, double t);

// Exact closed-form state after applying all phases in order.
State simulate(const State& start, std::span<const Phase> phases, double a_max);
State simulate(const State& start, const Plan& plan, double a_max);

// Largest speed over one phase. Speed along a constant-thrust phase is
// convex in time, so the extremum inside the phase is a minimum; the
// maximum sits at an endpoint.
double phase_max_speed(const State& entry, const Phase& ph, double a_max);
double phase_min_speed(const State& entry, const Phase& ph, double a_max);

double plan_max_speed(const State& start, const Plan& plan, double a_max);

// Exact arc length of a plan (per-phase closed form).
double plan_arc_length(const State& start, const Plan& plan, double a_max);

struct ValidationReport {
  double position_error = 0.0;      // |p(T) - pG|
  double velocity_error = 0.0;      // |v(T) - vG| when the goal velocity is constrained
  bool velocity_checked = false;
  double max_speed = 0.0;           // over the whole plan
  bool cruise_speed_ok = true;      // every cruise entered at v_max (within tol*v_max)
  bool time_consistent = true;      // total_time equals the sum of durations
  bool pass = false;
};

// Checks a plan against its query. Position passes at tol*max(1, |pG-p0|),
// velocity at tol*v_max, the speed bound at v_max*(1+tol).
ValidationReport validate(const Plan& plan, const Query& query, double tol);

}  // namespace l2plan

#endif  // L2PLAN_SIMULATE_HPP
