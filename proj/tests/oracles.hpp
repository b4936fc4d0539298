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
//
// Brute-force reference solvers. These deliberately avoid the polynomial
// and Newton machinery in the library: coarse grids plus local polishing
// on the raw kinematic conditions.

#ifndef L2PLAN_TESTS_ORACLES_HPP
#define L2PLAN_TESTS_ORACLES_HPP

#include <optional>
#include <random>

#include "l2plan/types.hpp"

namespace l2plan::oracles {

// Fixed-step RK4 integration of a phase list.
State rk4_simulate(const State& start, const std::vector<Phase>& phases, double a_max,
                   double dt);

// Minimum time to pass through the goal position (free final velocity),
// by a theta/time grid refined with 2D Newton on the hit condition.
double reach_time(const Query& query);

// Minimum time to stop at the goal, handling both the two-thrust and the
// thrust-cruise-brake branch.
double stop_time(const Query& query);

struct TwoThrustOracle {
  double total_time = 0.0;
  double switch_speed = 0.0;
};

// Global minimum-time two-thrust solution for a fixed goal velocity
// (ignores v_max), by a theta1/theta2 grid with the durations from the
// per-cell linear velocity system, refined with 2D Newton.
std::optional<TwoThrustOracle> two_thrust_min_time(const Query& query);

// Uniform sample in a disk.
Vec2 sample_disk(std::mt19937_64& rng, double radius);

Query random_query(std::mt19937_64& rng, GoalVelocity::Mode mode, double radius_p = 2.0,
                   double radius_v = 1.0);

}  // namespace l2plan::oracles

#endif  // L2PLAN_TESTS_ORACLES_HPP
