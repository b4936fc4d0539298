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

#ifndef L2PLAN_RENDEZVOUS_HPP
#define L2PLAN_RENDEZVOUS_HPP

#include "l2plan/types.hpp"

namespace l2plan {

// Van der Corput sequence, base 2: k = 1, 2, 3, ... -> 1/2, 1/4, 3/4, 1/8, ...
double van_der_corput_base2(uint64_t k);

// k-th sample of the cruise direction: phi_1 = 0, then midpoints of the
// remaining gaps of [-pi, pi).
inline double van_der_corput_angle(uint64_t k) {
  return -M_PI + 2.0 * M_PI * van_der_corput_base2(k);
}

// Two-thrust solution with nonzero final velocity: thrust theta1 for t1
// meets the time-reversed thrust theta2 for t2 in position and velocity.
struct NoCruiseSolution {
  double theta1 = 0.0;
  double t1 = 0.0;
  double theta2 = 0.0;
  double t2 = 0.0;
  double switch_speed = 0.0;  // |v(t1)|, the fastest point of the motion
};

// Thrust to v_max along phi, cruise, thrust to vG.
struct CruiseSolution {
  Plan plan;
  double phi = 0.0;
  int samples_used = 0;  // Van der Corput samples consumed
};

// Damped-Newton multistart on the four-equation no-cruise system, seeded by
// bang-bang stop sub-solutions toward a ladder of handoff points. Returns
// the converged solution of least total time; throws NoConvergence when no
// seed converges.
NoCruiseSolution rendezvous_no_cruise(const Query& query, const SolverConfig& cfg);

// Single-parameter cruise solve: scalar root finding on the cruise
// direction, seeded by successive Van der Corput samples until the terminal
// residual drops below cfg.e_min. Throws NoConvergence after
// cfg.max_vdc_samples samples.
CruiseSolution rendezvous_cruise(const Query& query, const SolverConfig& cfg);

struct RendezvousResult {
  Plan plan;
  bool used_cruise = false;
  int vdc_samples = 0;
  double phi = 0.0;
};

RendezvousResult rendezvous_solve(const Query& query, const SolverConfig& cfg);

// Minimum-time plan reaching the goal position with the requested velocity.
Plan rendezvous(const Query& query, const SolverConfig& cfg);

}  // namespace l2plan

#endif  // L2PLAN_RENDEZVOUS_HPP
