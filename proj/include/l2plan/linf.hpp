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

#ifndef L2PLAN_LINF_HPP
#define L2PLAN_LINF_HPP

#include <vector>

#include "l2plan/solver1d.hpp"
#include "l2plan/types.hpp"

namespace l2plan {

// Per-axis profiles under box bounds, synchronized to a common finish time.
struct SyncedProfile {
  Profile1D x;
  Profile1D y;
  double t_sync = 0.0;
  // Inadmissible time windows skipped during synchronization, for inspection.
  std::vector<std::pair<double, double>> gaps;
};

// Box-bound baseline: solve each axis with solver1d under (box_a, box_v),
// then search for the smallest common finish time both axes can meet
// exactly. Goal velocity must be zero or fixed, with per-axis start and
// goal velocities inside box_v. Throws NoSync when no common time is found.
SyncedProfile solve_linf(const Query& query, double box_a, double box_v);

// Sampled state of a synchronized axis at time t.
std::pair<double, double> linf_axis_state(double p0, double v0, const Profile1D& prof,
                                          double box_a, double t);

// Path length of the synchronized trajectory (numeric, fine trapezoid).
double linf_path_length(const Query& query, const SyncedProfile& sp, double box_a);

}  // namespace l2plan

#endif  // L2PLAN_LINF_HPP
