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

#include "l2plan/linf.hpp"

#include <algorithm>
#include <cmath>

namespace l2plan {

namespace {

struct Axis {
  double p0, v0, pG, vG;
};

bool axis_feasible(const Axis& ax, const Limits& box, double T) {
  return profile_for_duration(ax.p0, ax.v0, ax.pG, ax.vG, box, T).has_value();
}

// Smallest admissible duration >= T for one axis. The infeasible set above
// the axis minimum is a bounded window; expand then bisect its upper edge.
double next_admissible(const Axis& ax, const Limits& box, double T,
                       std::vector<std::pair<double, double>>* gaps) {
  if (axis_feasible(ax, box, T)) return T;
  double lo = T;
  double hi = std::max(T, 1e-3);
  for (int it = 0; it < 200; ++it) {
    hi *= 1.5;
    if (axis_feasible(ax, box, hi)) break;
    lo = hi;
    if (it == 199) {
      throw SolverError(SolverErrorCode::NoSync,
                        "no admissible synchronization time found");
    }
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (axis_feasible(ax, box, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
  }
  if (gaps) gaps->push_back({T, hi});
  return hi;
}

}  // namespace

SyncedProfile solve_linf(const Query& query, double box_a, double box_v) {
  if (query.goal_velocity.mode == GoalVelocity::Mode::Free) {
    throw std::invalid_argument("solve_linf expects a zero or fixed goal velocity");
  }
  const Vec2 vG = query.goal_velocity.mode == GoalVelocity::Mode::Zero
                      ? Vec2(Vec2::Zero())
                      : query.goal_velocity.value;
  const Axis ax[2] = {
      {query.start.position.x(), query.start.velocity.x(), query.goal_position.x(),
       vG.x()},
      {query.start.position.y(), query.start.velocity.y(), query.goal_position.y(),
       vG.y()},
  };
  const Limits box{box_a, box_v};
  for (const Axis& a : ax) {
    if (std::abs(a.v0) > box_v || std::abs(a.vG) > box_v) {
      throw std::invalid_argument("axis velocity exceeds the box bound");
    }
  }

  SyncedProfile out;
  double T = 0.0;
  for (const Axis& a : ax) {
    T = std::max(T, solve_1d(a.p0, a.v0, a.pG, a.vG, box).total_time());
  }
  for (int round = 0; round < 16; ++round) {
    const double T0 = T;
    for (const Axis& a : ax) T = std::max(T, next_admissible(a, box, T, &out.gaps));
    if (T == T0) break;
  }
  const auto px = profile_for_duration(ax[0].p0, ax[0].v0, ax[0].pG, ax[0].vG, box, T);
  const auto py = profile_for_duration(ax[1].p0, ax[1].v0, ax[1].pG, ax[1].vG, box, T);
  if (!px || !py) {
    throw SolverError(SolverErrorCode::NoSync, "axes disagree at the candidate time");
  }
  out.x = *px;
  out.y = *py;
  out.t_sync = T;
  return out;
}

std::pair<double, double> linf_axis_state(double p0, double v0, const Profile1D& prof,
                                          double box_a, double t) {
  const double acc[3] = {prof.s_p * box_a, 0.0, prof.s_f * box_a};
  const double dur[3] = {prof.t1, prof.t_c, prof.t2};
  double p = p0, v = v0;
  for (int i = 0; i < 3; ++i) {
    const double dt = std::clamp(t, 0.0, dur[i]);
    p += v * dt + 0.5 * acc[i] * dt * dt;
    v += acc[i] * dt;
    t -= dt;
    if (t <= 0.0) break;
  }
  return {p, v};
}

double linf_path_length(const Query& query, const SyncedProfile& sp, double box_a) {
  // Speed is piecewise smooth; a fine trapezoid over the switch-aligned grid
  // is plenty for plotting-grade lengths.
  std::vector<double> knots = {0.0, sp.t_sync};
  for (const Profile1D* pr : {&sp.x, &sp.y}) {
    knots.push_back(pr->t1);
    knots.push_back(pr->t1 + pr->t_c);
    knots.push_back(pr->t1 + pr->t_c + pr->t2);
  }
  std::sort(knots.begin(), knots.end());
  double len = 0.0;
  auto speed_at = [&](double t) {
    const auto [pxv, vx] = linf_axis_state(query.start.position.x(),
                                           query.start.velocity.x(), sp.x, box_a, t);
    const auto [pyv, vy] = linf_axis_state(query.start.position.y(),
                                           query.start.velocity.y(), sp.y, box_a, t);
    (void)pxv;
    (void)pyv;
    return std::hypot(vx, vy);
  };
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = std::clamp(knots[i], 0.0, sp.t_sync);
    const double b = std::clamp(knots[i + 1], 0.0, sp.t_sync);
    if (b - a < 1e-15) continue;
    const int n = 256;
    double acc = 0.5 * (speed_at(a) + speed_at(b));
    for (int j = 1; j < n; ++j) acc += speed_at(a + (b - a) * j / n);
    len += acc * (b - a) / n;
  }
  return len;
}

}  // namespace l2plan
