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

#include "l2plan/reach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "l2plan/frame.hpp"

namespace l2plan {

double time_to_speed_limit(const Vec2& v0, double theta, const Limits& limits) {
  const Vec2 u = unit_dir(theta);
  const double proj = v0.dot(u);
  const double rad = limits.v_max * limits.v_max - v0.squaredNorm() + proj * proj;
  return (std::sqrt(std::max(0.0, rad)) - proj) / limits.a_max;
}

Polynomial coast_sextic(const Vec2& p0, double v0x, const Limits& limits) {
  const double a = limits.a_max, vm = limits.v_max;
  const double px = p0.x(), py = p0.y();
  const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
  const double vm2 = vm * vm, vm4 = vm2 * vm2, vm6 = vm4 * vm2, vm8 = vm4 * vm4;
  const double v2 = v0x * v0x, v4 = v2 * v2, v6 = v4 * v2, v8 = v4 * v4;
  const double v10 = v8 * v2, v12 = v8 * v4;
  const double px2 = px * px, px4 = px2 * px2;
  const double py2 = py * py, py4 = py2 * py2;

  const double s0 = 16.0 * a4 * vm4 * py4;
  const double s1 = 64.0 * a3 * vm4 * py2 * py * v2;
  const double s2 = -8.0 * a2 * vm2 * py2 *
                    (4.0 * a2 * vm2 * px2 + 4.0 * a2 * vm2 * py2 + vm4 * v2 +
                     4.0 * a2 * px2 * v2 + 4.0 * a2 * py2 * v2 - 10.0 * vm2 * v4 + v6);
  const double s3 = -16.0 * a * vm2 * py * v2 *
                    (6.0 * a2 * vm2 * py2 + vm4 * v2 + 6.0 * a2 * py2 * v2 -
                     2.0 * vm2 * v4 + v6);
  const double s4 =
      16.0 * a4 * vm4 * px4 + 32.0 * a4 * vm4 * px2 * py2 + 16.0 * a4 * vm4 * py4 -
      8.0 * a2 * vm6 * px2 * v2 - 32.0 * a4 * vm2 * px4 * v2 + 8.0 * a2 * vm6 * py2 * v2 +
      32.0 * a4 * vm2 * py4 * v2 + vm8 * v4 + 8.0 * a2 * vm4 * px2 * v4 +
      16.0 * a4 * px4 * v4 - 72.0 * a2 * vm4 * py2 * v4 + 32.0 * a4 * px2 * py2 * v4 +
      16.0 * a4 * py4 * v4 - 4.0 * vm6 * v6 + 8.0 * a2 * vm2 * px2 * v6 -
      72.0 * a2 * vm2 * py2 * v6 + 6.0 * vm4 * v8 - 8.0 * a2 * px2 * v8 +
      8.0 * a2 * py2 * v8 - 4.0 * vm2 * v10 + v12;
  const double s5 = 8.0 * a * py * v2 *
                    (4.0 * a2 * vm4 * px2 + 4.0 * a2 * vm4 * py2 + vm6 * v2 -
                     8.0 * a2 * vm2 * px2 * v2 + 8.0 * a2 * vm2 * py2 * v2 - vm4 * v4 +
                     4.0 * a2 * px2 * v4 + 4.0 * a2 * py2 * v4 - vm2 * v6 + v8);
  const double s6 = 16.0 * a2 * v4 *
                    (vm4 * px2 + vm4 * py2 - 2.0 * vm2 * px2 * v2 + 2.0 * vm2 * py2 * v2 +
                     px2 * v4 + py2 * v4);
  return Polynomial{s0, s1, s2, s3, s4, s5, s6};
}

namespace {

struct CoastEval {
  Vec2 p1, v1;
  double t1;
};

CoastEval eval_coast(const Vec2& p0, double v0x, const Limits& limits, double theta) {
  const Vec2 v0(v0x, 0.0);
  const Vec2 u = unit_dir(theta);
  const double t1 = time_to_speed_limit(v0, theta, limits);
  CoastEval e;
  e.t1 = t1;
  e.p1 = p0 + v0 * t1 + 0.5 * limits.a_max * u * t1 * t1;
  e.v1 = v0 + limits.a_max * u * t1;
  return e;
}

// Aim error: angle between the velocity at t1 and the goal direction.
double aim_error(const Vec2& p0, double v0x, const Limits& limits, double theta) {
  const CoastEval e = eval_coast(p0, v0x, limits, theta);
  return wrap_angle(angle_of(e.v1) - angle_of(Vec2(-e.p1)));
}

// A few Newton steps on the aim error sharpen polynomial roots to machine
// precision; the sextic assembly is exact but its conditioning degrades for
// small v0x.
double polish_theta(const Vec2& p0, double v0x, const Limits& limits, double theta) {
  const double h = 1e-7;
  for (int it = 0; it < 8; ++it) {
    const double g = aim_error(p0, v0x, limits, theta);
    if (std::abs(g) < 1e-14) break;
    const double gp = aim_error(p0, v0x, limits, theta + h);
    const double dg = wrap_angle(gp - g) / h;
    if (!std::isfinite(dg) || dg == 0.0) break;
    const double step = -g / dg;
    if (std::abs(step) > 0.5) break;  // keep the polish local to this root
    const double cand = theta + step;
    if (std::abs(aim_error(p0, v0x, limits, cand)) >= std::abs(g)) break;
    theta = cand;
  }
  return theta;
}

}  // namespace

CoastCandidate reach_position_coast(const Vec2& p0, double v0x, const Limits& limits,
                                    const SolverConfig& cfg) {
  const double vm = limits.v_max;
  const double pos_scale = std::max(1.0, p0.norm());

  if (std::abs(v0x) < 1e-12 * vm) {
    // At rest the thrust aims straight at the goal.
    return CoastCandidate{angle_of(Vec2(-p0)), vm / limits.a_max, true};
  }

  const Polynomial sextic = coast_sextic(p0, v0x, limits);
  const std::vector<double> s_roots = real_roots(sextic, cfg.real_root_tol);

  std::optional<CoastCandidate> best;
  double best_total = std::numeric_limits<double>::infinity();
  for (double s : s_roots) {
    if (std::abs(s) > 1.0 + 1e-12) continue;
    s = std::clamp(s, -1.0, 1.0);
    const double c = std::sqrt(1.0 - s * s);
    for (const double cos_branch : {c, -c}) {
      double theta = std::atan2(s, cos_branch);
      theta = polish_theta(p0, v0x, limits, theta);
      const CoastEval e = eval_coast(p0, v0x, limits, theta);
      if (e.t1 < 0.0) continue;
      const double dist = e.p1.norm();
      if (dist > 1e-12 * pos_scale &&
          std::abs(wrap_angle(angle_of(e.v1) - angle_of(Vec2(-e.p1)))) > 1e-7) {
        continue;
      }
      const double total = e.t1 + dist / vm;
      if (total < best_total) {
        best_total = total;
        best = CoastCandidate{wrap_angle(theta), e.t1, true};
      }
    }
  }
  if (!best) {
    throw SolverError(SolverErrorCode::NoValidRoot,
                      "coast sextic produced no goal-aimed candidate");
  }
  return *best;
}

Plan reach_position(const Query& query, const SolverConfig& cfg) {
  if (query.goal_velocity.mode != GoalVelocity::Mode::Free) {
    throw std::invalid_argument("reach_position expects an unconstrained goal velocity");
  }
  const Limits& lim = query.limits;
  const double a = lim.a_max, vm = lim.v_max;

  const GoalFrame frame = goal_frame(query.goal_position, query.start.velocity);
  const Vec2 p0 = frame.to_local(query.start.position);
  const double speed0 = query.start.velocity.norm();
  const Vec2 v0(speed0, 0.0);

  if (p0.norm() == 0.0) {
    return make_plan({}, CaseTag::ReachNoCoast);
  }

  // Collinear queries reduce to the 1D thrust-toward-goal profile.
  if (speed0 < 1e-14 * vm || std::abs(p0.y()) <= 1e-12 * p0.norm()) {
    const double line = angle_of(Vec2(-p0));
    const double dist = p0.norm();
    // Signed speed toward the goal (v0 is along local +x).
    const double u0 = speed0 * (p0.x() < 0.0 ? 1.0 : -1.0);
    const double t_hit = (-u0 + std::sqrt(u0 * u0 + 2.0 * a * dist)) / a;
    std::vector<Phase> phases;
    if (u0 + a * t_hit <= vm * (1.0 + 1e-12)) {
      phases.push_back(Phase::thrust(frame.angle_to_world(line), t_hit));
    } else {
      const double t1 = (vm - u0) / a;
      const double covered = (vm * vm - u0 * u0) / (2.0 * a);
      if (t1 > 0.0) phases.push_back(Phase::thrust(frame.angle_to_world(line), t1));
      phases.push_back(Phase::cruise((dist - covered) / vm));
    }
    return make_plan(std::move(phases), CaseTag::Reach1D);
  }

  const double t1 = quartic_reach_t1(p0 / a, speed0 / a);
  const double theta1 = angle_of(Vec2(-(p0 + v0 * t1)));
  const Vec2 v_at = v0 + a * unit_dir(theta1) * t1;
  if (v_at.norm() <= vm * (1.0 + 1e-12)) {
    return make_plan({Phase::thrust(frame.angle_to_world(theta1), t1)},
                     CaseTag::ReachNoCoast);
  }

  const CoastCandidate cand = reach_position_coast(p0, speed0, lim, cfg);
  const Vec2 u = unit_dir(cand.theta1);
  const Vec2 p1 = p0 + v0 * cand.t1 + 0.5 * a * u * cand.t1 * cand.t1;
  const double t_c = p1.norm() / vm;
  return make_plan({Phase::thrust(frame.angle_to_world(cand.theta1), cand.t1),
                    Phase::cruise(t_c)},
                   CaseTag::ReachCoast);
}

}  // namespace l2plan
