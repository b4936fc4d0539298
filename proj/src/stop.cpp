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

#include "l2plan/stop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "l2plan/frame.hpp"
#include "l2plan/reach.hpp"
#include "l2plan/solver1d.hpp"

namespace l2plan {

Polynomial stop_sextic(const Vec2& p0_tilde, double v0x_tilde) {
  const double px = p0_tilde.x(), py = p0_tilde.y(), v = v0x_tilde;
  const double v3 = v * v * v, v4 = v3 * v, v5 = v4 * v, v7 = v4 * v3, v8 = v4 * v4;
  const double px2 = px * px, px3 = px2 * px, px4 = px2 * px2, px6 = px4 * px2;
  const double py2 = py * py, py3 = py2 * py, py4 = py2 * py2;

  const double t0 = -4.0 * (16.0 * px6 + 8.0 * px4 * (6.0 * py2 - v4) +
                            (py * v4 - 4.0 * py3) * (py * v4 - 4.0 * py3) +
                            px2 * (48.0 * py4 + 48.0 * py2 * v4 + v8));
  const double t1 = -4.0 * px * v *
                    (80.0 * px4 + 80.0 * py4 + 72.0 * py2 * v4 + v8 +
                     8.0 * px2 * (20.0 * py2 - 3.0 * v4));
  const double t2 = -(v * v) * (464.0 * px4 + 208.0 * py4 + 88.0 * py2 * v4 + v8 +
                                24.0 * px2 * (28.0 * py2 - 5.0 * v4));
  const double t3 = -256.0 * px3 * v3 - 128.0 * px * py2 * v3 + 64.0 * px * v7;
  const double t4 = 64.0 * px4 + 128.0 * px2 * py2 + 64.0 * py4 - 64.0 * px2 * v4 +
                    32.0 * py2 * v4 + 12.0 * v8;
  const double t5 = 64.0 * px3 * v + 64.0 * px * py2 * v - 16.0 * px * v5;
  const double t6 = 16.0 * px2 * v * v - 4.0 * v4 * v * v;
  return Polynomial{t0, t1, t2, t3, t4, t5, t6};
}

namespace {

struct BangBangEval {
  Vec2 p1, v1;
  double tau2;  // braking time = |v(t1)| in the scaled frame
};

BangBangEval eval_bang_bang(const Vec2& p0, double v0x, double theta, double t1) {
  const Vec2 u = unit_dir(theta);
  BangBangEval e;
  e.v1 = Vec2(v0x, 0.0) + u * t1;
  e.p1 = p0 + Vec2(v0x, 0.0) * t1 + 0.5 * u * t1 * t1;
  e.tau2 = e.v1.norm();
  return e;
}

// Residual of the stop condition p(t1) + v(t1)*|v(t1)|/2 = 0.
Vec2 stop_residual(const Vec2& p0, double v0x, double theta, double t1) {
  const BangBangEval e = eval_bang_bang(p0, v0x, theta, t1);
  return e.p1 + 0.5 * e.v1 * e.tau2;
}

// 2D Newton polish of a (theta, t1) candidate on the stop condition.
void polish_bang_bang(const Vec2& p0, double v0x, double* theta, double* t1) {
  const double h = 1e-7;
  for (int it = 0; it < 8; ++it) {
    const Vec2 r = stop_residual(p0, v0x, *theta, *t1);
    if (r.norm() < 1e-14 * std::max(1.0, p0.norm())) break;
    const Vec2 r_th = (stop_residual(p0, v0x, *theta + h, *t1) - r) / h;
    const Vec2 r_t = (stop_residual(p0, v0x, *theta, *t1 + h) - r) / h;
    Eigen::Matrix2d J;
    J << r_th.x(), r_t.x(), r_th.y(), r_t.y();
    if (std::abs(J.determinant()) < 1e-14) break;
    const Vec2 step = J.partialPivLu().solve(-r);
    if (!step.allFinite() || step.norm() > 0.5 * std::max(1.0, std::abs(*t1))) break;
    const double nt = *theta + step.x(), nt1 = *t1 + step.y();
    if (stop_residual(p0, v0x, nt, nt1).norm() >= r.norm()) break;
    *theta = nt;
    *t1 = nt1;
  }
}

// Candidate cos(theta1) values for a given t1. Eliminating theta1 from the
// stop condition leaves a cubic in the braking time tau2; each admissible
// tau2 root maps back to one (c, s) pair.
void c_candidates(const Vec2& p0, double v0x, double t1, const SolverConfig& cfg,
                  std::vector<std::pair<double, double>>* out) {
  const double v = v0x;
  const std::vector<double> taus = real_roots(
      Polynomial{-(t1 * t1 * t1 - 3.0 * v * v * t1 - 4.0 * v * p0.x()),
                 -(t1 * t1 - v * v), t1, 1.0},
      cfg.real_root_tol);
  for (double tau : taus) {
    if (tau <= 0.0) continue;
    const double den = t1 * (t1 + tau);
    if (std::abs(den) < 1e-14) continue;
    double c = -2.0 * (p0.x() + v * t1 + 0.5 * v * tau) / den;
    double s = -2.0 * p0.y() / den;
    if (std::abs(c) > 1.0 + 1e-10 || std::abs(s) > 1.0 + 1e-10) continue;
    c = std::clamp(c, -1.0, 1.0);
    s = std::clamp(s, -1.0, 1.0);
    const double n = std::hypot(c, s);
    if (std::abs(n - 1.0) > 1e-6) continue;
    out->push_back({c / n, s / n});
  }
}

}  // namespace

StopBangBangSolution stop_bang_bang(const Vec2& p0_tilde, double v0x_tilde,
                                    const SolverConfig& cfg) {
  const Vec2 p0 = p0_tilde;
  const double v = v0x_tilde;
  const double scale = std::max(1.0, p0.norm());

  std::optional<StopBangBangSolution> best;
  double best_total = std::numeric_limits<double>::infinity();
  auto consider = [&](double theta, double t1) {
    if (t1 < -1e-12) return;
    t1 = std::max(0.0, t1);
    polish_bang_bang(p0, v, &theta, &t1);
    if (t1 < 0.0) return;
    const BangBangEval e = eval_bang_bang(p0, v, theta, t1);
    if (stop_residual(p0, v, theta, t1).norm() > 1e-8 * scale) return;
    const double total = t1 + e.tau2;
    const bool better =
        total < best_total - 1e-15 ||
        (std::abs(total - best_total) <= 1e-15 && best &&
         wrap_angle(theta) < best->theta1);
    if (!better) return;
    best_total = total;
    StopBangBangSolution sol;
    sol.theta1 = wrap_angle(theta);
    sol.t1 = t1;
    sol.t2 = e.tau2;
    sol.peak_speed = e.tau2;
    sol.theta2 = e.tau2 > 0.0 ? angle_of(Vec2(-e.v1)) : wrap_angle(theta + M_PI);
    best = sol;
  };

  // Pure braking (t1 = 0) stops at the goal only when the start already
  // points through it; the sextic cannot represent that root.
  if (std::abs(v) > 0.0 &&
      (p0 + 0.5 * Vec2(v, 0.0) * std::abs(v)).norm() < 1e-10 * scale) {
    consider(v > 0.0 ? M_PI : 0.0, 0.0);
  }

  const std::vector<double> roots = real_roots(stop_sextic(p0, v), cfg.real_root_tol);
  std::vector<std::pair<double, double>> cs;
  for (double t1 : roots) {
    if (t1 < 1e-12) continue;
    cs.clear();
    c_candidates(p0, v, t1, cfg, &cs);
    for (const auto& [c, s] : cs) {
      consider(std::atan2(s, c), t1);
      consider(std::atan2(-s, c), t1);
    }
  }
  if (!best) {
    throw SolverError(SolverErrorCode::NoValidRoot,
                      "stop sextic produced no zero-residual candidate");
  }
  return *best;
}

StopCruiseSolution stop_with_cruise(const Query& query, const SolverConfig& cfg) {
  const Limits& lim = query.limits;
  const GoalFrame frame = goal_frame(query.goal_position, query.start.velocity);
  const Vec2 p0 = frame.to_local(query.start.position);
  const double speed0 = query.start.velocity.norm();

  const CoastCandidate cand = reach_position_coast(p0, speed0, lim, cfg);
  const Vec2 u = unit_dir(cand.theta1);
  const Vec2 v1 = Vec2(speed0, 0.0) + lim.a_max * u * cand.t1;
  const Vec2 p1 = p0 + Vec2(speed0, 0.0) * cand.t1 + 0.5 * lim.a_max * u * cand.t1 * cand.t1;

  StopCruiseSolution sol;
  sol.braking_radius = lim.v_max * lim.v_max / (2.0 * lim.a_max);
  sol.cruise_distance = p1.norm();
  if (sol.cruise_distance < sol.braking_radius * (1.0 - 1e-9)) {
    throw SolverError(SolverErrorCode::NegativeCruise,
                      "goal lies inside the braking radius");
  }
  sol.theta1 = frame.angle_to_world(cand.theta1);
  sol.t1 = cand.t1;
  sol.t_c = std::max(0.0, (sol.cruise_distance - sol.braking_radius) / lim.v_max);
  sol.t2 = lim.v_max / lim.a_max;
  sol.theta2 = frame.angle_to_world(angle_of(Vec2(-v1)));
  return sol;
}

namespace {

// Collinear queries reduce exactly to the 1D profile; the sextic machinery
// degenerates there (the c(t1) denominators vanish).
Plan stop_collinear(const GoalFrame& frame, const Vec2& p0, double speed0,
                    const Limits& lim) {
  double line_angle, coord;
  if (speed0 > 0.0) {
    line_angle = 0.0;   // local +x is the velocity direction
    coord = p0.x();
  } else {
    line_angle = angle_of(Vec2(-p0));
    coord = -p0.norm();
  }
  const Profile1D prof = solve_1d(coord, speed0, 0.0, 0.0, lim);
  std::vector<Phase> phases;
  auto add_thrust = [&](int sgn, double dur) {
    if (dur > 0.0 && sgn != 0) {
      phases.push_back(Phase::thrust(
          frame.angle_to_world(sgn > 0 ? line_angle : line_angle + M_PI), dur));
    }
  };
  add_thrust(prof.s_p, prof.t1);
  if (prof.t_c > 0.0) phases.push_back(Phase::cruise(prof.t_c));
  add_thrust(prof.s_f, prof.t2);
  return make_plan(std::move(phases),
                   prof.t_c > 0.0 ? CaseTag::StopCruise : CaseTag::StopBangBang);
}

}  // namespace

Plan stop_at_goal(const Query& query, const SolverConfig& cfg) {
  if (query.goal_velocity.mode != GoalVelocity::Mode::Zero) {
    throw std::invalid_argument("stop_at_goal expects a zero goal velocity");
  }
  const Limits& lim = query.limits;
  const GoalFrame frame = goal_frame(query.goal_position, query.start.velocity);
  const Vec2 p0 = frame.to_local(query.start.position);
  const double speed0 = query.start.velocity.norm();

  if (speed0 < 1e-14 * lim.v_max || std::abs(p0.y()) <= 1e-12 * p0.norm()) {
    return stop_collinear(frame, p0, speed0, lim);
  }

  const StopBangBangSolution bb = stop_bang_bang(p0 / lim.a_max, speed0 / lim.a_max, cfg);
  if (bb.peak_speed * lim.a_max <= lim.v_max * (1.0 + 1e-12)) {
    return make_plan({Phase::thrust(frame.angle_to_world(bb.theta1), bb.t1),
                      Phase::thrust(frame.angle_to_world(bb.theta2), bb.t2)},
                     CaseTag::StopBangBang);
  }

  const StopCruiseSolution sc = stop_with_cruise(query, cfg);
  return make_plan({Phase::thrust(sc.theta1, sc.t1), Phase::cruise(sc.t_c),
                    Phase::thrust(sc.theta2, sc.t2)},
                   CaseTag::StopCruise);
}

}  // namespace l2plan
