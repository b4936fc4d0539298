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

#include "l2plan/rendezvous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "l2plan/frame.hpp"
#include "l2plan/simulate.hpp"
#include "l2plan/solver1d.hpp"
#include "l2plan/stop.hpp"

namespace l2plan {

double van_der_corput_base2(uint64_t k) {
  double q = 0.0, denom = 1.0;
  while (k) {
    denom *= 2.0;
    q += static_cast<double>(k & 1u) / denom;
    k >>= 1;
  }
  return q;
}

namespace {

// First thrust (direction, duration) of the bang-bang stop from (p, v) to
// target, ignoring the speed bound. Used only to seed the Newton solve.
std::pair<double, double> stop_no_coast_seed(const Vec2& p, const Vec2& v,
                                             const Vec2& target, const Limits& lim,
                                             const SolverConfig& cfg) {
  const GoalFrame frame = goal_frame(target, v);
  const Vec2 p0 = frame.to_local(p);
  const double speed = v.norm();

  if (speed < 1e-14 || std::abs(p0.y()) <= 1e-12 * p0.norm()) {
    // Collinear: 1D bang-bang with the speed bound lifted.
    const double line = speed > 0.0 ? 0.0 : angle_of(Vec2(-p0));
    const double coord = speed > 0.0 ? p0.x() : -p0.norm();
    Limits unbounded = lim;
    unbounded.v_max = std::numeric_limits<double>::max();
    const Profile1D prof = solve_1d(coord, speed, 0.0, 0.0, unbounded);
    if (prof.t1 > 0.0 && prof.s_p != 0) {
      return {frame.angle_to_world(prof.s_p > 0 ? line : line + M_PI), prof.t1};
    }
    if (prof.t2 > 0.0 && prof.s_f != 0) {
      return {frame.angle_to_world(prof.s_f > 0 ? line : line + M_PI), prof.t2};
    }
    return {frame.angle_to_world(line), 0.0};
  }
  try {
    const StopBangBangSolution bb =
        stop_bang_bang(p0 / lim.a_max, speed / lim.a_max, cfg);
    return {frame.angle_to_world(bb.theta1), bb.t1};
  } catch (const SolverError&) {
    // Crude rest-to-point guess keeps the seed ladder populated.
    const double d = (target - p).norm();
    return {angle_of(target - p), std::sqrt(2.0 * d / lim.a_max)};
  }
}

using Vec4 = Eigen::Vector4d;

struct TwoThrustEval {
  Vec2 p_fwd, v_fwd;  // forward from the start through thrust 1
  Vec2 p_bwd, v_bwd;  // backward from the goal through thrust 2
};

TwoThrustEval eval_two_thrust(const Query& q, const Vec4& x) {
  const double a = q.limits.a_max;
  const Vec2 u1 = unit_dir(x[0]), u2 = unit_dir(x[2]);
  const double t1 = x[1], t2 = x[3];
  TwoThrustEval e;
  e.p_fwd = q.start.position + q.start.velocity * t1 + 0.5 * a * u1 * t1 * t1;
  e.v_fwd = q.start.velocity + a * u1 * t1;
  e.p_bwd = q.goal_position - q.goal_velocity.value * t2 + 0.5 * a * u2 * t2 * t2;
  e.v_bwd = q.goal_velocity.value - a * u2 * t2;
  return e;
}

Vec4 no_cruise_residual(const Query& q, const Vec4& x) {
  const TwoThrustEval e = eval_two_thrust(q, x);
  Vec4 r;
  r << e.p_fwd - e.p_bwd, e.v_fwd - e.v_bwd;
  return r;
}

std::optional<Vec4> newton_no_cruise(const Query& q, Vec4 x, const SolverConfig& cfg) {
  Vec4 r = no_cruise_residual(q, x);
  for (int it = 0; it < cfg.newton_max_iters; ++it) {
    if (r.norm() < cfg.e_min) return x;
    Eigen::Matrix4d J;
    for (int j = 0; j < 4; ++j) {
      const double h = 1e-7 * std::max(1.0, std::abs(x[j]));
      Vec4 xp = x;
      xp[j] += h;
      J.col(j) = (no_cruise_residual(q, xp) - r) / h;
    }
    const Vec4 step = J.partialPivLu().solve(-r);
    if (!step.allFinite()) return std::nullopt;
    double lambda = 1.0;
    bool improved = false;
    for (int halvings = 0; halvings < 30; ++halvings) {
      const Vec4 cand = x + lambda * step;
      const Vec4 rc = no_cruise_residual(q, cand);
      if (rc.norm() < r.norm()) {
        x = cand;
        r = rc;
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) return std::nullopt;
  }
  return r.norm() < cfg.e_min ? std::optional<Vec4>(x) : std::nullopt;
}

}  // namespace

NoCruiseSolution rendezvous_no_cruise(const Query& query, const SolverConfig& cfg) {
  if (query.goal_velocity.mode != GoalVelocity::Mode::Fixed) {
    throw std::invalid_argument("rendezvous expects a fixed goal velocity");
  }
  const Limits& lim = query.limits;
  const Vec2 p0 = query.start.position;
  const Vec2 pG = query.goal_position;
  const Vec2 v0 = query.start.velocity;
  const Vec2 vG = query.goal_velocity.value;

  // Handoff ladder: braking points from both ends plus their midpoint.
  const Vec2 p1 = p0 + v0.norm() / (2.0 * lim.a_max) * v0;
  const Vec2 p4 = pG - vG.norm() / (2.0 * lim.a_max) * vG;
  const Vec2 pts[5] = {p0, p1, 0.5 * (p1 + p4), p4, pG};

  std::optional<NoCruiseSolution> best;
  for (const Vec2& handoff : pts) {
    const auto [th1, t1] = stop_no_coast_seed(p0, v0, handoff, lim, cfg);
    const auto [th2, t2] = stop_no_coast_seed(pG, -vG, handoff, lim, cfg);
    Vec4 guess;
    guess << th1, t1, th2, t2;
    const std::optional<Vec4> sol = newton_no_cruise(query, guess, cfg);
    if (!sol) continue;
    Vec4 x = *sol;
    if (x[1] < -1e-12 || x[3] < -1e-12) continue;
    x[1] = std::max(0.0, x[1]);
    x[3] = std::max(0.0, x[3]);
    if (best && x[1] + x[3] >= best->t1 + best->t2) continue;
    NoCruiseSolution out;
    out.theta1 = wrap_angle(x[0]);
    out.t1 = x[1];
    out.theta2 = wrap_angle(x[2]);
    out.t2 = x[3];
    out.switch_speed = (v0 + lim.a_max * unit_dir(x[0]) * x[1]).norm();
    best = out;
  }
  if (!best) {
    throw SolverError(SolverErrorCode::NoConvergence,
                      "no-cruise Newton failed from every seed");
  }
  return *best;
}

namespace {

struct PhiEval {
  double residual;  // wrapped angle mismatch
  Vec2 delta;       // p_{-t2} - p(t1), the cruise displacement
  double r0, rG;
};

PhiEval eval_phi(const Query& q, double phi) {
  const double a = q.limits.a_max, vm = q.limits.v_max;
  const Vec2 vc = vm * unit_dir(phi);
  PhiEval e;
  e.r0 = (vc - q.start.velocity).norm();
  e.rG = (q.goal_velocity.value - vc).norm();
  e.delta = (2.0 * a * (q.goal_position - q.start.position) -
             e.rG * q.goal_velocity.value - e.r0 * q.start.velocity -
             (e.r0 + e.rG) * vc) /
            (2.0 * a);
  e.residual = wrap_angle(angle_of(e.delta) - phi);
  return e;
}

std::optional<Plan> build_cruise_plan(const Query& q, double phi, double e_min) {
  const double a = q.limits.a_max, vm = q.limits.v_max;
  const Vec2 vc = vm * unit_dir(phi);
  const PhiEval e = eval_phi(q, phi);
  const double t1 = e.r0 / a;
  const double t2 = e.rG / a;
  const double theta1 = e.r0 > 1e-14 * vm ? angle_of(vc - q.start.velocity) : phi;
  const double theta2 = e.rG > 1e-14 * vm ? angle_of(q.goal_velocity.value - vc) : phi;
  const double t_c = e.delta.norm() / vm;

  Plan plan = make_plan(
      {Phase::thrust(theta1, t1), Phase::cruise(t_c), Phase::thrust(theta2, t2)},
      CaseTag::RendezvousCruise);
  const State end = simulate(q.start, plan, a);
  const double err = (end.position - q.goal_position).norm() +
                     (end.velocity - q.goal_velocity.value).norm();
  if (err < e_min) return plan;
  return std::nullopt;
}

}  // namespace

CruiseSolution rendezvous_cruise(const Query& query, const SolverConfig& cfg) {
  if (query.goal_velocity.mode != GoalVelocity::Mode::Fixed) {
    throw std::invalid_argument("rendezvous expects a fixed goal velocity");
  }
  // Canonical frame: sampling starts along the start-to-goal direction,
  // which makes the solve rotation equivariant and usually lands the first
  // sample inside the root's basin.
  GoalFrame frame;
  frame.origin = Vec2::Zero();
  const Vec2 span = query.goal_position - query.start.position;
  if (span.norm() > 0.0) {
    frame.rotation = angle_of(span);
  } else if (query.start.velocity.norm() > 0.0) {
    frame.rotation = angle_of(query.start.velocity);
  } else {
    frame.rotation = 0.0;
  }
  Query local = query;
  local.start.position = frame.to_local(query.start.position);
  local.start.velocity = frame.vec_to_local(query.start.velocity);
  local.goal_position = frame.to_local(query.goal_position);
  local.goal_velocity.value = frame.vec_to_local(query.goal_velocity.value);

  const double h = 1e-7;
  for (int k = 1; k <= cfg.max_vdc_samples; ++k) {
    double phi = van_der_corput_angle(static_cast<uint64_t>(k));
    double f = eval_phi(local, phi).residual;
    for (int it = 0; it < 60 && std::abs(f) > 1e-14; ++it) {
      const double fp = eval_phi(local, phi + h).residual;
      const double df = wrap_angle(fp - f) / h;
      if (!std::isfinite(df) || df == 0.0) break;
      double step = -f / df;
      step = std::clamp(step, -M_PI, M_PI);
      double lambda = 1.0;
      bool improved = false;
      for (int halvings = 0; halvings < 30; ++halvings) {
        const double cand = wrap_angle(phi + lambda * step);
        const double fc = eval_phi(local, cand).residual;
        if (std::abs(fc) < std::abs(f)) {
          phi = cand;
          f = fc;
          improved = true;
          break;
        }
        lambda *= 0.5;
      }
      if (!improved) break;
    }
    if (std::abs(f) > 1e-11) continue;
    const std::optional<Plan> local_plan = build_cruise_plan(local, phi, cfg.e_min);
    if (!local_plan) continue;

    CruiseSolution out;
    out.phi = frame.angle_to_world(phi);
    out.samples_used = k;
    std::vector<Phase> phases = local_plan->phases;
    for (Phase& ph : phases) {
      if (ph.kind == PhaseKind::Thrust) ph.theta = frame.angle_to_world(ph.theta);
    }
    out.plan = make_plan(std::move(phases), CaseTag::RendezvousCruise);
    return out;
  }
  throw SolverError(SolverErrorCode::NoConvergence,
                    "cruise direction search exhausted the Van der Corput budget");
}

RendezvousResult rendezvous_solve(const Query& query, const SolverConfig& cfg) {
  const double vm = query.limits.v_max;
  std::optional<NoCruiseSolution> nc;
  try {
    nc = rendezvous_no_cruise(query, cfg);
  } catch (const SolverError&) {
    nc = std::nullopt;
  }
  if (nc && nc->switch_speed <= vm * (1.0 + 1e-12)) {
    RendezvousResult res;
    res.plan = make_plan({Phase::thrust(nc->theta1, nc->t1),
                          Phase::thrust(nc->theta2, nc->t2)},
                         CaseTag::RendezvousNoCruise);
    return res;
  }
  const CruiseSolution cs = rendezvous_cruise(query, cfg);
  RendezvousResult res;
  res.plan = cs.plan;
  res.used_cruise = true;
  res.vdc_samples = cs.samples_used;
  res.phi = cs.phi;
  return res;
}

Plan rendezvous(const Query& query, const SolverConfig& cfg) {
  return rendezvous_solve(query, cfg).plan;
}

}  // namespace l2plan
