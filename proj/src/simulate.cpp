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

#include "l2plan/simulate.hpp"

#include <algorithm>
#include <cmath>

namespace l2plan {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Reach1D: return "reach_1d";
    case CaseTag::ReachNoCoast: return "reach_no_coast";
    case CaseTag::ReachCoast: return "reach_coast";
    case CaseTag::StopBangBang: return "stop_bang_bang";
    case CaseTag::StopCruise: return "stop_cruise";
    case CaseTag::RendezvousNoCruise: return "rendezvous_no_cruise";
    case CaseTag::RendezvousCruise: return "rendezvous_cruise";
  }
  return "unknown";
}

State advance(const State& s, const Phase& ph, double a_max, double t) {
  const Vec2 a = phase_accel(ph, a_max);
  State out;
  out.position = s.position + s.velocity * t + 0.5 * a * t * t;
  out.velocity = s.velocity + a * t;
  return out;
}

State simulate(const State& start, std::span<const Phase> phases, double a_max) {
  State s = start;
  for (const Phase& ph : phases) s = advance(s, ph, a_max, ph.duration);
  return s;
}

State simulate(const State& start, const Plan& plan, double a_max) {
  return simulate(start, std::span<const Phase>(plan.phases), a_max);
}

double phase_max_speed(const State& entry, const Phase& ph, double a_max) {
  const State end = advance(entry, ph, a_max, ph.duration);
  double m = std::max(entry.velocity.norm(), end.velocity.norm());
  if (ph.kind == PhaseKind::Thrust && a_max > 0.0) {
    const Vec2 u = unit_dir(ph.theta);
    const double t_star = -entry.velocity.dot(u) / a_max;
    if (t_star > 0.0 && t_star < ph.duration) {
      m = std::max(m, advance(entry, ph, a_max, t_star).velocity.norm());
    }
  }
  return m;
}

double phase_min_speed(const State& entry, const Phase& ph, double a_max) {
  const State end = advance(entry, ph, a_max, ph.duration);
  double m = std::min(entry.velocity.norm(), end.velocity.norm());
  if (ph.kind == PhaseKind::Thrust && a_max > 0.0) {
    const Vec2 u = unit_dir(ph.theta);
    const double t_star = -entry.velocity.dot(u) / a_max;
    if (t_star > 0.0 && t_star < ph.duration) {
      m = std::min(m, advance(entry, ph, a_max, t_star).velocity.norm());
    }
  }
  return m;
}

double plan_max_speed(const State& start, const Plan& plan, double a_max) {
  State s = start;
  double m = s.velocity.norm();
  for (const Phase& ph : plan.phases) {
    m = std::max(m, phase_max_speed(s, ph, a_max));
    s = advance(s, ph, a_max, ph.duration);
  }
  return m;
}

namespace {

// Arc length of v(t) = v0 + a*u*t over [0, T]:
// integral of a*sqrt((t+b)^2 + c^2) with b = v0.u/a, c = |cross(v0,u)|/a.
double thrust_arc_length(const Vec2& v0, double theta, double a, double T) {
  if (T <= 0.0) return 0.0;
  const Vec2 u = unit_dir(theta);
  const double b = v0.dot(u) / a;
  const double c = std::abs(v0.x() * u.y() - v0.y() * u.x()) / a;
  if (c < 1e-14 * std::max(1.0, std::abs(b))) {
    // collinear: integral of a*|t+b|
    auto seg = [&](double lo, double hi) {
      return 0.5 * (hi * std::abs(hi) - lo * std::abs(lo));
    };
    return a * seg(b, b + T);
  }
  auto F = [&](double t) {
    const double r = std::hypot(t, c);
    return 0.5 * (t * r + c * c * std::log(t + r));
  };
  return a * (F(b + T) - F(b));
}

}  // namespace

double plan_arc_length(const State& start, const Plan& plan, double a_max) {
  State s = start;
  double len = 0.0;
  for (const Phase& ph : plan.phases) {
    if (ph.kind == PhaseKind::Thrust) {
      len += thrust_arc_length(s.velocity, ph.theta, a_max, ph.duration);
    } else {
      len += s.velocity.norm() * ph.duration;
    }
    s = advance(s, ph, a_max, ph.duration);
  }
  return len;
}

ValidationReport validate(const Plan& plan, const Query& query, double tol) {
  ValidationReport rep;
  const double a = query.limits.a_max;
  const double vm = query.limits.v_max;

  const State end = simulate(query.start, plan, a);
  rep.position_error = (end.position - query.goal_position).norm();
  switch (query.goal_velocity.mode) {
    case GoalVelocity::Mode::Free:
      rep.velocity_checked = false;
      break;
    case GoalVelocity::Mode::Zero:
      rep.velocity_checked = true;
      rep.velocity_error = end.velocity.norm();
      break;
    case GoalVelocity::Mode::Fixed:
      rep.velocity_checked = true;
      rep.velocity_error = (end.velocity - query.goal_velocity.value).norm();
      break;
  }

  rep.max_speed = plan_max_speed(query.start, plan, a);

  State s = query.start;
  for (const Phase& ph : plan.phases) {
    if (ph.kind == PhaseKind::Cruise &&
        std::abs(s.velocity.norm() - vm) > tol * vm) {
      rep.cruise_speed_ok = false;
    }
    s = advance(s, ph, a, ph.duration);
  }

  double sum = 0.0;
  for (const Phase& ph : plan.phases) sum += ph.duration;
  rep.time_consistent = (sum == plan.total_time);

  const double pos_scale = std::max(1.0, (query.goal_position - query.start.position).norm());
  rep.pass = rep.position_error <= tol * pos_scale &&
             (!rep.velocity_checked || rep.velocity_error <= tol * vm) &&
             rep.max_speed <= vm * (1.0 + tol) && rep.cruise_speed_ok &&
             rep.time_consistent;
  return rep;
}

}  // namespace l2plan
