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

#ifndef L2PLAN_TYPES_HPP
#define L2PLAN_TYPES_HPP

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace l2plan {

using Vec2 = Eigen::Vector2d;

// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * M_PI);
  if (w <= -M_PI) w = M_PI;
  return w;
}

// Angle of a 2-vector, atan2 convention, in (-pi, pi].
inline double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

inline Vec2 unit_dir(double theta) { return Vec2(std::cos(theta), std::sin(theta)); }

// Planar kinematic state.
struct State {
  Vec2 position{0.0, 0.0};   // [m]
  Vec2 velocity{0.0, 0.0};   // [m/s]
};

// Scalar L2 bounds on acceleration and speed.
struct Limits {
  double a_max = 1.0;  // [m/s^2], > 0
  double v_max = 1.0;  // [m/s],   > 0
};

enum class PhaseKind { Thrust, Cruise };

// One segment of a control plan: constant thrust of magnitude a_max at a
// fixed angle, or an unpowered cruise. A cruise is only meaningful when the
// entering speed equals v_max.
struct Phase {
  PhaseKind kind = PhaseKind::Thrust;
  double theta = 0.0;     // thrust angle [rad], wrapped to (-pi, pi]
  double duration = 0.0;  // [s], >= 0

  static Phase thrust(double theta, double duration) {
    return Phase{PhaseKind::Thrust, wrap_angle(theta), duration};
  }
  static Phase cruise(double duration) {
    return Phase{PhaseKind::Cruise, 0.0, duration};
  }
};

enum class CaseTag {
  Reach1D,
  ReachNoCoast,
  ReachCoast,
  StopBangBang,
  StopCruise,
  RendezvousNoCruise,
  RendezvousCruise,
};

const char* to_string(CaseTag tag);

// An executable plan: at most thrust/cruise/thrust.
struct Plan {
  std::vector<Phase> phases;
  double total_time = 0.0;  // always the exact sum of phase durations
  CaseTag case_tag = CaseTag::Reach1D;
};

inline Plan make_plan(std::vector<Phase> phases, CaseTag tag) {
  Plan p;
  p.phases = std::move(phases);
  p.total_time = std::accumulate(p.phases.begin(), p.phases.end(), 0.0,
                                 [](double s, const Phase& ph) { return s + ph.duration; });
  p.case_tag = tag;
  return p;
}

// Terminal velocity specification of a query.
struct GoalVelocity {
  enum class Mode { Free, Zero, Fixed };
  Mode mode = Mode::Free;
  Vec2 value{0.0, 0.0};  // used when mode == Fixed

  static GoalVelocity free() { return {}; }
  static GoalVelocity zero() { return {Mode::Zero, Vec2::Zero()}; }
  static GoalVelocity fixed(const Vec2& v) { return {Mode::Fixed, v}; }
};

struct Query {
  State start;
  Vec2 goal_position{0.0, 0.0};
  GoalVelocity goal_velocity;
  Limits limits;
};

struct SolverConfig {
  double e_min = 1e-12;         // accepted terminal residual for numeric solves
  double real_root_tol = 1e-9;  // relative imaginary-part tolerance for real roots
  int max_vdc_samples = 128;    // Van der Corput budget for the cruise fixed point
  int newton_max_iters = 100;
};

enum class SolverErrorCode {
  NoRoot,
  NoValidRoot,
  NoSolution,
  NoConvergence,
  NegativeCruise,
  DegeneratePolynomial,
  NoSync,
};

class SolverError : public std::runtime_error {
 public:
  SolverError(SolverErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  SolverErrorCode code() const { return code_; }

 private:
  SolverErrorCode code_;
};

}  // namespace l2plan

#endif  // L2PLAN_TYPES_HPP
