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

#ifndef L2PLAN_FRAME_HPP
#define L2PLAN_FRAME_HPP

#include "l2plan/types.hpp"

namespace l2plan {

// Rigid frame used to normalize planning problems: translate so a chosen
// origin lands at (0,0), then rotate by -rotation. Solutions found in the
// local frame map back to world with angle_to_world.
struct GoalFrame {
  Vec2 origin{0.0, 0.0};
  double rotation = 0.0;  // world angle of the local +x axis

  Vec2 to_local(const Vec2& p) const {
    const Vec2 d = p - origin;
    const double c = std::cos(rotation), s = std::sin(rotation);
    return Vec2(c * d.x() + s * d.y(), -s * d.x() + c * d.y());
  }
  Vec2 vec_to_local(const Vec2& v) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    return Vec2(c * v.x() + s * v.y(), -s * v.x() + c * v.y());
  }
  double angle_to_world(double theta_local) const { return wrap_angle(theta_local + rotation); }
};

// Frame with the goal at the origin and v0 along +x (identity rotation when
// v0 vanishes).
inline GoalFrame goal_frame(const Vec2& goal, const Vec2& v0) {
  GoalFrame f;
  f.origin = goal;
  f.rotation = (v0.norm() > 0.0) ? angle_of(v0) : 0.0;
  return f;
}

}  // namespace l2plan

#endif  // L2PLAN_FRAME_HPP
