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

#ifndef L2PLAN_SVG_HPP
#define L2PLAN_SVG_HPP

#include <string>
#include <vector>

#include "l2plan/io.hpp"

namespace l2plan {

// Three stacked 900x300 panels (position, velocity, acceleration), each with
// x, y, and norm traces; the velocity and acceleration panels shade the
// region beyond the bound. SVG 1.1.
std::string trajectory_svg(const Query& query, const Plan& plan,
                           const std::vector<TrajectorySample>& samples);

}  // namespace l2plan

#endif  // L2PLAN_SVG_HPP
