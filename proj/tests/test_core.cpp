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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "l2plan/simulate.hpp"
#include "oracles.hpp"

using namespace l2plan;

TEST_CASE("simulate: single thrust from rest") {
  State start;
  const std::vector<Phase> phases = {Phase::thrust(0.0, 1.0)};
  const State end = simulate(start, phases, 1.0);
  CHECK(end.position.x() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(end.position.y() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(end.velocity.x() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(end.velocity.y() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("simulate: thrust then cruise") {
  State start;
  const std::vector<Phase> phases = {Phase::thrust(0.0, 1.0), Phase::cruise(2.0)};
  const State end = simulate(start, phases, 1.0);
  CHECK(end.position.x() == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(end.velocity.x() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("simulate matches a fine-step integrator on random plans") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    State start;
    start.position = Vec2(uni(rng), uni(rng));
    start.velocity = Vec2(uni(rng), uni(rng));
    std::vector<Phase> phases;
    const int n = 1 + trial % 3;
    for (int i = 0; i < n; ++i) {
      if (i == 1 && trial % 2 == 0) {
        phases.push_back(Phase::cruise(0.5 + 0.5 * std::abs(uni(rng))));
      } else {
        phases.push_back(Phase::thrust(M_PI * uni(rng), 1.0 + std::abs(uni(rng))));
      }
    }
    const double a = 0.5 + std::abs(uni(rng));
    const State exact = simulate(start, phases, a);
    const State stepped = oracles::rk4_simulate(start, phases, a, 1e-5);
    CHECK((exact.position - stepped.position).norm() < 1e-8);
    CHECK((exact.velocity - stepped.velocity).norm() < 1e-8);
  }
}

TEST_CASE("plan total_time is the exact sum of durations") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(0.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Phase> phases = {Phase::thrust(1.0, uni(rng)), Phase::cruise(uni(rng)),
                                 Phase::thrust(-1.0, uni(rng))};
    const Plan plan = make_plan(phases, CaseTag::StopCruise);
    double sum = 0.0;
    for (const Phase& ph : plan.phases) sum += ph.duration;
    CHECK(plan.total_time == sum);
  }
}

TEST_CASE("validate: a consistent plan passes") {
  Query q;
  q.start.position = Vec2(0, 0);
  q.goal_position = Vec2(0.5, 0);
  q.goal_velocity = GoalVelocity::free();
  q.limits = {1.0, 10.0};
  const Plan plan = make_plan({Phase::thrust(0.0, 1.0)}, CaseTag::ReachNoCoast);
  const ValidationReport rep = validate(plan, q, 1e-9);
  CHECK(rep.pass);
  CHECK(rep.position_error < 1e-12);
}

TEST_CASE("validate: cruise below v_max is flagged") {
  Query q;
  q.start.position = Vec2(0, 0);
  q.start.velocity = Vec2(0.5, 0);  // half of v_max
  q.goal_position = Vec2(1.0, 0);
  q.goal_velocity = GoalVelocity::free();
  q.limits = {1.0, 1.0};
  const Plan plan = make_plan({Phase::cruise(2.0)}, CaseTag::ReachCoast);
  const ValidationReport rep = validate(plan, q, 1e-9);
  CHECK_FALSE(rep.cruise_speed_ok);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("validate: opposing thrust keeps max speed at the endpoints") {
  // Speed decreases to zero then recovers to 1: the maximum stays 1.
  Query q;
  q.start.velocity = Vec2(1.0, 0);
  q.goal_position = Vec2(0, 0);
  q.goal_velocity = GoalVelocity::free();
  q.limits = {1.0, 10.0};
  const Plan plan = make_plan({Phase::thrust(M_PI, 2.0)}, CaseTag::ReachNoCoast);
  const double max_speed = plan_max_speed(q.start, plan, 1.0);
  CHECK(max_speed == doctest::Approx(1.0).epsilon(1e-12));

  // dense sampling agrees
  double dense = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = 2.0 * i / 20000;
    dense = std::max(dense, advance(q.start, plan.phases[0], 1.0, t).velocity.norm());
  }
  CHECK(max_speed == doctest::Approx(dense).epsilon(1e-9));
}

TEST_CASE("phase speed extrema vs dense sampling on random phases") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    State s;
    s.velocity = Vec2(uni(rng), uni(rng));
    const Phase ph = Phase::thrust(M_PI * uni(rng), 0.5 + std::abs(uni(rng)));
    const double a = 0.5 + std::abs(uni(rng));
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i <= 4000; ++i) {
      const double t = ph.duration * i / 4000;
      const double sp = advance(s, ph, a, t).velocity.norm();
      lo = std::min(lo, sp);
      hi = std::max(hi, sp);
    }
    CHECK(phase_max_speed(s, ph, a) == doctest::Approx(hi).epsilon(1e-6));
    CHECK(phase_min_speed(s, ph, a) == doctest::Approx(lo).epsilon(2e-4));
  }
}

TEST_CASE("arc length: straight line and quarter-turn sanity") {
  State s;
  const Plan straight = make_plan({Phase::thrust(0.0, 2.0)}, CaseTag::ReachNoCoast);
  CHECK(plan_arc_length(s, straight, 1.0) == doctest::Approx(2.0).epsilon(1e-12));

  // numeric cross-check on a curved phase
  State s2;
  s2.velocity = Vec2(0.0, 1.0);
  const Plan curved = make_plan({Phase::thrust(0.0, 1.5)}, CaseTag::ReachNoCoast);
  double num = 0.0;
  Vec2 prev = s2.position;
  for (int i = 1; i <= 200000; ++i) {
    const double t = 1.5 * i / 200000;
    const Vec2 p = advance(s2, curved.phases[0], 1.0, t).position;
    num += (p - prev).norm();
    prev = p;
  }
  CHECK(plan_arc_length(s2, curved, 1.0) == doctest::Approx(num).epsilon(1e-7));
}

TEST_CASE("wrap_angle lands in (-pi, pi]") {
  CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(0.1 + 4.0 * M_PI) == doctest::Approx(0.1));
}
