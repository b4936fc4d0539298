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

#include "l2plan/solver1d.hpp"

using namespace l2plan;

namespace {

struct Instance {
  double p0, v0, pG, vG;
  Limits limits;
};

Instance random_instance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Instance in;
  in.limits.a_max = 0.2 + 2.0 * std::abs(uni(rng));
  in.limits.v_max = 0.2 + 2.0 * std::abs(uni(rng));
  in.p0 = 5.0 * uni(rng);
  in.pG = 5.0 * uni(rng);
  in.v0 = in.limits.v_max * uni(rng);
  in.vG = in.limits.v_max * uni(rng);
  return in;
}

}  // namespace

TEST_CASE("solve_1d: triangular rest-to-rest") {
  const Profile1D p = solve_1d(0.0, 0.0, 1.0, 0.0, {1.0, 10.0});
  CHECK(p.shape == ProfileShape::Triangular);
  CHECK(p.s_p == 1);
  CHECK(p.v_peak == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.t1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.t_c == 0.0);
  CHECK(p.t2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("solve_1d: trapezoidal when the bound binds") {
  const Profile1D p = solve_1d(0.0, 0.0, 1.0, 0.0, {1.0, 0.5});
  CHECK(p.shape == ProfileShape::Trapezoidal);
  CHECK(p.t1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.t_c == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(p.t2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.total_time() == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("solve_1d: already at the goal") {
  const Profile1D p = solve_1d(2.0, 0.3, 2.0 + 0.3 * 0.0, 0.3, {1.0, 1.0});
  // same state: critical case with zero ramp
  CHECK(p.total_time() == doctest::Approx(0.0));
  CHECK(p.s_p == 0);
}

TEST_CASE("solve_1d: critical single ramp") {
  // brake from v=1 covers exactly 0.5
  const Profile1D p = solve_1d(0.0, 1.0, 0.5, 0.0, {1.0, 1.0});
  CHECK(p.t1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.t_c == 0.0);
  CHECK(p.t2 == 0.0);
  CHECK(p.s_p == -1);
}

TEST_CASE("solve_1d: forward simulation reaches the goal state") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20000; ++trial) {
    const Instance in = random_instance(rng);
    const Profile1D prof = solve_1d(in.p0, in.v0, in.pG, in.vG, in.limits);
    CHECK(prof.t1 >= -1e-12);
    CHECK(prof.t_c >= -1e-12);
    CHECK(prof.t2 >= -1e-12);
    CHECK(prof.v_peak <= in.limits.v_max * (1.0 + 1e-9));
    const auto [p, v] = simulate_1d(in.p0, in.v0, prof, in.limits.a_max);
    CHECK(std::abs(p - in.pG) < 1e-10 * std::max(1.0, std::abs(in.pG - in.p0)));
    CHECK(std::abs(v - in.vG) < 1e-10 * std::max(1.0, in.limits.v_max));
  }
}

TEST_CASE("solve_1d: total time non-increasing in a_max and v_max") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5000; ++trial) {
    const Instance in = random_instance(rng);
    const double T = solve_1d(in.p0, in.v0, in.pG, in.vG, in.limits).total_time();
    Limits more_a = in.limits;
    more_a.a_max *= 1.5;
    Limits more_v = in.limits;
    more_v.v_max *= 1.5;
    CHECK(solve_1d(in.p0, in.v0, in.pG, in.vG, more_a).total_time() <= T + 1e-9);
    CHECK(solve_1d(in.p0, in.v0, in.pG, in.vG, more_v).total_time() <= T + 1e-9);
  }
}

TEST_CASE("solve_1d: sign symmetry") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5000; ++trial) {
    const Instance in = random_instance(rng);
    const Profile1D a = solve_1d(in.p0, in.v0, in.pG, in.vG, in.limits);
    const Profile1D b = solve_1d(-in.p0, -in.v0, -in.pG, -in.vG, in.limits);
    CHECK(a.s_p == -b.s_p);
    CHECK(a.t1 == doctest::Approx(b.t1).epsilon(1e-12));
    CHECK(a.t_c == doctest::Approx(b.t_c).epsilon(1e-12));
    CHECK(a.t2 == doctest::Approx(b.t2).epsilon(1e-12));
  }
}

TEST_CASE("min_time_free_end_1d basics") {
  // accelerate 1 m from rest
  CHECK(min_time_free_end_1d(0.0, 0.0, 1.0, {1.0, 10.0}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // speed cap: 0.5 m to reach v, then coast 9.5
  CHECK(min_time_free_end_1d(0.0, 0.0, 10.0, {1.0, 1.0}) ==
        doctest::Approx(10.5).epsilon(1e-12));
  // moving away first
  const double T = min_time_free_end_1d(0.0, -0.5, 1.0, {1.0, 10.0});
  const double t_expect = (0.5 + std::sqrt(0.25 + 2.0)) / 1.0;
  CHECK(T == doctest::Approx(t_expect).epsilon(1e-12));
}

TEST_CASE("profile_for_duration: hits the requested duration and state") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int produced = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const Instance in = random_instance(rng);
    const double t_min = solve_1d(in.p0, in.v0, in.pG, in.vG, in.limits).total_time();
    const double T = t_min * (1.0 + 2.0 * uni(rng)) + 0.1 * uni(rng);
    const auto prof = profile_for_duration(in.p0, in.v0, in.pG, in.vG, in.limits, T);
    if (!prof) continue;  // inadmissible window
    ++produced;
    CHECK(prof->total_time() == doctest::Approx(T).epsilon(1e-9));
    const auto [p, v] = simulate_1d(in.p0, in.v0, *prof, in.limits.a_max);
    CHECK(std::abs(p - in.pG) < 1e-8 * std::max(1.0, std::abs(in.pG - in.p0)));
    CHECK(std::abs(v - in.vG) < 1e-8 * std::max(1.0, in.limits.v_max));
    CHECK(std::abs(prof->v_cruise) <= in.limits.v_max * (1.0 + 1e-9));
  }
  CHECK(produced > 3000);  // the vast majority of longer durations are admissible
}

TEST_CASE("profile_for_duration: refuses durations below the minimum") {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 2000; ++trial) {
    const Instance in = random_instance(rng);
    const double t_min = solve_1d(in.p0, in.v0, in.pG, in.vG, in.limits).total_time();
    if (t_min < 1e-3) continue;
    const auto prof =
        profile_for_duration(in.p0, in.v0, in.pG, in.vG, in.limits, 0.9 * t_min);
    CHECK_FALSE(prof.has_value());
  }
}

TEST_CASE("profile_for_duration: at the minimum time itself") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const Instance in = random_instance(rng);
    const double t_min = solve_1d(in.p0, in.v0, in.pG, in.vG, in.limits).total_time();
    const auto prof = profile_for_duration(in.p0, in.v0, in.pG, in.vG, in.limits, t_min);
    REQUIRE(prof.has_value());
    CHECK(prof->total_time() == doctest::Approx(t_min).epsilon(1e-9));
  }
}
