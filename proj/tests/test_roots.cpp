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

#include <algorithm>
#include <random>

#include "l2plan/roots.hpp"

using namespace l2plan;

TEST_CASE("real_roots: quadratic") {
  const auto roots = real_roots(Polynomial{-1.0, 0.0, 1.0}, 1e-9);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(-1.0));
  CHECK(roots[1] == doctest::Approx(1.0));
}

TEST_CASE("real_roots: multiplicity collapses, complex pair discarded") {
  // (x-2)^3 (x^2+1) = x^5 - 6x^4 + 13x^3 - 14x^2 + 12x - 8
  const auto roots = real_roots(Polynomial{-8.0, 12.0, -14.0, 13.0, -6.0, 1.0}, 1e-6);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("real_roots: degenerate polynomial throws") {
  CHECK_THROWS_AS(Polynomial({0.0, 0.0, 0.0}), SolverError);
  CHECK_THROWS_AS(real_roots(Polynomial{3.0}, 1e-9), SolverError);
}

TEST_CASE("real_roots: trailing near-zero coefficients are trimmed") {
  // effectively linear
  const Polynomial p{2.0, -1.0, 1e-20};
  CHECK(p.degree() == 1);
  const auto roots = real_roots(p, 1e-9);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == doctest::Approx(2.0));
}

TEST_CASE("real_roots: constructed polynomials recover their real roots") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int trial = 0; trial < 300; ++trial) {
    // (x-r1)(x-r2)(x^2 + bx + c) with complex pair
    const double r1 = uni(rng), r2 = uni(rng);
    const double re = uni(rng);
    const double im = 0.3 + std::abs(uni(rng));
    const double b = -2.0 * re, c = re * re + im * im;
    // expand
    std::vector<double> quad = {r1 * r2, -(r1 + r2), 1.0};
    std::vector<double> out(5, 0.0);
    const double pair_coeffs[3] = {c, b, 1.0};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out[i + j] += quad[i] * pair_coeffs[j];
    }
    const auto roots = real_roots(Polynomial(out), 1e-9);
    REQUIRE(roots.size() == (std::abs(r1 - r2) > 1e-9 ? 2 : 1));
    std::vector<double> expect = {std::min(r1, r2), std::max(r1, r2)};
    for (double r : roots) {
      const double d = std::min(std::abs(r - expect[0]), std::abs(r - expect[1]));
      CHECK(d < 1e-7);
    }
  }
}

TEST_CASE("quartic_reach_t1: rest start, pure distance") {
  CHECK(quartic_reach_t1(Vec2(-2.0, 0.0), 0.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("quartic_reach_t1: moving start") {
  // 0.5 t^2 = 1.5 - t  =>  t^2 + 2t - 3 = 0  =>  t = 1
  CHECK(quartic_reach_t1(Vec2(-1.5, 0.0), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quartic_reach_t1 agrees with the companion-matrix route") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  std::uniform_real_distribution<double> univ(-2.0, 2.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const Vec2 p0(uni(rng), uni(rng));
    if (p0.norm() < 1e-6) continue;
    const double v = univ(rng);
    const double closed = quartic_reach_t1(p0, v);

    const auto roots = real_roots(reach_quartic(p0, v), 1e-9);
    double ref = -1.0;
    for (double r : roots) {
      if (r >= -1e-12 && (ref < 0.0 || r < ref)) ref = std::max(0.0, r);
    }
    REQUIRE(ref >= 0.0);
    CHECK(std::abs(closed - ref) < 1e-9 * std::max(1.0, ref));
  }
}

TEST_CASE("quartic_reach_t1 roots back-substitute") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  std::uniform_real_distribution<double> univ(-2.0, 2.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const Vec2 p0(uni(rng), uni(rng));
    if (p0.norm() < 1e-6) continue;
    const double v = univ(rng);
    const double r = quartic_reach_t1(p0, v);
    const Polynomial q = reach_quartic(p0, v);
    double maxc = 0.0;
    for (double c : q.coeffs()) maxc = std::max(maxc, std::abs(c));
    CHECK(std::abs(q(r)) < 1e-8 * (1.0 + maxc) * std::pow(1.0 + std::abs(r), 4));
  }
}
