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

#ifndef L2PLAN_ROOTS_HPP
#define L2PLAN_ROOTS_HPP

#include <initializer_list>
#include <vector>

#include "l2plan/types.hpp"

namespace l2plan {

// Dense polynomial, coefficients ascending in degree, degree <= 6.
// Trailing coefficients below 1e-14 * max|c| are trimmed at construction.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> ascending_coeffs);
  Polynomial(std::initializer_list<double> ascending_coeffs)
      : Polynomial(std::vector<double>(ascending_coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double operator()(double x) const;  // Horner evaluation

 private:
  std::vector<double> coeffs_;
};

// All real roots, ascending, deduplicated at spacing tol. A root is real
// when |imag| < tol * max(1, |real|). Companion-matrix eigenvalues;
// deterministic for fixed input. Throws DegeneratePolynomial when every
// coefficient vanishes.
std::vector<double> real_roots(const Polynomial& poly, double tol);

// Smallest nonnegative real root of the position-reach quartic
//   (t^2/2)^2 = (p0x + v0x t)^2 + p0y^2
// in goal-at-origin coordinates scaled by 1/a_max and rotated so v0y = 0.
// Uses the nested-radical closed form when it is well conditioned, the
// companion matrix otherwise. Throws NoRoot on total failure.
double quartic_reach_t1(const Vec2& p0_tilde, double v0x_tilde);

// The expanded quartic above, for cross-checks and the fallback path.
Polynomial reach_quartic(const Vec2& p0_tilde, double v0x_tilde);

}  // namespace l2plan

#endif  // L2PLAN_ROOTS_HPP
