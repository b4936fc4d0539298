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

#include "l2plan/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace l2plan {

Polynomial::Polynomial(std::vector<double> c) : coeffs_(std::move(c)) {
  if (coeffs_.empty()) {
    throw SolverError(SolverErrorCode::DegeneratePolynomial, "empty coefficient list");
  }
  double maxc = 0.0;
  for (double v : coeffs_) maxc = std::max(maxc, std::abs(v));
  if (maxc == 0.0) {
    throw SolverError(SolverErrorCode::DegeneratePolynomial, "all coefficients zero");
  }
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) < 1e-14 * maxc) {
    coeffs_.pop_back();
  }
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

void solve_low_degree(const std::vector<double>& c, std::vector<double>* out) {
  if (c.size() == 2) {
    out->push_back(-c[0] / c[1]);
    return;
  }
  // quadratic, numerically stable form
  const double a = c[2], b = c[1], k = c[0];
  const double disc = b * b - 4.0 * a * k;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(sq, b));
  if (q != 0.0) {
    out->push_back(q / a);
    out->push_back(k / q);
  } else {
    out->push_back(0.0);
    out->push_back(0.0);
  }
}

}  // namespace

std::vector<double> real_roots(const Polynomial& poly, double tol) {
  const std::vector<double>& c = poly.coeffs();
  const int n = poly.degree();
  if (n < 1) {
    throw SolverError(SolverErrorCode::DegeneratePolynomial, "constant polynomial has no roots");
  }

  std::vector<double> roots;
  if (n <= 2) {
    solve_low_degree(c, &roots);
  } else {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    for (int i = 0; i < n; ++i) {
      const auto ev = es.eigenvalues()[i];
      if (std::abs(ev.imag()) < tol * std::max(1.0, std::abs(ev.real()))) {
        roots.push_back(ev.real());
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> dedup;
  for (double r : roots) {
    if (dedup.empty() || r - dedup.back() > tol) dedup.push_back(r);
  }
  return dedup;
}

Polynomial reach_quartic(const Vec2& p0, double v0x) {
  const double rho2 = p0.squaredNorm();
  return Polynomial{-4.0 * rho2, -8.0 * p0.x() * v0x, -4.0 * v0x * v0x, 0.0, 1.0};
}

namespace {

// Closed-form smallest nonnegative root; NaN when the nested radicals are
// out of their real domain or too ill conditioned to trust.
double quartic_reach_closed_form(const Vec2& p0, double v0x) {
  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
  const double px = p0.x(), py = p0.y(), v = v0x;
  const double rho2 = px * px + py * py;

  const double inner = 12.0 * rho2 * rho2 * rho2 -
                       3.0 * (std::pow(px, 4) + 20.0 * px * px * py * py - 8.0 * std::pow(py, 4)) *
                           std::pow(v, 4) +
                       12.0 * py * py * std::pow(v, 8);
  if (inner < 0.0) return kNan;  // three-real-root regime of the resolvent cubic

  const double lin = 9.0 * (px * px - 2.0 * py * py) * v * v - 2.0 * std::pow(v, 6);
  const double rad = 3.0 * std::sqrt(inner);
  // Pick the cube-root branch that avoids cancellation; the combination
  // 2^(2/3) c1 - c2/c1 is branch independent.
  const double c1 = std::cbrt(lin >= 0.0 ? lin + rad : lin - rad);
  if (std::abs(c1) < 1e-12) return kNan;
  const double c2 = std::pow(2.0, 4.0 / 3.0) * (3.0 * rho2 - std::pow(v, 4));

  const double t_ratio = c2 / c1;
  const double t_cbrt = std::pow(2.0, 2.0 / 3.0) * c1;
  const double z6 = 4.0 * v * v - t_ratio + t_cbrt;  // 6 c4^2
  const double z_scale = 4.0 * v * v + std::abs(t_ratio) + std::abs(t_cbrt);
  if (z6 < 1e-6 * z_scale) return kNan;  // alpha ~ 0, cancellation-dominated
  const double c4 = std::sqrt(z6 / 6.0);

  const double d_common = (8.0 * v * v + t_ratio - t_cbrt) / 6.0;
  const double d_cross = 2.0 * px * v / c4;
  double best = kNan;
  auto consider = [&](double t) {
    if (t >= -1e-12 && (!(best == best) || t < best)) best = std::max(0.0, t);
  };
  const double dp = d_common + d_cross;  // pairs with +c4
  if (dp >= 0.0) {
    const double s = std::sqrt(dp);
    consider(c4 + s);
    consider(c4 - s);
  }
  const double dm = d_common - d_cross;  // pairs with -c4
  if (dm >= 0.0) {
    const double s = std::sqrt(dm);
    consider(-c4 + s);
    consider(-c4 - s);
  }
  if (!(best == best)) return kNan;

  // Residual acceptance against the expanded quartic.
  const double r = best;
  const double pr = ((r * r - 4.0 * v * v) * r - 8.0 * px * v) * r - 4.0 * rho2;
  const double max_c = std::max({4.0 * rho2, std::abs(8.0 * px * v), 4.0 * v * v, 1.0});
  const double scale = (1.0 + max_c) * std::pow(1.0 + std::abs(r), 4);
  if (std::abs(pr) > 2e-11 * scale) return kNan;
  return r;
}

}  // namespace

double quartic_reach_t1(const Vec2& p0_tilde, double v0x_tilde) {
  const double closed = quartic_reach_closed_form(p0_tilde, v0x_tilde);
  if (closed == closed) return closed;

  const std::vector<double> roots = real_roots(reach_quartic(p0_tilde, v0x_tilde), 1e-9);
  double best = std::numeric_limits<double>::quiet_NaN();
  for (double r : roots) {
    if (r >= -1e-12 && (!(best == best) || r < best)) best = std::max(0.0, r);
  }
  if (!(best == best)) {
    throw SolverError(SolverErrorCode::NoRoot, "reach quartic has no nonnegative real root");
  }
  return best;
}

}  // namespace l2plan
