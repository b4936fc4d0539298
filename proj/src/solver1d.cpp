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

#include "l2plan/solver1d.hpp"

#include <algorithm>
#include <cmath>

namespace l2plan {

namespace {
int sgn(double x) { return (x > 0.0) - (x < 0.0); }
}  // namespace

Profile1D solve_1d(double p0, double v0, double pG, double vG, const Limits& limits) {
  const double a = limits.a_max;
  const double vm = limits.v_max;
  const double D = pG - p0;

  const int s_v = sgn(vG - v0);
  const double dp_c = s_v * (vG * vG - v0 * v0) / (2.0 * a);
  const int s_p = sgn(D - dp_c);

  Profile1D prof;
  if (s_p == 0) {
    // Critical displacement: a single ramp from v0 to vG covers D exactly.
    prof.s_p = s_v;
    prof.s_f = -s_v;
    prof.t1 = std::abs(vG - v0) / a;
    prof.v_peak = std::max(std::abs(v0), std::abs(vG));
    prof.v_cruise = 0.0;
    prof.shape = ProfileShape::Triangular;
    return prof;
  }

  const double vp = std::sqrt(s_p * D * a + 0.5 * (vG * vG + v0 * v0));
  prof.s_p = s_p;
  prof.s_f = -s_p;
  if (vp <= vm) {
    prof.t1 = (vp - s_p * v0) / a;
    prof.t2 = (vp - s_p * vG) / a;
    prof.v_peak = vp;
    prof.v_cruise = s_p * vp;
    prof.shape = ProfileShape::Triangular;
  } else {
    prof.t1 = (vm - s_p * v0) / a;
    prof.t_c = (2.0 * s_p * a * D + v0 * v0 + vG * vG - 2.0 * vm * vm) / (2.0 * a * vm);
    prof.t2 = (vm - s_p * vG) / a;
    prof.v_peak = vm;
    prof.v_cruise = s_p * vm;
    prof.shape = ProfileShape::Trapezoidal;
  }
  return prof;
}

std::pair<double, double> simulate_1d(double p0, double v0, const Profile1D& prof,
                                      double a_max) {
  double p = p0, v = v0;
  const double acc[3] = {prof.s_p * a_max, 0.0, prof.s_f * a_max};
  const double dur[3] = {prof.t1, prof.t_c, prof.t2};
  for (int i = 0; i < 3; ++i) {
    p += v * dur[i] + 0.5 * acc[i] * dur[i] * dur[i];
    v += acc[i] * dur[i];
  }
  return {p, v};
}

double min_time_free_end_1d(double p0, double v0, double pG, const Limits& limits) {
  const double a = limits.a_max;
  const double vm = limits.v_max;
  const double dist = std::abs(pG - p0);
  if (dist == 0.0) return 0.0;
  const double u0 = sgn(pG - p0) * v0;  // signed speed toward the goal
  const double t_hit = (-u0 + std::sqrt(u0 * u0 + 2.0 * a * dist)) / a;
  if (u0 + a * t_hit <= vm) return t_hit;
  const double t1 = (vm - u0) / a;
  const double covered = (vm * vm - u0 * u0) / (2.0 * a);
  return t1 + (dist - covered) / vm;
}

namespace {

struct Candidate {
  double t1, t2, t3, w;
};

// Duration of the cruise-velocity-w profile, or < 0 when the cruise
// segment would run backwards.
double duration_at(double p0, double v0, double pG, double vG, double a, double w,
                   Candidate* cand) {
  const double t1 = std::abs(w - v0) / a;
  const double t3 = std::abs(vG - w) / a;
  const double d1 = 0.5 * (v0 + w) * t1;
  const double d3 = 0.5 * (w + vG) * t3;
  const double rem = (pG - p0) - d1 - d3;
  const double t2 = rem / w;
  if (t2 < 0.0) return -1.0;
  if (cand) *cand = {t1, t2, t3, w};
  return t1 + t2 + t3;
}

Profile1D make_profile(double v0, double vG, const Candidate& c) {
  Profile1D prof;
  prof.s_p = sgn(c.w - v0);
  prof.s_f = sgn(vG - c.w);
  prof.t1 = c.t1;
  prof.t_c = c.t2;
  prof.t2 = c.t3;
  prof.v_cruise = c.w;
  prof.v_peak = std::max({std::abs(v0), std::abs(vG), std::abs(c.w)});
  prof.shape = c.t2 > 0.0 ? ProfileShape::Trapezoidal : ProfileShape::Triangular;
  return prof;
}

}  // namespace

std::optional<Profile1D> profile_for_duration(double p0, double v0, double pG, double vG,
                                              const Limits& limits, double T) {
  const double a = limits.a_max;
  const double vm = limits.v_max;
  const double time_tol = 1e-12 * std::max(1.0, T);

  // Degenerate axis: rest-to-rest in place can wait for any duration.
  const double ramp = std::abs(vG - v0) / a;
  if (std::abs(v0) < 1e-15 && std::abs(vG) < 1e-15 &&
      std::abs(pG - p0) < 1e-15 && T >= -time_tol) {
    Profile1D prof;
    prof.t_c = T;
    return prof;
  }
  if (T < ramp - time_tol) return std::nullopt;

  // The minimal-time profile itself, for targets at the feasibility boundary
  // where the duration-vs-cruise-velocity curve only touches T.
  {
    Profile1D opt = solve_1d(p0, v0, pG, vG, limits);
    const double dT = T - opt.total_time();
    if (std::abs(dT) <= 1e-9 * std::max(1.0, T)) {
      if (opt.t_c > 0.0 && opt.t_c + dT >= 0.0) opt.t_c += dT;
      return opt;
    }
  }

  constexpr int kGrid = 4096;
  const double w_eps = 1e-9 * vm;
  double prev_w = 0.0, prev_f = 0.0;
  bool prev_ok = false;
  for (int i = 0; i <= kGrid; ++i) {
    const double w = -vm + 2.0 * vm * i / kGrid;
    if (std::abs(w) < w_eps) {
      prev_ok = false;
      continue;
    }
    Candidate cand;
    const double dur = duration_at(p0, v0, pG, vG, a, w, &cand);
    const bool ok = dur >= 0.0;
    const double f = dur - T;
    if (ok && std::abs(f) <= time_tol) return make_profile(v0, vG, cand);
    if (ok && prev_ok && f * prev_f < 0.0) {
      double lo = prev_w, hi = w, flo = prev_f;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = duration_at(p0, v0, pG, vG, a, mid, nullptr) - T;
        if (fm == 0.0) { lo = hi = mid; break; }
        if (fm * flo < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-17 * std::max(1.0, std::abs(lo))) break;
      }
      Candidate best;
      const double dur2 = duration_at(p0, v0, pG, vG, a, 0.5 * (lo + hi), &best);
      if (dur2 >= 0.0 && std::abs(dur2 - T) <= 1e-9 * std::max(1.0, T)) {
        // Absorb the leftover into the cruise segment so the duration is exact.
        best.t2 += T - dur2;
        if (best.t2 >= 0.0) return make_profile(v0, vG, best);
      }
    }
    prev_w = w;
    prev_f = f;
    prev_ok = ok;
  }
  return std::nullopt;
}

}  // namespace l2plan
