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

#include "l2plan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace l2plan {

namespace {

constexpr double kPanelW = 900.0;
constexpr double kPanelH = 300.0;
constexpr double kMarginL = 60.0;
constexpr double kMarginR = 15.0;
constexpr double kMarginT = 24.0;
constexpr double kMarginB = 28.0;

struct Panel {
  std::string title;
  std::function<double(const TrajectorySample&)> fx, fy, fnorm;
  double bound = 0.0;  // 0 disables the band
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void render_panel(std::string* out, const Panel& panel,
                  const std::vector<TrajectorySample>& samples,
                  const std::vector<double>& switches, double T, double y_off) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const TrajectorySample& s : samples) {
    for (double v : {panel.fx(s), panel.fy(s), panel.fnorm(s)}) {
      lo = first ? v : std::min(lo, v);
      hi = first ? v : std::max(hi, v);
      first = false;
    }
  }
  if (panel.bound > 0.0) {
    hi = std::max(hi, panel.bound * 1.15);
    lo = std::min(lo, 0.0);
  }
  const double pad = std::max(1e-9, 0.05 * (hi - lo));
  lo -= pad;
  hi += pad;

  const double x0 = kMarginL, x1 = kPanelW - kMarginR;
  const double yb = y_off + kPanelH - kMarginB, yt = y_off + kMarginT;
  auto sx = [&](double t) { return x0 + (x1 - x0) * (T > 0.0 ? t / T : 0.0); };
  auto sy = [&](double v) { return yb - (yb - yt) * (v - lo) / (hi - lo); };

  if (panel.bound > 0.0 && panel.bound < hi) {
    *out += "<rect x=\"" + num(x0) + "\" y=\"" + num(yt) + "\" width=\"" +
            num(x1 - x0) + "\" height=\"" + num(sy(panel.bound) - yt) +
            "\" fill=\"#ffc0cb\" fill-opacity=\"0.55\"/>\n";
  }
  // axes
  *out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(yb) + "\" x2=\"" + num(x1) +
          "\" y2=\"" + num(yb) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  *out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(yt) + "\" x2=\"" + num(x0) +
          "\" y2=\"" + num(yb) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  if (lo < 0.0 && hi > 0.0) {
    *out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" + num(x1) +
            "\" y2=\"" + num(sy(0)) + "\" stroke=\"#bbb\" stroke-width=\"0.7\"/>\n";
  }
  for (double t : switches) {
    *out += "<line x1=\"" + num(sx(t)) + "\" y1=\"" + num(yt) + "\" x2=\"" +
            num(sx(t)) + "\" y2=\"" + num(yb) +
            "\" stroke=\"#888\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\"/>\n";
  }

  const char* colors[3] = {"#1f77e0", "#ff8c00", "#7d26cd"};
  const std::function<double(const TrajectorySample&)>* fns[3] = {&panel.fx, &panel.fy,
                                                                  &panel.fnorm};
  for (int i = 0; i < 3; ++i) {
    *out += "<polyline fill=\"none\" stroke=\"";
    *out += colors[i];
    *out += "\" stroke-width=\"1.6\" points=\"";
    for (const TrajectorySample& s : samples) {
      *out += num(sx(s.t)) + "," + num(sy((*fns[i])(s))) + " ";
    }
    *out += "\"/>\n";
  }

  *out += "<text x=\"" + num(x0) + "\" y=\"" + num(yt - 8.0) +
          "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\">" +
          panel.title + "</text>\n";
  *out += "<text x=\"" + num(x0 - 6.0) + "\" y=\"" + num(yb) +
          "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\" "
          "text-anchor=\"end\">" + num(lo + pad) + "</text>\n";
  *out += "<text x=\"" + num(x0 - 6.0) + "\" y=\"" + num(yt + 4.0) +
          "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\" "
          "text-anchor=\"end\">" + num(hi - pad) + "</text>\n";
  *out += "<text x=\"" + num(x1) + "\" y=\"" + num(yb + 16.0) +
          "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\" "
          "text-anchor=\"end\">t = " + num(T) + " s</text>\n";
}

}  // namespace

std::string trajectory_svg(const Query& query, const Plan& plan,
                           const std::vector<TrajectorySample>& samples) {
  const double T = plan.total_time;
  std::vector<double> switches;
  double acc = 0.0;
  for (size_t i = 0; i + 1 < plan.phases.size(); ++i) {
    acc += plan.phases[i].duration;
    switches.push_back(acc);
  }

  Panel panels[3] = {
      {"position [m]   x / y / |p|",
       [](const TrajectorySample& s) { return s.position.x(); },
       [](const TrajectorySample& s) { return s.position.y(); },
       [](const TrajectorySample& s) { return s.position.norm(); }, 0.0},
      {"velocity [m/s]   x / y / |v|",
       [](const TrajectorySample& s) { return s.velocity.x(); },
       [](const TrajectorySample& s) { return s.velocity.y(); },
       [](const TrajectorySample& s) { return s.velocity.norm(); },
       query.limits.v_max},
      {"acceleration [m/s^2]   x / y / |u|",
       [](const TrajectorySample& s) { return s.accel.x(); },
       [](const TrajectorySample& s) { return s.accel.y(); },
       [](const TrajectorySample& s) { return s.accel.norm(); },
       query.limits.a_max},
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(kPanelW) + "\" height=\"" + num(3 * kPanelH) + "\" viewBox=\"0 0 " +
         num(kPanelW) + " " + num(3 * kPanelH) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int i = 0; i < 3; ++i) {
    render_panel(&out, panels[i], samples, switches, T, i * kPanelH);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace l2plan
