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

#include "l2plan/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace l2plan {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

Vec2 vec2_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string(field) + " must be a [x, y] number pair");
  }
  return Vec2(j[0].get<double>(), j[1].get<double>());
}

json vec2_to_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

}  // namespace

QueryRecord query_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("query must be a JSON object");
  static const std::set<std::string> allowed = {"p0", "v0", "pG", "vG",
                                                "a_m", "v_m", "id"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) {
      throw std::invalid_argument("unknown query field: " + key);
    }
  }
  for (const char* req : {"p0", "v0", "pG", "vG", "a_m", "v_m"}) {
    if (!j.contains(req)) {
      throw std::invalid_argument(std::string("missing query field: ") + req);
    }
  }

  QueryRecord rec;
  rec.query.start.position = vec2_from_json(j.at("p0"), "p0");
  rec.query.start.velocity = vec2_from_json(j.at("v0"), "v0");
  rec.query.goal_position = vec2_from_json(j.at("pG"), "pG");
  const json& vg = j.at("vG");
  if (vg.is_string()) {
    const std::string mode = vg.get<std::string>();
    if (mode == "zero") {
      rec.query.goal_velocity = GoalVelocity::zero();
    } else if (mode == "free") {
      rec.query.goal_velocity = GoalVelocity::free();
    } else {
      throw std::invalid_argument("vG must be [x, y], \"zero\", or \"free\"");
    }
  } else {
    rec.query.goal_velocity = GoalVelocity::fixed(vec2_from_json(vg, "vG"));
  }
  if (!j.at("a_m").is_number() || !j.at("v_m").is_number()) {
    throw std::invalid_argument("a_m and v_m must be numbers");
  }
  rec.query.limits.a_max = j.at("a_m").get<double>();
  rec.query.limits.v_max = j.at("v_m").get<double>();
  if (j.contains("id")) {
    if (!j.at("id").is_string()) throw std::invalid_argument("id must be a string");
    rec.id = j.at("id").get<std::string>();
  }
  return rec;
}

json query_to_json(const Query& query, const std::string& id) {
  json j;
  if (!id.empty()) j["id"] = id;
  j["p0"] = vec2_to_json(query.start.position);
  j["v0"] = vec2_to_json(query.start.velocity);
  j["pG"] = vec2_to_json(query.goal_position);
  switch (query.goal_velocity.mode) {
    case GoalVelocity::Mode::Free: j["vG"] = "free"; break;
    case GoalVelocity::Mode::Zero: j["vG"] = "zero"; break;
    case GoalVelocity::Mode::Fixed: j["vG"] = vec2_to_json(query.goal_velocity.value); break;
  }
  j["a_m"] = query.limits.a_max;
  j["v_m"] = query.limits.v_max;
  return j;
}

std::vector<QueryRecord> parse_query_file(const std::string& text) {
  const json j = json::parse(text);  // throws json::parse_error
  std::vector<QueryRecord> out;
  if (j.is_array()) {
    for (const json& item : j) out.push_back(query_from_json(item));
  } else {
    out.push_back(query_from_json(j));
  }
  return out;
}

json plan_to_json(const QueryRecord& rec, const Plan& plan,
                  const ValidationReport& report) {
  json j;
  if (!rec.id.empty()) j["id"] = rec.id;
  j["query"] = query_to_json(rec.query);
  j["case"] = to_string(plan.case_tag);
  j["total_time"] = plan.total_time;
  json phases = json::array();
  for (const Phase& ph : plan.phases) {
    json p;
    p["type"] = ph.kind == PhaseKind::Thrust ? "thrust" : "cruise";
    if (ph.kind == PhaseKind::Thrust) p["theta"] = ph.theta;
    p["duration"] = ph.duration;
    phases.push_back(p);
  }
  j["phases"] = phases;
  const State end = simulate(rec.query.start, plan, rec.query.limits.a_max);
  j["terminal"]["position"] = vec2_to_json(end.position);
  j["terminal"]["velocity"] = vec2_to_json(end.velocity);
  json v;
  v["position_error"] = report.position_error;
  if (report.velocity_checked) v["velocity_error"] = report.velocity_error;
  v["max_speed"] = report.max_speed;
  v["cruise_speed_ok"] = report.cruise_speed_ok;
  v["pass"] = report.pass;
  j["validation"] = v;
  return j;
}

PlanRecord plan_record_from_json(const json& j) {
  PlanRecord rec;
  rec.query = query_from_json(j.at("query"));
  std::vector<Phase> phases;
  for (const json& p : j.at("phases")) {
    const std::string type = p.at("type").get<std::string>();
    if (type == "thrust") {
      phases.push_back(Phase::thrust(p.at("theta").get<double>(),
                                     p.at("duration").get<double>()));
    } else if (type == "cruise") {
      phases.push_back(Phase::cruise(p.at("duration").get<double>()));
    } else {
      throw std::invalid_argument("unknown phase type: " + type);
    }
  }
  CaseTag tag = CaseTag::Reach1D;
  const std::string case_name = j.at("case").get<std::string>();
  for (CaseTag t : {CaseTag::Reach1D, CaseTag::ReachNoCoast, CaseTag::ReachCoast,
                    CaseTag::StopBangBang, CaseTag::StopCruise,
                    CaseTag::RendezvousNoCruise, CaseTag::RendezvousCruise}) {
    if (case_name == to_string(t)) tag = t;
  }
  rec.plan = make_plan(std::move(phases), tag);
  rec.terminal.position = vec2_from_json(j.at("terminal").at("position"), "position");
  rec.terminal.velocity = vec2_from_json(j.at("terminal").at("velocity"), "velocity");
  return rec;
}

std::vector<TrajectorySample> sample_trajectory(const Query& query, const Plan& plan,
                                                double dt) {
  const double a = query.limits.a_max;
  const double T = plan.total_time;
  std::vector<double> switches;
  double acc = 0.0;
  for (const Phase& ph : plan.phases) {
    acc += ph.duration;
    switches.push_back(acc);
  }

  std::vector<double> times;
  if (dt <= 0.0) dt = T > 0.0 ? T / 1000.0 : 1.0;
  for (double t = 0.0; t < T; t += dt) times.push_back(t);
  times.push_back(T);
  times.insert(times.end(), switches.begin(), switches.end());
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [&](double x, double y) {
                            return std::abs(x - y) < 1e-15 * std::max(1.0, T);
                          }),
              times.end());

  std::vector<TrajectorySample> out;
  out.reserve(times.size());
  for (double t : times) {
    t = std::clamp(t, 0.0, T);
    // Phase owning t: [start, end), with t == T assigned to the last phase.
    size_t idx = 0;
    double start = 0.0;
    while (idx < plan.phases.size() &&
           t >= start + plan.phases[idx].duration && idx + 1 < plan.phases.size()) {
      start += plan.phases[idx].duration;
      ++idx;
    }
    State s = query.start;
    for (size_t i = 0; i < idx; ++i) s = advance(s, plan.phases[i], a, plan.phases[i].duration);
    TrajectorySample sample;
    sample.t = t;
    if (idx < plan.phases.size()) {
      s = advance(s, plan.phases[idx], a, t - start);
      sample.accel = phase_accel(plan.phases[idx], a);
    }
    sample.position = s.position;
    sample.velocity = s.velocity;
    out.push_back(sample);
  }
  return out;
}

std::string trajectory_csv(const std::vector<TrajectorySample>& samples) {
  std::string out = "t,px,py,vx,vy,ux,uy,speed,accel\r\n";
  for (const TrajectorySample& s : samples) {
    out += format_double(s.t);
    for (double v : {s.position.x(), s.position.y(), s.velocity.x(), s.velocity.y(),
                     s.accel.x(), s.accel.y(), s.velocity.norm(), s.accel.norm()}) {
      out += ',';
      out += format_double(v);
    }
    out += "\r\n";
  }
  return out;
}

}  // namespace l2plan
