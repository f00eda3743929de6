// Copyright 2026 The hcn-offload Authors
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

#include "hcn/scenario.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hcn {

namespace {

using nlohmann::json;

constexpr double kDefaultMacroRadius = 1000.0;
constexpr double kDefaultMacroBandwidth = 10e6;
constexpr double kDefaultSmallBandwidth = 5e6;
constexpr double kDefaultDistToMbs = 600.0;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void RequireObject(const json& j, const std::string& path) {
  if (!j.is_object()) throw ScenarioError(path, "expected an object");
}

void RejectUnknown(const json& j, const std::string& path,
                   std::initializer_list<std::string_view> known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      throw ScenarioError(Join(path, it.key()), "unknown key");
    }
  }
}

std::optional<double> OptNumber(const json& j, const std::string& path,
                                std::string_view key) {
  auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  if (!it->is_number()) {
    throw ScenarioError(Join(path, key), "expected a number");
  }
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ScenarioError(Join(path, key), "not finite");
  return v;
}

double Number(const json& j, const std::string& path, std::string_view key) {
  const std::optional<double> v = OptNumber(j, path, key);
  if (!v) throw ScenarioError(Join(path, key), "missing required number");
  return *v;
}

std::optional<std::string> OptString(const json& j, const std::string& path,
                                     std::string_view key) {
  auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  if (!it->is_string()) {
    throw ScenarioError(Join(path, key), "expected a string");
  }
  return it->get<std::string>();
}

BsPowerParams ParsePower(const json& j, const std::string& path,
                         std::string_view fallback, double bandwidth) {
  auto it = j.find("power");
  const std::string p = Join(path, "power");
  if (it == j.end() || it->is_string()) {
    const std::string name =
        it == j.end() ? std::string(fallback) : it->get<std::string>();
    if (name == "macro") return MacroPowerParams(bandwidth);
    if (name == "micro") return MicroPowerParams(bandwidth);
    if (name == "pico") return PicoPowerParams(bandwidth);
    if (name == "femto") return FemtoPowerParams(bandwidth);
    throw ScenarioError(p, "unknown preset '" + name +
                               "' (expected macro, micro, pico or femto)");
  }
  RequireObject(*it, p);
  RejectUnknown(*it, p, {"p_tx", "p_const", "beta"});
  BsPowerParams out;
  out.p_tx = Number(*it, p, "p_tx");
  out.p_const = Number(*it, p, "p_const");
  out.beta = Number(*it, p, "beta");
  out.bandwidth = bandwidth;
  return out;
}

SbsKind ParseKind(const json& j, const std::string& path) {
  const std::optional<std::string> kind = OptString(j, path, "kind");
  if (!kind) throw ScenarioError(Join(path, "kind"), "missing cell kind");
  if (*kind == "conventional" || *kind == "csbs") return SbsKind::kConventional;
  if (*kind == "renewable" || *kind == "rsbs") return SbsKind::kRenewable;
  if (*kind == "hybrid" || *kind == "hsbs") return SbsKind::kHybrid;
  throw ScenarioError(Join(path, "kind"),
                      "unknown kind '" + *kind +
                          "' (expected conventional, renewable or hybrid)");
}

DailyProfiles ParseProfiles(const json& j, const std::string& base_dir) {
  const std::string path = "profiles";
  RequireObject(j, path);
  RejectUnknown(j, path,
                {"kind", "periods", "csv", "traffic_peak", "energy_peak"});
  const std::optional<std::string> kind = OptString(j, path, "kind");
  const std::optional<std::string> csv = OptString(j, path, "csv");
  if (kind && csv) {
    throw ScenarioError(path, "give either 'kind' or 'csv', not both");
  }
  DailyProfiles out;
  if (csv) {
    std::filesystem::path p(*csv);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    out = load_profiles_csv(p.string());
  } else {
    const std::string k = kind.value_or("sunny");
    const std::optional<ProfileKind> pk = ParseProfileKind(k);
    if (!pk) {
      throw ScenarioError(Join(path, "kind"),
                          "unknown profile kind '" + k +
                              "' (expected sunny or cloudy)");
    }
    const double periods = OptNumber(j, path, "periods").value_or(24.0);
    if (periods < 2 || periods != std::floor(periods) || periods > 1e6) {
      throw ScenarioError(Join(path, "periods"), "must be an integer >= 2");
    }
    out = synthetic_profiles(*pk, static_cast<int>(periods));
  }
  if (auto v = OptNumber(j, path, "traffic_peak")) {
    if (*v < 0.0) throw ScenarioError(Join(path, "traffic_peak"), "must be >= 0");
    out.traffic_peak = *v;
  }
  if (auto v = OptNumber(j, path, "energy_peak")) {
    if (*v < 0.0) throw ScenarioError(Join(path, "energy_peak"), "must be >= 0");
    out.energy_peak = *v;
  }
  return out;
}

double Shape(double x) { return std::clamp(x, 0.0, 1.0); }

void NormalizeMax(std::vector<double>& v) {
  const double m = *std::max_element(v.begin(), v.end());
  if (m > 0.0) {
    for (double& x : v) x /= m;
  }
}

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::optional<ProfileKind> ParseProfileKind(std::string_view name) {
  if (name == "sunny") return ProfileKind::kSunny;
  if (name == "cloudy") return ProfileKind::kCloudy;
  return std::nullopt;
}

DailyProfiles synthetic_profiles(ProfileKind kind, int periods) {
  if (periods < 2) throw std::invalid_argument("synthetic_profiles: T < 2");
  DailyProfiles out;
  out.periods = periods;
  out.traffic_shape.resize(periods);
  out.energy_shape.resize(periods);
  constexpr double kFloor = 0.1;
  const double pi = std::numbers::pi;
  for (int t = 0; t < periods; ++t) {
    const double h = 24.0 * t / periods;
    double rise;
    if (h >= 4.0 && h <= 20.0) {
      rise = 0.5 * (1.0 - std::cos(pi * (h - 4.0) / 16.0));
    } else {
      const double since_peak = std::fmod(h - 20.0 + 24.0, 24.0);
      rise = 0.5 * (1.0 + std::cos(pi * since_peak / 8.0));
    }
    out.traffic_shape[t] = kFloor + (1.0 - kFloor) * rise;
    out.energy_shape[t] =
        (h > 6.0 && h < 20.0) ? 0.5 * (1.0 + std::cos(pi * (h - 13.0) / 7.0))
                              : 0.0;
  }
  NormalizeMax(out.traffic_shape);
  NormalizeMax(out.energy_shape);
  out.energy_peak =
      kind == ProfileKind::kSunny ? kSunnyEnergyPeak : kCloudyEnergyPeak;
  return out;
}

LoadedScenario parse_scenario(std::string_view json_text,
                              const std::string& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("$", std::string("JSON parse error: ") + e.what());
  }
  RequireObject(root, "$");
  RejectUnknown(root, "", {"macro", "env", "qos", "rho0", "cells", "profiles"});

  LoadedScenario out;
  Scenario& s = out.scenario;

  const json empty = json::object();
  const json& macro = root.contains("macro") ? root["macro"] : empty;
  RequireObject(macro, "macro");
  RejectUnknown(macro, "macro", {"radius", "power", "bandwidth"});
  s.macro.radius = OptNumber(macro, "macro", "radius").value_or(kDefaultMacroRadius);
  s.macro.power = ParsePower(
      macro, "macro", "macro",
      OptNumber(macro, "macro", "bandwidth").value_or(kDefaultMacroBandwidth));

  const json cells = root.contains("cells") ? root["cells"] : json::array();
  if (!cells.is_array()) throw ScenarioError("cells", "expected an array");

  const json& env = root.contains("env") ? root["env"] : empty;
  RequireObject(env, "env");
  RejectUnknown(env, "env",
                {"alpha_m", "alpha_s", "theta_m", "theta_s",
                 "noise_dbm_per_mhz", "noise_density"});
  s.env.alpha_m = OptNumber(env, "env", "alpha_m").value_or(3.5);
  s.env.alpha_s = OptNumber(env, "env", "alpha_s").value_or(4.0);
  s.env.theta_m = OptNumber(env, "env", "theta_m").value_or(1000.0);
  s.env.theta_s = OptNumber(env, "env", "theta_s")
                      .value_or(cells.size() <= 1 ? 500.0 : 2000.0);
  const std::optional<double> dbm = OptNumber(env, "env", "noise_dbm_per_mhz");
  const std::optional<double> density = OptNumber(env, "env", "noise_density");
  if (dbm && density) {
    throw ScenarioError("env", "give noise_dbm_per_mhz or noise_density, not both");
  }
  s.env.noise_density =
      density ? *density : NoiseDensityFromDbmPerMhz(dbm.value_or(-105.0));

  const json& qos = root.contains("qos") ? root["qos"] : empty;
  RequireObject(qos, "qos");
  RejectUnknown(qos, "qos", {"rate_req", "eta"});
  s.qos.rate_req = OptNumber(qos, "qos", "rate_req").value_or(300e3);
  s.qos.eta = OptNumber(qos, "qos", "eta").value_or(0.05);

  s.rho0 = Number(root, "", "rho0");

  std::set<std::string> ids;
  for (size_t n = 0; n < cells.size(); ++n) {
    const std::string path = "cells[" + std::to_string(n) + "]";
    const json& c = cells[n];
    RequireObject(c, path);
    RejectUnknown(c, path,
                  {"id", "kind", "radius", "dist_to_mbs", "azimuth_deg",
                   "power", "bandwidth", "energy_unit", "energy_arrival",
                   "handover_cost", "user_density"});
    SmallCellConfig cell;
    cell.id = OptString(c, path, "id").value_or("sbs" + std::to_string(n));
    if (!ids.insert(cell.id).second) {
      throw ScenarioError(Join(path, "id"), "duplicate id '" + cell.id + "'");
    }
    cell.kind = ParseKind(c, path);
    cell.radius = Number(c, path, "radius");
    cell.dist_to_mbs =
        OptNumber(c, path, "dist_to_mbs").value_or(kDefaultDistToMbs);
    const double spread = 360.0 * n / std::max<size_t>(1, cells.size());
    cell.azimuth = OptNumber(c, path, "azimuth_deg").value_or(spread) *
                   std::numbers::pi / 180.0;
    cell.power = ParsePower(
        c, path, "micro",
        OptNumber(c, path, "bandwidth").value_or(kDefaultSmallBandwidth));
    cell.energy_unit = OptNumber(c, path, "energy_unit").value_or(1.0);
    cell.energy_arrival = OptNumber(c, path, "energy_arrival").value_or(0.0);
    cell.handover_cost = OptNumber(c, path, "handover_cost").value_or(0.0);
    cell.user_density =
        OptNumber(c, path, "user_density").value_or(2.0 * s.rho0);
    s.cells.push_back(std::move(cell));
  }

  const std::vector<Violation> violations = validate_scenario(s);
  if (!violations.empty()) {
    throw ScenarioError(violations.front().field, violations.front().message);
  }

  if (root.contains("profiles")) {
    out.profiles = ParseProfiles(root["profiles"], base_dir);
  }
  return out;
}

LoadedScenario load_scenario(const std::string& path) {
  const std::string dir =
      std::filesystem::path(path).parent_path().string();
  try {
    return parse_scenario(ReadFile(path), dir.empty() ? "." : dir);
  } catch (const ScenarioError& e) {
    if (e.path() == path) throw;
    throw ScenarioError(e.path(), std::string(e.what()) + " (in " + path + ")");
  }
}

DailyProfiles parse_profiles_csv(std::string_view csv_text) {
  std::istringstream in{std::string(csv_text)};
  std::string line;
  if (!std::getline(in, line)) throw ScenarioError("profiles.csv", "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "period,traffic,energy") {
    throw ScenarioError("profiles.csv",
                        "header must be 'period,traffic,energy'");
  }
  DailyProfiles out;
  int row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string path = "profiles.csv[" + std::to_string(row) + "]";
    int period = 0;
    double traffic = 0.0, energy = 0.0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf%c", &period, &traffic, &energy,
                    &tail) != 3) {
      throw ScenarioError(path, "expected 'period,traffic,energy'");
    }
    if (period != row) {
      throw ScenarioError(path, "periods must be 0, 1, 2, ... in order");
    }
    if (!(traffic >= 0.0 && traffic <= 1.0) ||
        !(energy >= 0.0 && energy <= 1.0)) {
      throw ScenarioError(path, "shape values must lie in [0, 1]");
    }
    out.traffic_shape.push_back(traffic);
    out.energy_shape.push_back(energy);
    ++row;
  }
  if (row < 2) throw ScenarioError("profiles.csv", "need at least 2 periods");
  out.periods = row;
  NormalizeMax(out.traffic_shape);
  NormalizeMax(out.energy_shape);
  return out;
}

DailyProfiles load_profiles_csv(const std::string& path) {
  return parse_profiles_csv(ReadFile(path));
}

Scenario scenario_at_period(const Scenario& base, const DailyProfiles& profiles,
                            int period) {
  if (period < 0 || period >= profiles.periods ||
      profiles.traffic_shape.size() != static_cast<size_t>(profiles.periods) ||
      profiles.energy_shape.size() != static_cast<size_t>(profiles.periods)) {
    throw std::out_of_range("scenario_at_period: bad period or profile size");
  }
  Scenario s = base;
  const double traffic = Shape(profiles.traffic_shape[period]);
  const double energy = Shape(profiles.energy_shape[period]);
  double scale = traffic;
  if (profiles.traffic_peak > 0.0 && base.rho0 > 0.0) {
    scale *= profiles.traffic_peak / base.rho0;
  }
  s.rho0 = base.rho0 * scale;
  for (SmallCellConfig& c : s.cells) {
    c.user_density *= scale;
    if (c.kind == SbsKind::kConventional) continue;
    const double peak =
        profiles.energy_peak > 0.0 ? profiles.energy_peak : c.energy_arrival;
    c.energy_arrival = energy * peak;
  }
  return s;
}

double reference_power(const Scenario& scenario) {
  const BsPowerParams& m = scenario.macro.power;
  double p = m.p_const + m.beta * m.p_tx;
  for (const SmallCellConfig& c : scenario.cells) {
    p += c.power.p_const + c.power.beta * c.power.p_tx;
  }
  return p;
}

DailyResult daily_run(const Scenario& scenario, const DailyProfiles& profiles,
                      const std::vector<PlanMethod>& methods) {
  if (methods.empty()) throw std::invalid_argument("daily_run: no methods");
  DailyResult out;
  out.methods = methods;
  std::map<PlanMethod, double> sum_power, sum_norm;
  for (int t = 0; t < profiles.periods; ++t) {
    const Scenario s = scenario_at_period(scenario, profiles, t);
    const double ref = reference_power(s);
    for (PlanMethod m : methods) {
      const NetworkPlan plan = make_plan(s, m);
      PeriodResult r;
      r.period = t;
      r.method = m;
      r.feasible = plan.feasible;
      r.power = plan.power;
      r.reference = ref;
      r.normalized = plan.power.total / ref;
      for (const CellDecision& d : plan.decisions) r.active.push_back(d.active);
      sum_power[m] += r.power.total;
      sum_norm[m] += r.normalized;
      out.rows.push_back(std::move(r));
    }
  }
  for (PlanMethod m : methods) {
    out.mean_power[m] = sum_power[m] / profiles.periods;
    out.mean_normalized[m] = sum_norm[m] / profiles.periods;
  }
  return out;
}

double mean_saving(const DailyResult& result, PlanMethod method,
                   PlanMethod baseline) {
  const double a = result.mean_power.at(method);
  const double b = result.mean_power.at(baseline);
  return (b - a) / b;
}

std::string results_csv(const DailyResult& result) {
  std::string out =
      "period,method,feasible,p_mbs,p_sbs_total,p_ho,total,normalized\n";
  for (const PeriodResult& r : result.rows) {
    out += std::to_string(r.period) + "," +
           std::string(PlanMethodName(r.method)) + "," +
           (r.feasible ? "1" : "0") + "," + FormatNumber(r.power.mbs) + "," +
           FormatNumber(r.power.sbs_total) + "," +
           FormatNumber(r.power.handover) + "," + FormatNumber(r.power.total) +
           "," + FormatNumber(r.normalized) + "\n";
  }
  return out;
}

std::string summary_json(const DailyResult& result) {
  nlohmann::ordered_json j;
  j["periods"] = result.rows.empty() ? 0 : result.rows.back().period + 1;
  for (PlanMethod m : result.methods) {
    const std::string name(PlanMethodName(m));
    int infeasible = 0;
    for (const PeriodResult& r : result.rows) {
      if (r.method == m && !r.feasible) ++infeasible;
    }
    j["methods"][name] = {{"mean_power_w", result.mean_power.at(m)},
                          {"mean_normalized", result.mean_normalized.at(m)},
                          {"infeasible_periods", infeasible}};
  }
  nlohmann::ordered_json savings = nlohmann::ordered_json::array();
  for (PlanMethod a : result.methods) {
    for (PlanMethod b : result.methods) {
      if (a == b) continue;
      savings.push_back({{"method", std::string(PlanMethodName(a))},
                         {"baseline", std::string(PlanMethodName(b))},
                         {"saving_percent", 100.0 * mean_saving(result, a, b)}});
    }
  }
  j["savings"] = savings;
  return j.dump(2) + "\n";
}

}  // namespace hcn
