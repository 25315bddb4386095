// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace exproj {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<double> parse_number_list(const std::string& raw, const std::string& key) {
  std::string s = raw;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::replace(s.begin(), s.end(), '(', ' ');
  std::replace(s.begin(), s.end(), ')', ' ');
  std::istringstream in(s);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  if (out.empty()) fail("could not parse a number for key '" + key + "'");
  return out;
}

struct KeyValues {
  std::map<std::string, std::vector<double>> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }

  double scalar(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) fail("missing required key '" + key + "'");
    if (it->second.size() != 1) fail("key '" + key + "' must be a single number");
    return it->second.front();
  }

  double scalar_or(const std::string& key, double fallback) const {
    return has(key) ? scalar(key) : fallback;
  }

  Eigen::Vector3d vec3(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) fail("missing required key '" + key + "'");
    if (it->second.size() != 3) fail("key '" + key + "' must have 3 components");
    return Eigen::Vector3d(it->second[0], it->second[1], it->second[2]);
  }
};

KeyValues parse_key_value_text(const std::string& source) {
  KeyValues kv;
  std::istringstream in(source);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      fail("line " + std::to_string(lineno) + ": expected 'key = value'");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r\n");
      auto e = s.find_last_not_of(" \t\r\n");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) fail("line " + std::to_string(lineno) + ": empty key");
    kv.values[key] = parse_number_list(val, key);
  }
  return kv;
}

KeyValues parse_json_text(const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("JSON parse failure: ") + e.what());
  }
  if (!j.is_object()) fail("scenario JSON must be an object");
  KeyValues kv;
  for (auto& [key, value] : j.items()) {
    std::vector<double> nums;
    if (value.is_number()) {
      nums.push_back(value.get<double>());
    } else if (value.is_array()) {
      for (auto& e : value) {
        if (!e.is_number()) fail("key '" + key + "' must contain numbers");
        nums.push_back(e.get<double>());
      }
    } else {
      fail("key '" + key + "' must be a number or an array of numbers");
    }
    kv.values[key] = std::move(nums);
  }
  return kv;
}

}  // namespace

int ScenarioConfig::horizon() const {
  return static_cast<int>(std::lround(tf / dt));
}

void ScenarioConfig::validate() const {
  auto finite3 = [](const Eigen::Vector3d& v) { return v.allFinite(); };
  if (!finite3(r_init)) fail("r_init must be finite");
  if (!finite3(v_init)) fail("v_init must be finite");
  if (!finite3(g)) fail("g must be finite");
  if (!(rho1 > 0.0)) fail("rho1 must be positive");
  if (!(rho2 > rho1)) fail("rho2 must exceed rho1");
  if (!(m_dry > 0.0)) fail("m_dry must be positive");
  if (!(m_wet > m_dry)) fail("m_wet must exceed m_dry");
  if (!(alpha > 0.0)) fail("alpha must be positive");
  if (!(theta_tp > 0.0 && theta_tp <= std::numbers::pi / 2 + 1e-12))
    fail("theta_tp must lie in (0, pi/2]");
  if (!(dt > 0.0)) fail("dt must be positive");
  if (!(tf > 0.0)) fail("tf must be positive");
  const double steps = tf / dt;
  const int n = static_cast<int>(std::lround(steps));
  if (n < 2) fail("tf must cover at least 2 steps of dt");
  if (std::abs(tf - n * dt) > 1e-9 * dt) fail("tf must be an integer multiple of dt");
  if (!(gamma > 0.0)) fail("gamma must be positive");
  if (!(penalty_rho > 0.0)) fail("penalty_rho must be positive");
  if (max_iters < 1) fail("max_iters must be at least 1");
  if (!(eps_primal > 0.0)) fail("eps_primal must be positive");
  if (!(eps_dual > 0.0)) fail("eps_dual must be positive");
  if (!(nr_tol > 0.0)) fail("nr_tol must be positive");
  if (nr_max_iters < 1) fail("nr_max_iters must be at least 1");
}

ScenarioConfig ScenarioConfig::with_time_of_flight(double tf_new) const {
  if (!(tf_new > 0.0)) fail("tf must be positive");
  ScenarioConfig out = *this;
  const int n = std::max(2, static_cast<int>(std::lround(tf_new / dt)));
  out.tf = tf_new;
  out.dt = tf_new / n;
  return out;
}

ScenarioConfig load_scenario(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail("empty scenario source");
  const KeyValues kv =
      source[first] == '{' ? parse_json_text(source) : parse_key_value_text(source);

  ScenarioConfig cfg;
  cfg.r_init = kv.vec3("r_init");
  cfg.v_init = kv.vec3("v_init");
  cfg.g = kv.vec3("g");
  cfg.m_wet = kv.scalar("m_wet");
  cfg.m_dry = kv.scalar("m_dry");
  cfg.rho1 = kv.scalar("rho1");
  cfg.rho2 = kv.scalar("rho2");
  cfg.alpha = kv.scalar("alpha");
  cfg.theta_tp = kv.scalar("theta_tp");

  ScenarioConfig defaults;
  cfg.tf = kv.scalar_or("tf", defaults.tf);
  cfg.dt = kv.scalar_or("dt", defaults.dt);
  cfg.gamma = kv.scalar_or("gamma", defaults.gamma);
  cfg.penalty_rho = kv.scalar_or("penalty_rho", defaults.penalty_rho);
  cfg.max_iters = static_cast<int>(kv.scalar_or("max_iters", defaults.max_iters));
  cfg.eps_primal = kv.scalar_or("eps_primal", defaults.eps_primal);
  cfg.eps_dual = kv.scalar_or("eps_dual", defaults.eps_dual);
  cfg.nr_tol = kv.scalar_or("nr_tol", defaults.nr_tol);
  cfg.nr_max_iters = static_cast<int>(kv.scalar_or("nr_max_iters", defaults.nr_max_iters));

  // dt is a target resolution; snap it so the horizon is integral (e.g.
  // tf = 46.96 with dt = 1 loads as N = 47, dt = tf/47).
  if (cfg.tf > 0.0 && cfg.dt > 0.0) cfg = cfg.with_time_of_flight(cfg.tf);

  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

Scaling Scaling::of(const ScenarioConfig& cfg) {
  Scaling s;
  s.length = std::max(cfg.r_init.norm(), 1.0);
  s.time = cfg.tf;
  s.mass = cfg.m_wet;
  return s;
}

ScenarioConfig Scaling::normalize(const ScenarioConfig& cfg) const {
  ScenarioConfig out = cfg;
  out.r_init = cfg.r_init / length;
  out.v_init = cfg.v_init * (time / length);
  out.g = cfg.g / accel();
  out.m_wet = cfg.m_wet / mass;
  out.m_dry = cfg.m_dry / mass;
  out.rho1 = cfg.rho1 / force();
  out.rho2 = cfg.rho2 / force();
  out.alpha = cfg.alpha * (length / time);
  out.tf = cfg.tf / time;
  out.dt = cfg.dt / time;
  return out;
}

}  // namespace exproj
