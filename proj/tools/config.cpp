#include "config.hpp"

#include <fstream>
#include <set>

namespace cli {

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& what) {
  if (!j.is_object()) throw UsageError(what + " config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw UsageError("unknown " + what + " config key '" + key + "'");
}

template <class T>
T get(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError("config key '" + key + "' has the wrong type");
  }
}

double positive(double v, const std::string& key) {
  if (!(v > 0.0)) throw UsageError("config key '" + key + "' must be positive");
  return v;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed config " + path + ": " + e.what());
  }
}

parityns::SolverConfig solver_config_from_json(const json& j, parityns::SolverConfig c) {
  reject_unknown(j, {"n", "dt", "t_end", "quad_rule", "quad_points", "dealias", "picard_iters", "tol", "div_tol", "parity_tol"},
                 "solver");
  c.n = get(j, "n", c.n);
  c.dt = positive(get(j, "dt", c.dt), "dt");
  c.t_end = positive(get(j, "t_end", c.t_end), "t_end");
  if (j.contains("quad_rule")) {
    auto q = parityns::parse_quad_rule(get<std::string>(j, "quad_rule", ""));
    if (!q) throw UsageError("quad_rule must be 'trapezoid' or 'midpoint'");
    c.quad_rule = *q;
  }
  c.quad_points = get(j, "quad_points", c.quad_points);
  if (j.contains("dealias")) {
    auto d = parityns::parse_dealias(get<std::string>(j, "dealias", ""));
    if (!d) throw UsageError("dealias must be 'two_thirds' or 'none'");
    c.dealias = *d;
  }
  c.picard_iters = get(j, "picard_iters", c.picard_iters);
  c.tol = positive(get(j, "tol", c.tol), "tol");
  c.div_tol = positive(get(j, "div_tol", c.div_tol), "div_tol");
  c.parity_tol = positive(get(j, "parity_tol", c.parity_tol), "parity_tol");
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid solver config: ") + e.what());
  }
  return c;
}

json to_json(const parityns::SolverConfig& c) {
  return {{"n", c.n},
          {"dt", c.dt},
          {"t_end", c.t_end},
          {"quad_rule", parityns::to_string(c.quad_rule)},
          {"quad_points", c.quad_points},
          {"dealias", parityns::to_string(c.dealias)},
          {"picard_iters", c.picard_iters},
          {"tol", c.tol},
          {"div_tol", c.div_tol},
          {"parity_tol", c.parity_tol}};
}

parityns::RigidityConfig rigidity_config_from_json(const json& j, parityns::RigidityConfig c) {
  reject_unknown(j, {"n", "seeds", "t", "quad_points", "dealias", "beltrami_tol", "parity_tol"}, "rigidity");
  c.n = get(j, "n", c.n);
  if (j.contains("seeds")) {
    const json& s = j.at("seeds");
    if (s.is_number_integer()) {
      const int count = s.get<int>();
      if (count < 1) throw UsageError("seeds must be >= 1");
      c.seeds.clear();
      for (int i = 1; i <= count; ++i) c.seeds.push_back(static_cast<std::uint64_t>(i));
    } else {
      c.seeds = get<std::vector<std::uint64_t>>(j, "seeds", c.seeds);
    }
  }
  c.t = positive(get(j, "t", c.t), "t");
  c.quad_points = get(j, "quad_points", c.quad_points);
  if (j.contains("dealias")) {
    auto d = parityns::parse_dealias(get<std::string>(j, "dealias", ""));
    if (!d) throw UsageError("dealias must be 'two_thirds' or 'none'");
    c.dealias = *d;
  }
  c.beltrami_tol = positive(get(j, "beltrami_tol", c.beltrami_tol), "beltrami_tol");
  c.parity_tol = positive(get(j, "parity_tol", c.parity_tol), "parity_tol");
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid rigidity config: ") + e.what());
  }
  return c;
}

json to_json(const parityns::RigidityConfig& c) {
  return {{"n", c.n},
          {"seeds", c.seeds},
          {"t", c.t},
          {"quad_points", c.quad_points},
          {"dealias", parityns::to_string(c.dealias)},
          {"beltrami_tol", c.beltrami_tol},
          {"parity_tol", c.parity_tol}};
}

}  // namespace cli
