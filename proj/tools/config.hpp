#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "parityns/experiments.hpp"
#include "parityns/nsops.hpp"

namespace cli {

using nlohmann::json;

/// Bad flags, unreadable files or malformed configs: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path);

/// Unknown keys and wrong types are rejected.
parityns::SolverConfig solver_config_from_json(const json& j, parityns::SolverConfig base = {});
json to_json(const parityns::SolverConfig& c);

parityns::RigidityConfig rigidity_config_from_json(const json& j, parityns::RigidityConfig base = {});
json to_json(const parityns::RigidityConfig& c);

}  // namespace cli
