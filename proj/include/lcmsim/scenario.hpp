#pragma once

#include "lcmsim/registry.hpp"

namespace lcmsim {

/// One batch experiment: which algorithm under which model, the
/// schedule to run it against, where the robots start, and whether the
/// scenario grants the shared grid.
struct Scenario {
  std::string algorithm_id;
  nlohmann::json algorithm_params;
  RobotModel model = RobotModel::OBLOT;
  std::string scheduler_id;
  nlohmann::json scheduler_params;
  PerRobot<Point> positions;
  std::optional<PerRobot<int>> color_indices;  // default: the algorithm's initial color
  bool grid = false;
  std::uint64_t seed = 0;

  std::string compact_json() const;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

/// Runs a scenario end to end; the trace carries the scenario echo.
Trace run_scenario(const Scenario& sc);

}  // namespace lcmsim
