#include "lcmsim/scenario.hpp"

#include <fstream>
#include <sstream>

namespace lcmsim {

namespace {

Point parse_point(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("scenario: a position must be a two-element array");
  auto coord = [](const nlohmann::json& v) {
        return v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(v.get<long>());
  };
  return {coord(j[0]), coord(j[1])};
}

nlohmann::json point_json(const Point& p) {
  return nlohmann::json::array({p.x.str(), p.y.str()});
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario: not valid JSON: ") + e.what());
  }
  Scenario sc;
  const auto& alg = j.at("algorithm");
  sc.algorithm_id = alg.at("id").get<std::string>();
  sc.algorithm_params = alg.contains("params") ? alg.at("params") : nlohmann::json::object();
  sc.model = parse_model(j.at("model").get<std::string>());
  const auto& sched = j.at("scheduler");
  sc.scheduler_id = sched.at("id").get<std::string>();
  sc.scheduler_params = sched.contains("params") ? sched.at("params") : nlohmann::json::object();
  const auto& init = j.at("init");
  const auto& pos = init.at("positions");
  if (!pos.is_array() || pos.size() != 2)
    throw std::invalid_argument("scenario: init.positions must hold two points");
  sc.positions[RobotId::A] = parse_point(pos[0]);
  sc.positions[RobotId::B] = parse_point(pos[1]);
  if (init.contains("colors")) {
    PerRobot<int> c{{init.at("colors").at(0).get<int>(), init.at("colors").at(1).get<int>()}};
    sc.color_indices = c;
  }
  sc.grid = j.value("grid", false);
  sc.seed = j.value("seed", std::uint64_t{0});
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string Scenario::compact_json() const {
  nlohmann::ordered_json j;
  j["algorithm"] = {{"id", algorithm_id}, {"params", algorithm_params}};
  j["model"] = model_name(model);
  j["scheduler"] = {{"id", scheduler_id}, {"params", scheduler_params}};
  j["init"]["positions"] =
      nlohmann::json::array({point_json(positions[RobotId::A]), point_json(positions[RobotId::B])});
  if (color_indices)
    j["init"]["colors"] =
        nlohmann::json::array({(*color_indices)[RobotId::A], (*color_indices)[RobotId::B]});
  j["grid"] = grid;
  j["seed"] = seed;
  return j.dump();
}

Trace run_scenario(const Scenario& sc) {
  Algorithm alg = make_algorithm(sc.algorithm_id, sc.algorithm_params);
  Schedule sched = make_schedule(sc.scheduler_id, sc.scheduler_params, sc.seed);

  Configuration init;
  init.positions = sc.positions;
  Color initial = alg.initial_color;
  if (sc.color_indices) {
    init.colors[RobotId::A] = Color{(*sc.color_indices)[RobotId::A], alg.palette};
    init.colors[RobotId::B] = Color{(*sc.color_indices)[RobotId::B], alg.palette};
  } else {
    init.colors[RobotId::A] = initial;
    init.colors[RobotId::B] = initial;
  }

  Trace trace = run(alg, sc.model, sched, init, sc.grid);
  trace.scenario_text = sc.compact_json();
  return trace;
}

}  // namespace lcmsim
