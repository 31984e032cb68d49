#include "lcmsim/registry.hpp"

#include "lcmsim/adversaries.hpp"
#include "lcmsim/protocols.hpp"

namespace lcmsim {

namespace {

Rational param_rational(const nlohmann::json& params, const char* key, const Rational& fallback) {
  if (!params.contains(key)) return fallback;
  const auto& v = params.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument(std::string("parameter ") + key + " must be a rational string");
}

int param_int(const nlohmann::json& params, const char* key, int fallback) {
  return params.contains(key) ? params.at(key).get<int>() : fallback;
}

}  // namespace

Algorithm make_algorithm(const std::string& id, const nlohmann::json& params) {
  if (id == "alg.midpoint") return alg_go_to_midpoint();
  if (id == "alg.lambda_step")
    return alg_lambda_step(param_rational(params, "lambda", Rational(1, 2)));
  if (id == "alg.anchor_midpoint") return alg_anchor_midpoint();
  if (id == "alg.single_move")
    return alg_single_move_fsta(param_rational(params, "hop", Rational(1, 4)));
  if (id == "alg.sro_oblot") return alg_sro_oblot();
  if (id == "alg.cge_fsynch") return alg_cge_fsynch();
  if (id == "alg.token3") return alg_token3();
  if (id == "alg.fcom_token3") return alg_fcom_token3();
  if (id == "alg.fsta_token3") return alg_fsta_token3();
  if (id == "alg.stay") return alg_stay();

  if (id == "sim.collapse" || id == "sim.handshake" || id == "sim.a") {
    if (!params.contains("inner"))
      throw std::invalid_argument(id + ": missing 'inner' algorithm id");
    nlohmann::json inner_params =
        params.contains("inner_params") ? params.at("inner_params") : nlohmann::json::object();
    Algorithm inner = make_algorithm(params.at("inner").get<std::string>(), inner_params);
    if (id == "sim.handshake") return sim_rsynch_handshake(inner);
    if (id == "sim.a") return sim_a(inner);
    RobotModel target = parse_model(params.value("target", std::string("FSTA")));
    return sim_fsynch_collapse(inner, target);
  }
  throw std::invalid_argument("unknown algorithm id: " + id);
}

Schedule make_schedule(const std::string& id, const nlohmann::json& params, std::uint64_t seed) {
  std::uint64_t s = params.contains("seed") ? params.at("seed").get<std::uint64_t>() : seed;
  if (id == "sched.fsynch") return gen_fsynch(param_int(params, "rounds", 4));
  if (id == "sched.rsynch") {
    RobotId first = params.value("first", std::string("A")) == "B" ? RobotId::B : RobotId::A;
    return gen_rsynch(param_int(params, "prefix", 0), param_int(params, "turns", 8), first);
  }
  if (id == "sched.ssynch")
    return gen_ssynch(s, param_int(params, "rounds", 12), param_int(params, "window", 3));
  if (id == "sched.asynch")
    return gen_asynch(s, param_int(params, "cycles", 6),
                      parse_atomicity(params.value("atomicity", std::string("NONE"))));
  if (id == "adv.psi") return adv_psi_interleave(param_int(params, "r", 0)).schedule;
  if (id == "adv.dmsd")
    return adv_dmsd_break(param_rational(params, "lambda", Rational(1, 2)),
                          param_rational(params, "x", Rational(1, 3)))
        .schedule;
  if (id == "adv.mirror") return adv_mirror_rsynch(param_int(params, "turns", 40)).schedule;
  throw std::invalid_argument("unknown scheduler id: " + id);
}

bool is_known_algorithm(const std::string& id) {
  try {
    nlohmann::json p = nlohmann::json::object();
    if (id.rfind("sim.", 0) == 0) p["inner"] = "alg.midpoint";
    make_algorithm(id, p);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool is_known_scheduler(const std::string& id) {
  try {
    make_schedule(id, nlohmann::json::object(), 1);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace lcmsim
