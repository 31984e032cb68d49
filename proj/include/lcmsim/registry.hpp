#pragma once

#include <json.hpp>

#include "lcmsim/engine.hpp"

namespace lcmsim {

/// Builds a registered algorithm (or simulator stack) from its string
/// id and a parameter map. Known ids:
///   alg.midpoint, alg.lambda_step{lambda}, alg.anchor_midpoint,
///   alg.single_move{hop}, alg.sro_oblot, alg.cge_fsynch, alg.token3,
///   alg.fcom_token3, alg.fsta_token3, alg.stay,
///   sim.collapse{inner,inner_params,target}, sim.handshake{inner,
///   inner_params}, sim.a{inner,inner_params}.
Algorithm make_algorithm(const std::string& id, const nlohmann::json& params);

/// Builds a schedule from a generator or adversary id plus parameters.
/// Known ids: sched.fsynch{rounds}, sched.rsynch{prefix,turns,first},
/// sched.ssynch{rounds,window}, sched.asynch{cycles,atomicity},
/// adv.psi{r}, adv.dmsd{lambda,x}, adv.mirror{turns}.
/// Generators that consume randomness take it from `seed` unless the
/// parameter map overrides it.
Schedule make_schedule(const std::string& id, const nlohmann::json& params, std::uint64_t seed);

bool is_known_algorithm(const std::string& id);
bool is_known_scheduler(const std::string& id);

}  // namespace lcmsim
