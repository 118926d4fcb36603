// Flat key=value scenario files, diffable and reproducible.
//
// Recognized keys:
//   m, r, horizon, warmup, replications, seed, sample_dt
//   probing.kind = poisson | exponential | deterministic | truncgaussian
//   probing.beta            (poisson)
//   probing.n_bots          (per-bot kinds)
//   probing.mean            (exponential, deterministic period, truncgaussian)
//   probing.kappa           (truncgaussian)
//   probing.floor           (truncgaussian)
//   replacement.kind = all | selective | perproxy
//   replacement.delta
//   replacement.r           (selective)
//   assignment.kind = random | roundrobin
//   assignment.nominal_rate (roundrobin)

#ifndef MTCC_SCENARIO_FILE_HPP
#define MTCC_SCENARIO_FILE_HPP

#include <map>
#include <string>

#include "mtcc/sim.hpp"

namespace mtcc {

// Parses `text`; `overrides` (same keys) win over file values. Parse
// errors report the offending line number.
ScenarioConfig parse_scenario(const std::string& text,
                              const std::map<std::string, std::string>&
                                  overrides = {});

// Serializes a config back to the key=value form (for manifests).
std::string scenario_to_text(const ScenarioConfig& cfg);

}  // namespace mtcc

#endif  // MTCC_SCENARIO_FILE_HPP
