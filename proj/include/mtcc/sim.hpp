// Discrete-event Monte Carlo simulator of bots probing m moving-target
// proxies under configurable probing, replacement, and assignment policies.

#ifndef MTCC_SIM_HPP
#define MTCC_SIM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "mtcc/types.hpp"

namespace mtcc {

// ---- probing processes -------------------------------------------------

struct PoissonAggregate {
  double beta;  // aggregate probe rate
};

struct PerBotExponential {
  int n_bots;
  double mean_interprobe;
};

struct PerBotDeterministic {
  int n_bots;
  double period;  // each bot gets an independent uniform-random phase
};

struct PerBotTruncGaussian {
  int n_bots;
  double mean_interprobe;
  double kappa;  // coefficient of variation sigma/mean, pre-truncation
  double floor;  // lower truncation bound
};

using ProbingProcess = std::variant<PoissonAggregate, PerBotExponential,
                                    PerBotDeterministic, PerBotTruncGaussian>;

// ---- replacement policies ----------------------------------------------

struct AllAtOnce {
  double delta;
};

struct Selective {
  double delta;
  double r;
};

struct PerProxyIndependent {
  double delta;  // per-proxy rate
};

using ReplacementPolicy =
    std::variant<AllAtOnce, Selective, PerProxyIndependent>;

// ---- assignment policies -----------------------------------------------

struct UniformRandom {};

struct RoundRobin {
  double nominal_client_rate;  // nominal session requests per unit time
};

using AssignmentPolicy = std::variant<UniformRandom, RoundRobin>;

// ---- scenario ------------------------------------------------------------

struct ScenarioConfig {
  ModelParams params;  // m plus the aggregate (beta, delta, r) description
  ProbingProcess probing = PoissonAggregate{1.0};
  ReplacementPolicy replacement = AllAtOnce{1.0};
  AssignmentPolicy assignment = UniformRandom{};
  double horizon = 0.0;
  double warmup = -1.0;  // < 0 means default 10% of horizon
  int replications = 1;
  std::uint64_t seed = 0;
  double sample_dt = 0.0;  // trajectory resolution; 0 means horizon/1000

  double effective_warmup() const {
    return warmup < 0.0 ? 0.1 * horizon : warmup;
  }
  void validate() const;

  // Aggregate probe rate implied by the probing process.
  double aggregate_beta() const;
};

struct SimResult {
  int m = 0;
  double time_avg_known = 0.0;   // mean over replications
  double ci_halfwidth = 0.0;     // 95% CI across replications
  std::vector<double> per_rep_time_avg;

  // Trajectory of replication 0, sampled every sample_dt.
  std::vector<std::pair<double, double>> trajectory;
  std::vector<std::pair<double, double>> running_avg;

  // Y observed just before each replacement event (post-warmup).
  std::vector<int> epoch_y_samples;
  std::optional<double> epoch_avg;
  double epoch_ci_halfwidth = 0.0;
  std::vector<double> per_rep_epoch_avg;
  std::uint64_t total_epochs = 0;

  // Time-weighted occupancy over [warmup, horizon], all replications.
  Pmf empirical_pmf{0};

  // Histogram of Y at the horizon across replications.
  std::vector<std::uint64_t> final_y_counts;

  bool few_replications_warning = false;  // < 30 replications
  bool insufficient_cycles_warning = false;  // < 1000 replacement epochs
};

using Rng = std::mt19937_64;

// One inter-probe time draw for a single bot of the given process.
double sample_interprobe(const ProbingProcess& p, Rng& rng);

// Round-robin cursor state; uniform-random assignment is stateless.
class AssignmentState {
 public:
  AssignmentState(const AssignmentPolicy& policy, int m);

  // Proxy slot (0-based) assigned to a bot probe at time t. For round
  // robin, nominal client arrivals since the previous call advance the
  // cursor first; the bot's own probe advances it too.
  int assign(double t, Rng& rng);

 private:
  int m_;
  bool round_robin_;
  double nominal_rate_;
  long long cursor_ = 0;
  double last_t_ = 0.0;
};

// Runs all replications and aggregates. Deterministic for a fixed config.
SimResult run_scenario(const ScenarioConfig& cfg);

// Time-weighted occupancy pmf; warns (via the result flag) when fewer than
// 1000 replacement cycles were observed.
Pmf empirical_stationary_pmf(const SimResult& result);

struct PastaCheck {
  double time_avg;
  std::optional<double> epoch_avg;
};

// Time-average vs replacement-epoch average of Y; under Poisson
// replacement epochs the two estimate the same stationary quantity.
PastaCheck pasta_check(const SimResult& result);

}  // namespace mtcc

#endif  // MTCC_SIM_HPP
