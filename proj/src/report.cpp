#include "mtcc/report.hpp"

#include <cmath>

#include "mtcc/analytic.hpp"

namespace mtcc {

ScenarioConfig table1_scenario(double rho, std::uint64_t seed) {
  ScenarioConfig cfg;
  cfg.params.m = 25;
  cfg.probing = PerBotExponential{50, 30.0};
  double beta = 50.0 / 30.0;
  double delta = beta / rho;
  cfg.replacement = AllAtOnce{delta};
  cfg.assignment = UniformRandom{};
  cfg.params.beta = beta;
  cfg.params.delta = delta;
  cfg.horizon = 1200.0 / delta;  // ~1080 post-warmup cycles
  cfg.replications = 30;
  cfg.seed = seed;
  return cfg;
}

ScenarioConfig table2_scenario(double kappa, std::uint64_t seed) {
  ScenarioConfig cfg;
  cfg.params.m = 25;
  cfg.probing = PerBotTruncGaussian{50, 30.0, kappa, 2.0};
  cfg.replacement = AllAtOnce{1.0 / 30.0};
  cfg.assignment = UniformRandom{};
  cfg.params.beta = 50.0 / 30.0;
  cfg.params.delta = 1.0 / 30.0;
  cfg.horizon = 3e4;
  cfg.replications = 30;
  cfg.seed = seed;
  return cfg;
}

std::vector<Table1Row> reproduce_table1(std::uint64_t seed) {
  std::vector<Table1Row> rows;
  for (double rho : {5.0, 25.0, 50.0}) {
    ScenarioConfig cfg = table1_scenario(rho, seed);
    SimResult res = run_scenario(cfg);
    double analytic =
        mean_known_poisson(ModelParams::from_rho(cfg.params.m, rho));
    rows.push_back({rho, 100.0 * res.time_avg_known / cfg.params.m,
                    100.0 * analytic / cfg.params.m});
  }
  return rows;
}

std::vector<Table2Row> reproduce_table2(std::uint64_t seed) {
  double det =
      100.0 * mean_known_deterministic(ModelParams::from_rho(25, 50.0)) / 25.0;
  std::vector<Table2Row> rows;
  for (double kappa : {0.05, 0.25, 0.5}) {
    ScenarioConfig cfg = table2_scenario(kappa, seed);
    SimResult res = run_scenario(cfg);
    rows.push_back({kappa, 100.0 * res.time_avg_known / cfg.params.m, det});
  }
  return rows;
}

namespace {

std::vector<double> log_spaced(int points, double lo, double hi) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(points));
  double llo = std::log(lo);
  double lhi = std::log(hi);
  for (int i = 0; i < points; ++i)
    xs.push_back(std::exp(llo + (lhi - llo) * i / (points - 1)));
  return xs;
}

}  // namespace

std::vector<std::pair<double, double>> reproduce_fig5(int points, double rho_lo,
                                                      double rho_hi) {
  std::vector<std::pair<double, double>> out;
  for (double rho : log_spaced(points, rho_lo, rho_hi)) {
    double mean = mean_known_poisson(ModelParams::from_rho(1000, rho));
    out.emplace_back(rho, mean / 1000.0);
  }
  return out;
}

std::vector<std::pair<double, double>> reproduce_fig6(int points, double rho_lo,
                                                      double rho_hi,
                                                      double fraction) {
  std::vector<std::pair<double, double>> out;
  for (double rho : log_spaced(points, rho_lo, rho_hi)) {
    double p = prob_fraction_not_found(ModelParams::from_rho(1000, rho),
                                       fraction);
    out.emplace_back(rho, p);
  }
  return out;
}

}  // namespace mtcc
