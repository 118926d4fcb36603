// Desk-scale reproduction of the reference tables and figure data.

#ifndef MTCC_REPORT_HPP
#define MTCC_REPORT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mtcc/sim.hpp"

namespace mtcc {

struct Table1Row {
  double rho;
  double simulated_pct;
  double analytic_pct;
};

struct Table2Row {
  double kappa;
  double simulated_pct;
  double deterministic_closed_form_pct;
};

inline constexpr std::uint64_t kDefaultReportSeed = 20180423;

// Scenario for one table-1 cell: m=25, 50 bots with exponential
// inter-probe times, all-at-once Poisson replacement, uniform assignment,
// 30 replications, >= 1000 post-warmup cycles.
ScenarioConfig table1_scenario(double rho, std::uint64_t seed);

// Scenario for one table-2 cell: truncated-Gaussian inter-probe times
// (mean 30 s, floor 2 s), m=25, rho=50, 30 replications, 3e4 s horizon.
ScenarioConfig table2_scenario(double kappa, std::uint64_t seed);

std::vector<Table1Row> reproduce_table1(std::uint64_t seed = kDefaultReportSeed);
std::vector<Table2Row> reproduce_table2(std::uint64_t seed = kDefaultReportSeed);

// (rho, mean fraction known) for m=1000 over a log-spaced rho sweep.
std::vector<std::pair<double, double>> reproduce_fig5(int points = 40,
                                                      double rho_lo = 10.0,
                                                      double rho_hi = 1e4);

// (rho, P(at least 20% of proxies not found)) for m=1000.
std::vector<std::pair<double, double>> reproduce_fig6(int points = 40,
                                                      double rho_lo = 10.0,
                                                      double rho_hi = 1e4,
                                                      double fraction = 0.2);

}  // namespace mtcc

#endif  // MTCC_REPORT_HPP
