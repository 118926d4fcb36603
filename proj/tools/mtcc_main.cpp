// mtcc: analytic queries, scenario simulation, and CSV reproduction of the
// reference tables and figures for the moving-target proxy recon model.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mtcc/analytic.hpp"
#include "mtcc/csvio.hpp"
#include "mtcc/report.hpp"
#include "mtcc/scenario_file.hpp"
#include "mtcc/sim.hpp"

namespace fs = std::filesystem;
using namespace mtcc;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitConfig = 4;

fs::path resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("MTCC_OUT_DIR")) return env;
  return ".";
}

std::string fmt6(double v) { return format_number(v, 6); }

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct AnalyticOpts {
  std::string kind;
  int m = 25;
  double rho = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double r = 1.0;
  double sigma = 0.0;
};

int run_analytic(const AnalyticOpts& o) {
  double beta = o.beta;
  double delta = o.delta;
  if (o.rho > 0.0) {
    beta = o.rho;
    delta = 1.0;
  }
  if (!(beta > 0.0 && delta > 0.0)) {
    std::cerr << "analytic: provide --rho or both --beta and --delta\n";
    return kExitUsage;
  }
  ModelParams p{o.m, beta, delta, o.r};
  double mean;
  if (o.kind == "poisson") {
    mean = mean_known_poisson(p);
  } else if (o.kind == "deterministic") {
    mean = mean_known_deterministic(p);
  } else if (o.kind == "selective") {
    mean = mean_known_selective(p);
  } else {  // clt
    mean = clt_mean_approx(CltParams{p, o.sigma});
  }
  std::cout << fmt6(mean) << " (" << fmt6(100.0 * mean / o.m) << "% of m)\n";
  return 0;
}

struct DistOpts {
  int m = 25;
  double rho = 50.0;
  double fraction = -1.0;
  std::string out;
};

int run_dist(const DistOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  Pmf pmf = stationary_pmf_poisson(ModelParams::from_rho(o.m, o.rho));
  std::vector<CsvRow> rows;
  for (int l = 0; l <= o.m; ++l)
    rows.push_back({std::to_string(l), format_number(pmf[l], 12)});
  if (!o.out.empty()) {
    write_csv_atomic(o.out, {"ell", "probability"}, rows);
    std::ostringstream params;
    params.imbue(std::locale::classic());
    params << "m=" << o.m << " rho=" << o.rho;
    write_manifest(o.out, "dist", params.str(), 0, {o.out},
                   elapsed_since(t0));
  } else {
    std::cout << "ell,probability\n";
    for (const auto& row : rows) std::cout << row[0] << ',' << row[1] << '\n';
  }
  if (o.fraction > 0.0) {
    double tail =
        prob_fraction_not_found(ModelParams::from_rho(o.m, o.rho), o.fraction);
    std::cout << "P(at least " << fmt6(100.0 * o.fraction)
              << "% not found) = " << format_number(tail, 12) << "\n";
  }
  return 0;
}

struct SimulateOpts {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir;
};

int run_simulate(const SimulateOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::ifstream in(o.config_path);
  if (!in) {
    std::cerr << "simulate: cannot open config file '" << o.config_path
              << "'\n";
    return kExitConfig;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::map<std::string, std::string> overrides;
  for (const auto& s : o.sets) {
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
      std::cerr << "simulate: --set expects key=value, got '" << s << "'\n";
      return kExitUsage;
    }
    overrides[s.substr(0, eq)] = s.substr(eq + 1);
  }
  ScenarioConfig cfg = parse_scenario(buf.str(), overrides);
  SimResult res = run_scenario(cfg);
  if (res.few_replications_warning)
    std::cerr << "warning: fewer than 30 replications; the confidence "
                 "interval may be unreliable\n";
  if (res.insufficient_cycles_warning)
    std::cerr << "warning: fewer than 1000 replacement cycles observed; "
                 "stationary estimates may be biased\n";

  fs::path dir = resolve_out_dir(o.out_dir);
  fs::create_directories(dir);

  std::vector<CsvRow> traj;
  for (const auto& [t, y] : res.trajectory)
    traj.push_back({format_number(t, 12), format_number(y, 12)});
  fs::path traj_path = dir / "trajectory.csv";
  write_csv_atomic(traj_path, {"t", "Y"}, traj);

  std::vector<CsvRow> ravg;
  for (const auto& [t, a] : res.running_avg)
    ravg.push_back({format_number(t, 12), format_number(a, 12)});
  fs::path ravg_path = dir / "running_avg.csv";
  write_csv_atomic(ravg_path, {"t", "avg_Y"}, ravg);

  std::string params_text = scenario_to_text(cfg);
  double dur = elapsed_since(t0);
  write_manifest(traj_path, "simulate", params_text, cfg.seed,
                 {traj_path.string()}, dur);
  write_manifest(ravg_path, "simulate", params_text, cfg.seed,
                 {ravg_path.string()}, dur);

  std::cout << "time_avg_known=" << fmt6(res.time_avg_known) << " fraction="
            << fmt6(100.0 * res.time_avg_known / cfg.params.m)
            << "% ci95=" << fmt6(res.ci_halfwidth) << "\n";
  return 0;
}

struct ReproduceOpts {
  std::string target;
  std::string out_dir;
  std::uint64_t seed = kDefaultReportSeed;
  int points = 40;
  double rho_min = 10.0;
  double rho_max = 1e4;
};

int run_reproduce(const ReproduceOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  fs::path dir = resolve_out_dir(o.out_dir);
  fs::create_directories(dir);
  fs::path out = dir / (o.target + ".csv");

  std::vector<std::string> header;
  std::vector<CsvRow> rows;
  std::ostringstream params;
  params.imbue(std::locale::classic());

  if (o.target == "table1") {
    header = {"rho", "simulated_pct", "analytic_pct"};
    for (const auto& r : reproduce_table1(o.seed))
      rows.push_back({format_number(r.rho, 12), fmt6(r.simulated_pct),
                      fmt6(r.analytic_pct)});
    params << "m=25 rho={5,25,50} replications=30 seed=" << o.seed;
  } else if (o.target == "table2") {
    header = {"kappa", "simulated_pct", "deterministic_closed_form_pct"};
    for (const auto& r : reproduce_table2(o.seed))
      rows.push_back({format_number(r.kappa, 12), fmt6(r.simulated_pct),
                      fmt6(r.deterministic_closed_form_pct)});
    params << "m=25 rho=50 kappa={0.05,0.25,0.5} replications=30 seed="
           << o.seed;
  } else if (o.target == "fig5") {
    header = {"rho", "mean_fraction_known"};
    for (const auto& [rho, f] : reproduce_fig5(o.points, o.rho_min, o.rho_max))
      rows.push_back({format_number(rho, 12), format_number(f, 10)});
    params << "m=1000 points=" << o.points << " rho=[" << o.rho_min << ","
           << o.rho_max << "]";
  } else {  // fig6
    header = {"rho", "prob_at_least_20pct_not_found"};
    for (const auto& [rho, p] : reproduce_fig6(o.points, o.rho_min, o.rho_max))
      rows.push_back({format_number(rho, 12), format_number(p, 10)});
    params << "m=1000 fraction=0.2 points=" << o.points << " rho=["
           << o.rho_min << "," << o.rho_max << "]";
  }

  write_csv_atomic(out, header, rows);
  write_manifest(out, "reproduce " + o.target, params.str(), o.seed,
                 {out.string()}, elapsed_since(t0));
  std::cout << "wrote " << out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moving-target proxy reconnaissance model"};
  app.require_subcommand(1);

  AnalyticOpts ao;
  auto* analytic = app.add_subcommand(
      "analytic", "Evaluate a closed-form stationary mean");
  analytic->add_option("kind", ao.kind, "poisson|deterministic|selective|clt")
      ->required()
      ->check(CLI::IsMember({"poisson", "deterministic", "selective", "clt"}));
  analytic->add_option("--m", ao.m)->check(CLI::PositiveNumber);
  analytic->add_option("--rho", ao.rho)->check(CLI::PositiveNumber);
  analytic->add_option("--beta", ao.beta)->check(CLI::PositiveNumber);
  analytic->add_option("--delta", ao.delta)->check(CLI::PositiveNumber);
  analytic->add_option("--r", ao.r)->check(CLI::Range(0.0, 1.0));
  analytic->add_option("--sigma", ao.sigma)->check(CLI::NonNegativeNumber);

  DistOpts dopt;
  auto* dist = app.add_subcommand(
      "dist", "Stationary pmf of the number of identities known");
  dist->add_option("--m", dopt.m)
      ->check(CLI::PositiveNumber)
      ->check(CLI::Range(1, 5000));
  dist->add_option("--rho", dopt.rho)->check(CLI::PositiveNumber);
  dist->add_option("--fraction", dopt.fraction)
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  dist->add_option("--out", dopt.out, "CSV output path (default stdout)");

  SimulateOpts so;
  auto* simulate =
      app.add_subcommand("simulate", "Run a Monte Carlo scenario");
  simulate->add_option("--config", so.config_path, "scenario file")
      ->required();
  simulate->add_option("--set", so.sets,
                       "override a config key, e.g. --set seed=7");
  simulate->add_option("--out-dir", so.out_dir);

  ReproduceOpts ro;
  auto* reproduce =
      app.add_subcommand("reproduce", "Regenerate reference CSV outputs");
  reproduce->add_option("target", ro.target, "table1|table2|fig5|fig6")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "fig5", "fig6"}));
  reproduce->add_option("--out-dir", ro.out_dir);
  reproduce->add_option("--seed", ro.seed);
  reproduce->add_option("--points", ro.points)->check(CLI::Range(2, 100000));
  reproduce->add_option("--rho-min", ro.rho_min)->check(CLI::PositiveNumber);
  reproduce->add_option("--rho-max", ro.rho_max)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analytic->parsed()) return run_analytic(ao);
    if (dist->parsed()) return run_dist(dopt);
    if (simulate->parsed()) return run_simulate(so);
    return run_reproduce(ro);
  } catch (const PrecisionError& e) {
    std::cerr << "precision failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ValidityError& e) {
    std::cerr << "validity error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const SingularityError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
