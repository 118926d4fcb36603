#include "mtcc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace mtcc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng make_rep_rng(std::uint64_t seed, int rep) {
  return Rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(rep))));
}

int probing_streams(const ProbingProcess& p) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PoissonAggregate>)
          return 1;
        else
          return v.n_bots;
      },
      p);
}

struct MeanCi {
  double mean = 0.0;
  double halfwidth = 0.0;
};

MeanCi mean_ci(const std::vector<double>& xs) {
  MeanCi out;
  if (xs.empty()) return out;
  long double s = 0.0L;
  for (double x : xs) s += x;
  out.mean = static_cast<double>(s / xs.size());
  if (xs.size() >= 2) {
    long double ss = 0.0L;
    for (double x : xs) {
      long double d = x - out.mean;
      ss += d * d;
    }
    double sd = std::sqrt(static_cast<double>(ss / (xs.size() - 1)));
    out.halfwidth = 1.959963985 * sd / std::sqrt(static_cast<double>(xs.size()));
  }
  return out;
}

}  // namespace

void ScenarioConfig::validate() const {
  params.validate();
  if (!(horizon > 0.0)) throw ConfigError("horizon must be > 0");
  if (effective_warmup() >= horizon)
    throw ConfigError("warmup must be < horizon");
  if (replications < 1) throw ConfigError("replications must be >= 1");
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PoissonAggregate>) {
          if (!(v.beta > 0.0)) throw ConfigError("probing beta must be > 0");
        } else if constexpr (std::is_same_v<T, PerBotExponential>) {
          if (v.n_bots < 1) throw ConfigError("n_bots must be >= 1");
          if (!(v.mean_interprobe > 0.0))
            throw ConfigError("mean_interprobe must be > 0");
        } else if constexpr (std::is_same_v<T, PerBotDeterministic>) {
          if (v.n_bots < 1) throw ConfigError("n_bots must be >= 1");
          if (!(v.period > 0.0)) throw ConfigError("period must be > 0");
        } else {
          if (v.n_bots < 1) throw ConfigError("n_bots must be >= 1");
          if (!(v.mean_interprobe > 0.0))
            throw ConfigError("mean_interprobe must be > 0");
          if (v.kappa < 0.0) throw ConfigError("kappa must be >= 0");
          if (!(v.floor < v.mean_interprobe))
            throw ConfigError("floor must be < mean_interprobe");
        }
      },
      probing);
  std::visit(
      [](const auto& v) {
        if (!(v.delta > 0.0)) throw ConfigError("replacement delta must be > 0");
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Selective>) {
          if (!(v.r >= 0.0 && v.r <= 1.0))
            throw ConfigError("replacement r must be in [0,1]");
        }
      },
      replacement);
  if (auto* rr = std::get_if<RoundRobin>(&assignment)) {
    if (rr->nominal_client_rate < 0.0)
      throw ConfigError("nominal_client_rate must be >= 0");
  }
}

double ScenarioConfig::aggregate_beta() const {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PoissonAggregate>)
          return v.beta;
        else if constexpr (std::is_same_v<T, PerBotExponential>)
          return v.n_bots / v.mean_interprobe;
        else if constexpr (std::is_same_v<T, PerBotDeterministic>)
          return v.n_bots / v.period;
        else
          return v.n_bots / v.mean_interprobe;
      },
      probing);
}

double sample_interprobe(const ProbingProcess& p, Rng& rng) {
  return std::visit(
      [&rng](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PoissonAggregate>) {
          std::exponential_distribution<double> d(v.beta);
          return d(rng);
        } else if constexpr (std::is_same_v<T, PerBotExponential>) {
          std::exponential_distribution<double> d(1.0 / v.mean_interprobe);
          return d(rng);
        } else if constexpr (std::is_same_v<T, PerBotDeterministic>) {
          return v.period;
        } else {
          if (v.kappa == 0.0) return v.mean_interprobe;
          // True conditional distribution given value >= floor, by rejection.
          std::normal_distribution<double> d(v.mean_interprobe,
                                             v.kappa * v.mean_interprobe);
          for (int i = 0; i < 1000000; ++i) {
            double x = d(rng);
            if (x >= v.floor) return x;
          }
          throw ConfigError(
              "sample_interprobe: truncated-Gaussian rejection cap hit");
        }
      },
      p);
}

AssignmentState::AssignmentState(const AssignmentPolicy& policy, int m)
    : m_(m),
      round_robin_(std::holds_alternative<RoundRobin>(policy)),
      nominal_rate_(round_robin_
                        ? std::get<RoundRobin>(policy).nominal_client_rate
                        : 0.0) {}

int AssignmentState::assign(double t, Rng& rng) {
  if (!round_robin_) {
    std::uniform_int_distribution<int> d(0, m_ - 1);
    return d(rng);
  }
  double dt = t - last_t_;
  if (nominal_rate_ > 0.0 && dt > 0.0) {
    std::poisson_distribution<long long> d(nominal_rate_ * dt);
    cursor_ = (cursor_ + d(rng)) % m_;
  }
  last_t_ = t;
  int slot = static_cast<int>(cursor_ % m_);
  cursor_ = (cursor_ + 1) % m_;
  return slot;
}

SimResult run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const int m = cfg.params.m;
  const double horizon = cfg.horizon;
  const double warmup = cfg.effective_warmup();
  const double sample_dt =
      cfg.sample_dt > 0.0 ? cfg.sample_dt : horizon / 1000.0;

  SimResult result;
  result.m = m;
  result.empirical_pmf = Pmf(m);
  result.final_y_counts.assign(static_cast<std::size_t>(m) + 1, 0);

  std::vector<long double> occupancy(static_cast<std::size_t>(m) + 1, 0.0L);
  long double total_measured_time = 0.0L;

  // Superposed per-proxy clocks form one Poisson stream at rate m*delta.
  const double repl_rate = std::visit(
      [m](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PerProxyIndependent>)
          return m * v.delta;
        else
          return v.delta;
      },
      cfg.replacement);

  using Event = std::pair<double, int>;  // (time, bot index)

  for (int rep = 0; rep < cfg.replications; ++rep) {
    Rng rng = make_rep_rng(cfg.seed, rep);
    const bool record = (rep == 0);

    std::vector<char> known(static_cast<std::size_t>(m), 0);
    int y = 0;

    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> probes;
    const int n_streams = probing_streams(cfg.probing);
    {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (int b = 0; b < n_streams; ++b) {
        double first;
        if (std::holds_alternative<PoissonAggregate>(cfg.probing) ||
            std::holds_alternative<PerBotExponential>(cfg.probing)) {
          first = sample_interprobe(cfg.probing, rng);  // memoryless
        } else {
          // Random initial phase so streams do not fire in lockstep.
          first = u(rng) * sample_interprobe(cfg.probing, rng);
        }
        probes.emplace(first, b);
      }
    }

    std::exponential_distribution<double> repl_dist(repl_rate);
    double next_repl = repl_dist(rng);

    AssignmentState assign_state(cfg.assignment, m);

    double t_cur = 0.0;
    long double area = 0.0L;       // integral of Y over [warmup, horizon]
    long double area_from0 = 0.0L; // integral of Y from 0, for running avg
    double next_sample = 0.0;
    long double epoch_sum = 0.0L;
    std::uint64_t epoch_count = 0;

    auto advance_to = [&](double t_next) {
      double lo = std::max(t_cur, warmup);
      double hi = std::min(t_next, horizon);
      if (hi > lo) {
        area += static_cast<long double>(y) * (hi - lo);
        occupancy[static_cast<std::size_t>(y)] +=
            static_cast<long double>(hi - lo);
      }
      if (record) {
        double stop = std::min(t_next, horizon);
        while (next_sample <= stop) {
          long double a = area_from0 +
                          static_cast<long double>(y) * (next_sample - t_cur);
          result.trajectory.emplace_back(next_sample, static_cast<double>(y));
          result.running_avg.emplace_back(
              next_sample,
              next_sample > 0.0 ? static_cast<double>(a / next_sample) : 0.0);
          next_sample += sample_dt;
        }
        area_from0 += static_cast<long double>(y) * (stop - t_cur);
      }
      t_cur = t_next;
    };

    for (;;) {
      double next_probe =
          probes.empty() ? std::numeric_limits<double>::infinity()
                         : probes.top().first;
      double t_next = std::min(next_probe, next_repl);
      if (t_next >= horizon) {
        advance_to(horizon);
        break;
      }
      advance_to(t_next);
      if (next_probe <= next_repl) {
        int bot = probes.top().second;
        probes.pop();
        int slot = assign_state.assign(t_next, rng);
        if (!known[static_cast<std::size_t>(slot)]) {
          known[static_cast<std::size_t>(slot)] = 1;
          ++y;
        }
        probes.emplace(t_next + sample_interprobe(cfg.probing, rng), bot);
      } else {
        if (t_next >= warmup) {
          epoch_sum += y;
          ++epoch_count;
          result.epoch_y_samples.push_back(y);
        }
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, AllAtOnce>) {
                std::fill(known.begin(), known.end(), 0);
                y = 0;
              } else if constexpr (std::is_same_v<T, Selective>) {
                std::bernoulli_distribution coin(v.r);
                for (int s = 0; s < m; ++s) {
                  bool replaced = coin(rng);
                  if (replaced && known[static_cast<std::size_t>(s)]) {
                    known[static_cast<std::size_t>(s)] = 0;
                    --y;
                  }
                }
              } else {
                std::uniform_int_distribution<int> d(0, m - 1);
                int s = d(rng);
                if (known[static_cast<std::size_t>(s)]) {
                  known[static_cast<std::size_t>(s)] = 0;
                  --y;
                }
              }
            },
            cfg.replacement);
        next_repl = t_next + repl_dist(rng);
      }
    }

    result.final_y_counts[static_cast<std::size_t>(y)] += 1;
    double measured = horizon - warmup;
    total_measured_time += measured;
    result.per_rep_time_avg.push_back(static_cast<double>(area) / measured);
    if (epoch_count > 0) {
      result.per_rep_epoch_avg.push_back(
          static_cast<double>(epoch_sum / epoch_count));
    }
    result.total_epochs += epoch_count;
  }

  MeanCi tavg = mean_ci(result.per_rep_time_avg);
  result.time_avg_known = tavg.mean;
  result.ci_halfwidth = tavg.halfwidth;
  if (!result.per_rep_epoch_avg.empty()) {
    MeanCi eavg = mean_ci(result.per_rep_epoch_avg);
    result.epoch_avg = eavg.mean;
    result.epoch_ci_halfwidth = eavg.halfwidth;
  }
  if (total_measured_time > 0.0L) {
    for (int i = 0; i <= m; ++i)
      result.empirical_pmf[i] =
          static_cast<double>(occupancy[static_cast<std::size_t>(i)] /
                              total_measured_time);
  }
  result.few_replications_warning = cfg.replications < 30;
  result.insufficient_cycles_warning = result.total_epochs < 1000;
  return result;
}

Pmf empirical_stationary_pmf(const SimResult& result) {
  return result.empirical_pmf;
}

PastaCheck pasta_check(const SimResult& result) {
  return PastaCheck{result.time_avg_known, result.epoch_avg};
}

}  // namespace mtcc
