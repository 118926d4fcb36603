#include "mtcc/analytic.hpp"

#include <cmath>

namespace mtcc {

double mean_known_poisson(const ModelParams& params) {
  params.validate();
  double rho = params.rho();
  return params.m * rho / (params.m + rho);
}

double mean_known_deterministic(const ModelParams& params) {
  params.validate();
  double rho = params.rho();
  return 1.0 / (std::exp(1.0 / rho) - (1.0 - 1.0 / params.m));
}

double mean_known_selective(const ModelParams& params) {
  params.validate();
  double rho = params.rho();
  return params.m * rho / (params.r * params.m + rho);
}

double k_pmf_deterministic(double rho, int k) {
  if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
  if (k < 0) return 0.0;
  return std::exp(-k / rho) * (-std::expm1(-1.0 / rho));
}

double k_pmf_poisson(double rho, int k) {
  if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
  if (k < 0) return 0.0;
  return std::exp(k * (std::log(rho) - std::log1p(rho)) - std::log1p(rho));
}

double conditional_mean_given_T(int m, double beta, double T) {
  if (m < 1) throw ConfigError("m must be >= 1");
  if (T < 0.0) throw ConfigError("T must be >= 0");
  return m * (-std::expm1(-beta * T / m));
}

Pmf stationary_pmf_poisson(const ModelParams& params, double* raw_sum) {
  params.validate();
  const int m = params.m;
  const double rho = params.rho();
  // P(Y = l) = (m/rho) (m)_l / (a)_{l+1} with a = m(rho+1)/rho; the
  // printed m/(m-l) factor is cancelled against the last numerator term
  // of the telescoping product so l = m stays finite.
  const double log_a_base = std::log(static_cast<double>(m)) +
                            std::log1p(rho) - std::log(rho);
  Pmf pmf(m);
  long double log_num = 0.0L;    // ln (m)_l
  long double log_den = 0.0L;    // ln (a)_{l+1}
  const double log_pref = std::log(static_cast<double>(m)) - std::log(rho);
  for (int l = 0; l <= m; ++l) {
    if (l > 0) log_num += std::log(static_cast<long double>(m - l + 1));
    // a - l written as (m - l) + m/rho to avoid cancellation near l = m.
    log_den += (l == 0)
                   ? static_cast<long double>(log_a_base)
                   : std::log(static_cast<long double>(m - l) +
                              static_cast<long double>(m) / rho);
    pmf[l] = std::exp(static_cast<double>(log_pref + log_num - log_den));
  }
  double raw = pmf.sum();
  if (raw_sum != nullptr) *raw_sum = raw;
  if (std::fabs(raw - 1.0) > 1e-8)
    throw PrecisionError("stationary_pmf_poisson: normalization drifted to " +
                         std::to_string(raw));
  pmf.normalize();
  return pmf;
}

double prob_fraction_not_found(const ModelParams& params, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw ConfigError("fraction must be in (0,1)");
  Pmf pmf = stationary_pmf_poisson(params);
  int cutoff =
      static_cast<int>(std::floor((1.0 - fraction) * params.m + 1e-9));
  long double s = 0.0L;
  for (int l = 0; l <= std::min(cutoff, params.m); ++l) s += pmf[l];
  return static_cast<double>(s);
}

double expected_y_after_k(int m, int k, double y0) {
  if (m < 1) throw ConfigError("m must be >= 1");
  if (k < 0) throw ConfigError("k must be >= 0");
  if (y0 < 0.0 || y0 > m) throw ConfigError("y0 must be in [0,m]");
  double decay = std::pow(1.0 - 1.0 / m, k);
  return m * (1.0 - decay) + decay * y0;
}

double clt_mean_approx(const CltParams& params) {
  params.validate();
  const double v = params.v();
  const double beta = params.base.beta;
  const double delta = params.base.delta;
  if (!(1.0 / beta > params.sigma * std::sqrt(v / 2.0)))
    throw ValidityError(
        "clt_mean_approx: requires 1/beta > sigma*sqrt(v/2)");
  double denom = delta + beta * v -
                 params.sigma * params.sigma * beta * beta * beta * v * v / 2.0;
  return params.base.m * (1.0 - delta / denom);
}

}  // namespace mtcc
