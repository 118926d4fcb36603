// Closed-form stationary means, distributions, and approximations for the
// adversarial coupon-collector model of proxy reconnaissance.

#ifndef MTCC_ANALYTIC_HPP
#define MTCC_ANALYTIC_HPP

#include "mtcc/types.hpp"

namespace mtcc {

// Parameters for the renewal-CLT approximation: sigma is the standard
// deviation of the (aggregate) inter-probe time, v = -ln(1 - 1/m).
struct CltParams {
  ModelParams base;
  double sigma = 0.0;

  double v() const { return -std::log1p(-1.0 / base.m); }

  void validate() const {
    base.validate();
    if (sigma < 0.0) throw ConfigError("sigma must be >= 0");
  }
};

// Stationary mean number of currently valid identities known, Poisson
// probing and Poisson all-at-once replacement: m*rho/(m+rho).
double mean_known_poisson(const ModelParams& params);

// Same under deterministically periodic probing: 1/(e^{1/rho} - (1-1/m)).
double mean_known_deterministic(const ModelParams& params);

// Selective replacement with per-identity probability r: m*rho/(r*m+rho).
double mean_known_selective(const ModelParams& params);

// Pmf of K, the number of probes per replacement cycle, under periodic
// probing: e^{-k/rho} (1 - e^{-1/rho}).
double k_pmf_deterministic(double rho, int k);

// Pmf of K under Poisson probing: (rho/(rho+1))^k / (rho+1).
double k_pmf_poisson(double rho, int k);

// Mean identities known after a cycle of fixed length T under Poisson
// probing: m (1 - e^{-beta T / m}).
double conditional_mean_given_T(int m, double beta, double T);

// Stationary distribution of Y under Poisson probing and all-at-once
// replacement, computed in log space with the (m-l) singularity cancelled
// analytically. If raw_sum is non-null it receives the pre-normalization
// total mass.
Pmf stationary_pmf_poisson(const ModelParams& params,
                           double* raw_sum = nullptr);

// P(at least `fraction` of the m identities are unknown in steady state)
// = P(Y <= floor((1-fraction) m)).
double prob_fraction_not_found(const ModelParams& params, double fraction);

// E Y(k) = m (1 - (1-1/m)^k) + (1-1/m)^k y0.
double expected_y_after_k(int m, int k, double y0);

// Renewal-CLT approximation m (1 - delta/(delta + beta v - sigma^2 beta^3
// v^2 / 2)). Throws ValidityError when 1/beta <= sigma*sqrt(v/2).
double clt_mean_approx(const CltParams& params);

}  // namespace mtcc

#endif  // MTCC_ANALYTIC_HPP
