#include "mtcc/markov.hpp"

#include <cmath>

namespace mtcc {

namespace {

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void set_diagonal(Generator& g) {
  for (int i = 0; i <= g.m; ++i) {
    g.rates(i, i) = 0.0;
    g.rates(i, i) = -g.rates.row(i).sum();
  }
}

}  // namespace

Generator build_selective_generator(const ModelParams& params) {
  params.validate();
  const int m = params.m;
  Generator g;
  g.m = m;
  g.rates = Eigen::MatrixXd::Zero(m + 1, m + 1);
  for (int k = 0; k < m; ++k)
    g.rates(k, k + 1) = (static_cast<double>(m - k) / m) * params.beta;
  const double r = params.r;
  for (int l = 1; l <= m; ++l) {
    for (int k = 0; k < l; ++k) {
      double rate;
      if (r == 0.0) {
        rate = 0.0;
      } else if (r == 1.0) {
        rate = (k == 0) ? params.delta : 0.0;
      } else {
        rate = params.delta *
               std::exp(log_choose(l, k) + (l - k) * std::log(r) +
                        k * std::log1p(-r));
      }
      g.rates(l, k) = rate;
    }
  }
  set_diagonal(g);
  return g;
}

Generator build_birth_death_generator(const ModelParams& params) {
  params.validate();
  const int m = params.m;
  Generator g;
  g.m = m;
  g.rates = Eigen::MatrixXd::Zero(m + 1, m + 1);
  for (int k = 0; k < m; ++k)
    g.rates(k, k + 1) = (static_cast<double>(m - k) / m) * params.beta;
  for (int l = 1; l <= m; ++l) g.rates(l, l - 1) = params.delta * l;
  set_diagonal(g);
  return g;
}

Pmf stationary_distribution(const Generator& g) {
  const int n = g.m + 1;
  // pi^T Q = 0  <=>  Q^T pi = 0; replace the last balance equation with
  // the normalization constraint.
  Eigen::MatrixXd A = g.rates.transpose();
  A.row(n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(n - 1) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (lu.rank() < n)
    throw SingularityError(
        "stationary_distribution: generator null space has dimension > 1");
  Eigen::VectorXd pi = lu.solve(b);
  Pmf pmf(g.m);
  for (int i = 0; i < n; ++i) {
    double v = pi(i);
    if (v < 0.0) {
      if (v < -1e-12)
        throw SingularityError(
            "stationary_distribution: negative probability " +
            std::to_string(v));
      v = 0.0;
    }
    pmf[i] = v;
  }
  pmf.normalize();
  return pmf;
}

Pmf birth_death_closed_form(const ModelParams& params) {
  params.validate();
  const int m = params.m;
  const double rho = params.rho();
  // Binomial(m, p), p = rho/(m+rho).
  const double log_p = std::log(rho) - std::log(m + rho);
  const double log_q = std::log(static_cast<double>(m)) - std::log(m + rho);
  Pmf pmf(m);
  for (int k = 0; k <= m; ++k)
    pmf[k] = std::exp(log_choose(m, k) + k * log_p + (m - k) * log_q);
  pmf.normalize();
  return pmf;
}

}  // namespace mtcc
