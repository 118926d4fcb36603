// Continuous-time Markov chains on {0,...,m} for the number of identities
// known: generator construction and stationary-distribution solving.

#ifndef MTCC_MARKOV_HPP
#define MTCC_MARKOV_HPP

#include <Eigen/Dense>

#include "mtcc/types.hpp"

namespace mtcc {

// Dense CTMC generator: off-diagonals >= 0, rows sum to zero.
struct Generator {
  int m = 0;
  Eigen::MatrixXd rates;  // (m+1) x (m+1)

  double q(int i, int j) const { return rates(i, j); }
};

// Upward rates q(k,k+1) = ((m-k)/m) beta; downward rates
// q(l,k) = delta C(l,k) r^{l-k} (1-r)^k for 0 <= k < l. The vacuous
// self-transition term (k = l) of the binomial kernel is dropped.
Generator build_selective_generator(const ModelParams& params);

// Birth-death variant: upward rates as above, downward q(l,l-1) = delta*l
// (one independent replacement clock per identity).
Generator build_birth_death_generator(const ModelParams& params);

// Solves pi^T Q = 0, sum(pi) = 1 by dense linear algebra (one balance
// equation replaced by the normalization row). Entries in [-1e-12, 0) are
// clamped to 0; anything lower raises SingularityError, as does a
// null space of dimension > 1.
Pmf stationary_distribution(const Generator& g);

// Closed-form stationary law of the birth-death chain:
// Binomial(m, rho/(m+rho)), computed in log space.
Pmf birth_death_closed_form(const ModelParams& params);

}  // namespace mtcc

#endif  // MTCC_MARKOV_HPP
