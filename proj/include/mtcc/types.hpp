// Shared domain types: model parameters and probability mass functions.

#ifndef MTCC_TYPES_HPP
#define MTCC_TYPES_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtcc {

// Raised when a numerical routine detects loss of precision beyond its
// contract (e.g. a pmf whose raw normalization drifts too far from 1).
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an approximation is evaluated outside its regime of validity.
struct ValidityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on invalid scenario/parameter configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a linear system is rank-deficient beyond the expected
// one-dimensional null space of a CTMC generator.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The tuple (m, beta, delta, r): m proxy identities, aggregate probe rate
// beta, replacement rate delta, per-identity replacement probability r.
struct ModelParams {
  int m = 1;
  double beta = 1.0;
  double delta = 1.0;
  double r = 1.0;

  double rho() const { return beta / delta; }

  // Convenience for analytic work where only the ratio matters.
  static ModelParams from_rho(int m, double rho, double r = 1.0) {
    ModelParams p;
    p.m = m;
    p.beta = rho;
    p.delta = 1.0;
    p.r = r;
    return p;
  }

  void validate() const {
    if (m < 1) throw ConfigError("m must be >= 1");
    if (!(beta > 0.0)) throw ConfigError("beta must be > 0");
    if (!(delta > 0.0)) throw ConfigError("delta must be > 0");
    if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("r must be in [0,1]");
  }
};

// Probability mass function on {0,...,m}.
class Pmf {
 public:
  explicit Pmf(int m) : mass_(static_cast<std::size_t>(m) + 1, 0.0) {}

  int support_max() const { return static_cast<int>(mass_.size()) - 1; }

  double operator[](int i) const { return mass_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return mass_[static_cast<std::size_t>(i)]; }

  const std::vector<double>& mass() const { return mass_; }

  double sum() const {
    long double s = 0.0L;
    for (double v : mass_) s += v;
    return static_cast<double>(s);
  }

  double mean() const {
    long double s = 0.0L;
    for (std::size_t i = 0; i < mass_.size(); ++i)
      s += static_cast<long double>(i) * mass_[i];
    return static_cast<double>(s);
  }

  int argmax() const {
    int best = 0;
    for (int i = 1; i <= support_max(); ++i)
      if (mass_[static_cast<std::size_t>(i)] >
          mass_[static_cast<std::size_t>(best)])
        best = i;
    return best;
  }

  void normalize() {
    double s = sum();
    if (!(s > 0.0)) throw PrecisionError("pmf has zero total mass");
    for (double& v : mass_) v /= s;
  }

 private:
  std::vector<double> mass_;
};

}  // namespace mtcc

#endif  // MTCC_TYPES_HPP
