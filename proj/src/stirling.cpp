#include "mtcc/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mtcc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow.
double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double hi = std::max(a, b);
  double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

// Beyond this k the log-space recurrence is replaced by the asymptotic
// form; relative error of the asymptote at fixed y decays like (1-1/y)^k.
constexpr int kAsymptoticCutoff = 20000;

}  // namespace

StirlingTable::StirlingTable(int max_k) {
  if (max_k < 0) throw ConfigError("StirlingTable: max_k must be >= 0");
  rows_.resize(static_cast<std::size_t>(max_k) + 1);
  rows_[0] = {BigInt(1)};
  for (int k = 1; k <= max_k; ++k) {
    auto& row = rows_[static_cast<std::size_t>(k)];
    const auto& prev = rows_[static_cast<std::size_t>(k - 1)];
    row.resize(static_cast<std::size_t>(k) + 1);
    row[0] = 0;
    for (int y = 1; y <= k; ++y) {
      BigInt up = (y < k) ? prev[static_cast<std::size_t>(y)] : BigInt(0);
      row[static_cast<std::size_t>(y)] =
          y * up + prev[static_cast<std::size_t>(y - 1)];
    }
  }
}

const BigInt& StirlingTable::at(int k, int y) const {
  if (k < 0 || k > max_k()) throw ConfigError("StirlingTable: k out of range");
  if (y < 0 || y > k) return zero_;
  return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)];
}

BigInt stirling2_exact(int k, int y) {
  if (k < 0 || y < 0) throw ConfigError("stirling2_exact: negative argument");
  if (y > k) return 0;
  if (k == 0) return 1;  // {0 brace 0}
  if (y == 0) return 0;
  // One rolling row keeps memory linear in k.
  std::vector<BigInt> row = {BigInt(1)};  // k = 0
  for (int kk = 1; kk <= k; ++kk) {
    std::vector<BigInt> next(static_cast<std::size_t>(std::min(kk, y)) + 1);
    next[0] = 0;
    for (int yy = 1; yy <= std::min(kk, y); ++yy) {
      BigInt up = (yy < static_cast<int>(row.size()))
                      ? row[static_cast<std::size_t>(yy)]
                      : BigInt(0);
      BigInt diag = (yy - 1 < static_cast<int>(row.size()))
                        ? row[static_cast<std::size_t>(yy - 1)]
                        : BigInt(0);
      next[static_cast<std::size_t>(yy)] = yy * up + diag;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(y)];
}

double stirling2_asymptotic_fixed_y(int k, int y) {
  if (y < 1) throw ConfigError("stirling2_asymptotic_fixed_y: y must be >= 1");
  return k * std::log(static_cast<double>(y)) -
         std::lgamma(static_cast<double>(y) + 1.0);
}

double log_stirling2(int k, int y) {
  if (y < 1 || y > k)
    throw std::domain_error("log_stirling2: requires 1 <= y <= k");
  if (y == k || y == 1) return 0.0;  // {k brace k} = {k brace 1} = 1
  if (k > kAsymptoticCutoff) return stirling2_asymptotic_fixed_y(k, y);
  // Log-space rolling-row recurrence.
  std::vector<double> row = {0.0};  // log {1 brace 1}
  for (int kk = 2; kk <= k; ++kk) {
    int ymax = std::min(kk, y);
    std::vector<double> next(static_cast<std::size_t>(ymax));
    for (int yy = 1; yy <= ymax; ++yy) {
      double up = (yy - 1 < static_cast<int>(row.size()))
                      ? std::log(static_cast<double>(yy)) +
                            row[static_cast<std::size_t>(yy - 1)]
                      : kNegInf;
      double diag = (yy - 2 >= 0 && yy - 2 < static_cast<int>(row.size()))
                        ? row[static_cast<std::size_t>(yy - 2)]
                        : (yy == 1 ? kNegInf : kNegInf);
      if (yy == 1) diag = kNegInf;  // {k-1 brace 0} = 0 for k-1 >= 1
      next[static_cast<std::size_t>(yy - 1)] = log_add(up, diag);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(y - 1)];
}

Pmf distinct_type_pmf(int m, int k) {
  if (m < 1) throw ConfigError("distinct_type_pmf: m must be >= 1");
  if (k < 0) throw ConfigError("distinct_type_pmf: k must be >= 0");
  Pmf pmf(m);
  if (k == 0) {
    pmf[0] = 1.0;
    return pmf;
  }
  const int ymax = std::min(k, m);
  const double log_m = std::log(static_cast<double>(m));

  if (k * log_m <= 700.0) {
    // Exact path: big-integer counts divided pairwise, no cancellation.
    StirlingTable table(k);
    BigInt mk = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(k));
    BigInt falling = 1;
    long double denom = static_cast<long double>(mk);
    for (int y = 1; y <= ymax; ++y) {
      falling *= (m - y + 1);
      BigInt count = falling * table.at(k, y);
      pmf[y] = static_cast<double>(static_cast<long double>(count) / denom);
    }
  } else {
    // Log-space path for large m^k.
    long double log_falling = 0.0L;  // ln (m)_y, accumulated
    for (int y = 1; y <= ymax; ++y) {
      log_falling += std::log(static_cast<long double>(m - y + 1));
      double lv = static_cast<double>(log_falling) + log_stirling2(k, y) -
                  k * log_m;
      pmf[y] = std::exp(lv);
    }
  }

  double raw = pmf.sum();
  if (std::fabs(raw - 1.0) > 1e-8)
    throw PrecisionError("distinct_type_pmf: normalization drifted to " +
                         std::to_string(raw));
  pmf.normalize();
  return pmf;
}

}  // namespace mtcc
