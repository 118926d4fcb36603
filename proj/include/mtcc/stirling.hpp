// Stirling numbers of the second kind {k brace y}: exact big-integer,
// log-space, and fixed-y asymptotic computation, plus the distribution of
// the number of distinct types obtained from k uniform selections among m.

#ifndef MTCC_STIRLING_HPP
#define MTCC_STIRLING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "mtcc/types.hpp"

namespace mtcc {

using BigInt = boost::multiprecision::cpp_int;

// Triangular table of {k brace y} built from the additive recurrence
// {k brace y} = y {k-1 brace y} + {k-1 brace y-1}. Immutable after build.
class StirlingTable {
 public:
  explicit StirlingTable(int max_k);

  int max_k() const { return static_cast<int>(rows_.size()) - 1; }

  // {k brace y}; zero when y > k or y < 0.
  const BigInt& at(int k, int y) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

// Exact {k brace y} via the recurrence; 0 when y > k.
BigInt stirling2_exact(int k, int y);

// ln {k brace y}, 1 <= y <= k, via a log-space version of the recurrence.
// Falls back to the fixed-y asymptotic form for very large k.
double log_stirling2(int k, int y);

// Asymptotic log value k*ln(y) - ln(y!) for fixed y, large k.
double stirling2_asymptotic_fixed_y(int k, int y);

// Distribution of the number of distinct types among m obtained after k
// uniform selections with replacement: mass(y) = (m)_y {k brace y} / m^k.
Pmf distinct_type_pmf(int m, int k);

}  // namespace mtcc

#endif  // MTCC_STIRLING_HPP
