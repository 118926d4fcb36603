#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "mtcc/analytic.hpp"
#include "mtcc/stirling.hpp"

using namespace mtcc;

namespace {

// Adaptive Simpson quadrature, test-only oracle.
double simpson(const std::function<double(double)>&, double a, double b,
               double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double eps, int depth) {
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  std::function<double(double, double, double, double, double, double, int)>
      rec = [&](double lo, double hi, double flo, double fmid, double fhi,
                double tol, int d) -> double {
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    double flm = f(lm), frm = f(rm);
    double whole = simpson(f, lo, hi, flo, fmid, fhi);
    double left = simpson(f, lo, mid, flo, flm, fmid);
    double right = simpson(f, mid, hi, fmid, frm, fhi);
    if (d <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
      return left + right + (left + right - whole) / 15.0;
    return rec(lo, mid, flo, flm, fmid, tol / 2.0, d - 1) +
           rec(mid, hi, fmid, frm, fhi, tol / 2.0, d - 1);
  };
  return rec(a, b, fa, fm, fb, eps, depth);
}

}  // namespace

TEST_CASE("mean_known_poisson matches the reference ratios") {
  CHECK(mean_known_poisson(ModelParams::from_rho(25, 5.0)) ==
        doctest::Approx(25.0 * 5.0 / 30.0).epsilon(1e-14));
  CHECK(100.0 * mean_known_poisson(ModelParams::from_rho(25, 5.0)) / 25.0 ==
        doctest::Approx(16.6667).epsilon(1e-4));
  CHECK(mean_known_poisson(ModelParams::from_rho(25, 25.0)) ==
        doctest::Approx(12.5).epsilon(1e-14));
  CHECK(mean_known_poisson(ModelParams::from_rho(25, 1e12)) ==
        doctest::Approx(25.0).epsilon(1e-10));
  // m >> rho regime: mean approaches rho.
  CHECK(mean_known_poisson(ModelParams::from_rho(1000000, 10.0)) ==
        doctest::Approx(10.0).epsilon(1e-4));
}

TEST_CASE("mean_known_deterministic") {
  double v = mean_known_deterministic(ModelParams::from_rho(25, 50.0));
  CHECK(v == doctest::Approx(16.611).epsilon(1e-4));
  CHECK(100.0 * v / 25.0 == doctest::Approx(66.44).epsilon(1e-3));
  // m=1 reduces to e^{-1/rho}.
  CHECK(mean_known_deterministic(ModelParams::from_rho(1, 2.0)) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  // Large-rho asymptotics: ratio to the Poisson mean tends to 1.
  double det = mean_known_deterministic(ModelParams::from_rho(25, 1e6));
  double poi = mean_known_poisson(ModelParams::from_rho(25, 1e6));
  CHECK(det / poi == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("deterministic mean never exceeds poisson mean") {
  for (int m : {2, 3, 10, 25, 100, 1000}) {
    for (double rho : {0.1, 0.5, 1.0, 5.0, 50.0, 500.0}) {
      CHECK(mean_known_deterministic(ModelParams::from_rho(m, rho)) <=
            mean_known_poisson(ModelParams::from_rho(m, rho)) + 1e-12);
    }
  }
}

TEST_CASE("mean_known_selective") {
  CHECK(mean_known_selective(ModelParams::from_rho(25, 50.0, 1.0)) ==
        doctest::Approx(mean_known_poisson(ModelParams::from_rho(25, 50.0)))
            .epsilon(1e-14));
  CHECK(mean_known_selective(ModelParams::from_rho(25, 50.0, 0.0)) ==
        doctest::Approx(25.0).epsilon(1e-14));
  CHECK(mean_known_selective(ModelParams::from_rho(25, 50.0, 0.5)) ==
        doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("mean_known_selective monotonicity") {
  double prev_r = 1e18;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double v = mean_known_selective(ModelParams::from_rho(25, 10.0, r));
    CHECK(v <= prev_r);
    prev_r = v;
  }
  double prev_rho = -1.0;
  for (double rho : {1.0, 2.0, 5.0, 20.0, 100.0}) {
    double v = mean_known_selective(ModelParams::from_rho(25, rho, 0.4));
    CHECK(v >= prev_rho);
    prev_rho = v;
  }
}

TEST_CASE("k pmf under deterministic probing") {
  double rho = 50.0;
  CHECK(k_pmf_deterministic(rho, 0) ==
        doctest::Approx(1.0 - std::exp(-1.0 / rho)).epsilon(1e-14));
  double sum = 0.0;
  for (int k = 0; k < 10000; ++k) sum += k_pmf_deterministic(rho, k);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k_pmf_deterministic(1.0, 1) ==
        doctest::Approx(std::exp(-1.0) * (1.0 - std::exp(-1.0)))
            .epsilon(1e-12));
}

TEST_CASE("k pmf under poisson probing") {
  CHECK(k_pmf_poisson(3.0, 0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(k_pmf_poisson(1.0, 2) == doctest::Approx(0.125).epsilon(1e-14));
  double mean = 0.0;
  for (int k = 0; k < 4000; ++k) mean += k * k_pmf_poisson(10.0, k);
  CHECK(mean == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("conditional mean given cycle length") {
  CHECK(conditional_mean_given_T(25, 2.0, 0.0) == 0.0);
  CHECK(conditional_mean_given_T(25, 2.0, 1e9) ==
        doctest::Approx(25.0).epsilon(1e-12));
  // Averaging over T ~ exp(delta) must reproduce the Poisson mean.
  int m = 25;
  double beta = 5.0, delta = 0.1;
  std::function<double(double)> f = [&](double t) {
    return conditional_mean_given_T(m, beta, t) * delta *
           std::exp(-delta * t);
  };
  double integral = adaptive_simpson(f, 0.0, 40.0 / delta, 1e-9, 40);
  double target =
      mean_known_poisson(ModelParams{m, beta, delta, 1.0});
  CHECK(integral == doctest::Approx(target).epsilon(1e-6));
}

TEST_CASE("stationary pmf: mass(0) and mean") {
  for (double rho : {0.5, 1.0, 5.0, 50.0}) {
    Pmf pmf = stationary_pmf_poisson(ModelParams::from_rho(25, rho));
    CHECK(pmf[0] == doctest::Approx(1.0 / (rho + 1.0)).epsilon(1e-10));
  }
  for (int m : {2, 25, 100, 1000}) {
    for (double rho : {1.0, 5.0, 50.0, 500.0}) {
      double raw = 0.0;
      Pmf pmf = stationary_pmf_poisson(ModelParams::from_rho(m, rho), &raw);
      CHECK(std::fabs(raw - 1.0) <= 1e-10);
      CHECK(std::fabs(pmf.mean() -
                      mean_known_poisson(ModelParams::from_rho(m, rho))) <=
            1e-8);
    }
  }
}

TEST_CASE("stationary pmf matches the geometric mixture oracle") {
  int m = 2;
  double rho = 1.0;
  Pmf pmf = stationary_pmf_poisson(ModelParams::from_rho(m, rho));
  std::vector<double> mix(static_cast<std::size_t>(m) + 1, 0.0);
  for (int k = 0; k <= 200; ++k) {
    Pmf dk = distinct_type_pmf(m, k);
    double w = k_pmf_poisson(rho, k);
    for (int l = 0; l <= m; ++l) mix[static_cast<std::size_t>(l)] += w * dk[l];
  }
  for (int l = 0; l <= m; ++l)
    CHECK(std::fabs(pmf[l] - mix[static_cast<std::size_t>(l)]) <= 1e-8);
}

TEST_CASE("prob_fraction_not_found") {
  // rho -> 0: nothing is found.
  CHECK(prob_fraction_not_found(ModelParams::from_rho(1000, 1e-3), 0.2) >
        0.999);
  // rho huge: the lower tail decays like (H_m - H_{0.2m}) / rho because a
  // replacement resets Y to zero and the climb back spends ~ln(5)/beta of
  // each cycle below 800. Cross-check against the geometric-K estimate
  // P(K < m ln 5) ~= m ln 5 / rho.
  double tail = prob_fraction_not_found(ModelParams::from_rho(1000, 1e5), 0.2);
  CHECK(tail == doctest::Approx(1000.0 * std::log(5.0) / 1e5).epsilon(0.02));
  CHECK(prob_fraction_not_found(ModelParams::from_rho(1000, 1e7), 0.2) <
        2e-4);
  double prev = 2.0;
  for (double rho : {100.0, 500.0, 1000.0, 4000.0, 16000.0}) {
    double p = prob_fraction_not_found(ModelParams::from_rho(1000, rho), 0.2);
    CHECK(p <= prev + 1e-12);
    prev = p;
  }
  CHECK_THROWS_AS(
      prob_fraction_not_found(ModelParams::from_rho(10, 1.0), 0.0),
      ConfigError);
}

TEST_CASE("expected_y_after_k") {
  CHECK(expected_y_after_k(25, 0, 7.5) == doctest::Approx(7.5));
  CHECK(expected_y_after_k(25, 100000, 0.0) ==
        doctest::Approx(25.0).epsilon(1e-10));
  double v = expected_y_after_k(25, 25, 0.0);
  CHECK(v == doctest::Approx(25.0 * (1.0 - std::pow(0.96, 25)))
                 .epsilon(1e-12));
  CHECK(v == doctest::Approx(16.00).epsilon(1e-3));
  // Monte Carlo cross-check: 1e5 draws of 25 uniform selections from 25.
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> d(0, 24);
  long long total = 0;
  const int runs = 100000;
  for (int i = 0; i < runs; ++i) {
    unsigned mask_count = 0;
    bool seen[25] = {};
    for (int k = 0; k < 25; ++k) {
      int s = d(rng);
      if (!seen[s]) {
        seen[s] = true;
        ++mask_count;
      }
    }
    total += mask_count;
  }
  double mc = static_cast<double>(total) / runs;
  CHECK(mc == doctest::Approx(v).epsilon(0.005));
}

TEST_CASE("clt approximation") {
  // sigma = 0 closed form.
  CltParams p0{ModelParams{25, 50.0, 1.0, 1.0}, 0.0};
  double v = p0.v();
  CHECK(clt_mean_approx(p0) ==
        doctest::Approx(25.0 * (1.0 - 1.0 / (1.0 + 50.0 * v)))
            .epsilon(1e-12));
  // sigma = 0, m = rho = 1000: agrees with the deterministic closed form
  // within 0.5% relative.
  CltParams p1{ModelParams{1000, 1000.0, 1.0, 1.0}, 0.0};
  double det = mean_known_deterministic(ModelParams::from_rho(1000, 1000.0));
  CHECK(std::fabs(clt_mean_approx(p1) - det) / det < 0.005);
  // Monotone decreasing in sigma within the validity region.
  CltParams base{ModelParams{25, 2.0, 0.1, 1.0}, 0.0};
  double prev = 1e18;
  for (double s : {0.0, 0.1, 0.2, 0.3}) {
    CltParams p = base;
    p.sigma = s;
    double mv = clt_mean_approx(p);
    CHECK(mv < prev);
    prev = mv;
  }
  // Validity violation raises.
  CltParams bad{ModelParams{25, 2.0, 0.1, 1.0}, 100.0};
  CHECK_THROWS_AS(clt_mean_approx(bad), ValidityError);
}
