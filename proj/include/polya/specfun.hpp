#pragma once

#include <vector>

namespace polya::specfun {

/// Order and index of a Bessel zero. Validated on construction.
struct ZeroRequest {
  double order;
  int index;

  ZeroRequest(double order, int index);
};

/// ln Gamma(x) for finite x > 0.
double ln_gamma(double x);

/// Gamma(two_x / 2) for two_x >= 1, by the recurrence from Gamma(1/2) = sqrt(pi)
/// and Gamma(1) = 1. Overflows to +inf past two_x = 343.
double gamma_half_integer(int two_x);

/// Bessel function of the first kind J_nu(x), nu >= 0, x >= 0.
double bessel_j(double nu, double x);

/// Derivative J'_nu(x) for x > 0, from the three-term recurrence.
double bessel_j_prime(double nu, double x);

/// k-th positive zero j_{nu,k} of J_nu.
///
/// Uses the McMahon expansion when it is accurate to a small fraction of the zero
/// spacing; otherwise counts sign changes upward from x = nu, where J_nu is still
/// positive. Either way the result is polished by safeguarded Newton inside a
/// verified sign-change bracket. Throws NumericFailure if no bracket is found.
double bessel_zero(double nu, int k);
double bessel_zero(const ZeroRequest& request);

/// k-th positive zero j'_{nu,k} of J'_nu. x = 0 is never counted, including for
/// nu = 0 where J'_0(0) = 0.
double bessel_prime_zero(double nu, int k);
double bessel_prime_zero(const ZeroRequest& request);

/// All positive zeros of J_nu strictly below x_max, ascending.
std::vector<double> bessel_zeros_below(double nu, double x_max);

/// All positive zeros of J'_nu strictly below x_max, ascending (x = 0 excluded).
std::vector<double> bessel_prime_zeros_below(double nu, double x_max);

namespace detail {

// Scan-only paths, exposed so tests can compare them with the McMahon path.
double bessel_zero_by_scan(double nu, int k);
double bessel_prime_zero_by_scan(double nu, int k);

// McMahon initial guesses.
double mcmahon_zero(double nu, int k);
double mcmahon_prime_zero(double nu, int k);

}  // namespace detail

}  // namespace polya::specfun
