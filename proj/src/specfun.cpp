#include "polya/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "polya/errors.hpp"

namespace polya::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Consecutive zeros of J_nu and J'_nu are never closer than about 3 for nu >= 0,
// so a step of pi/4 puts at most one zero in each scan interval.
constexpr double kScanStep = kPi / 4.0;

// Scanning gives up well past any zero a caller can reasonably ask for.
constexpr double kScanLimit = 1.0e7;

void require_order(double nu, const char* what) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw DomainError(std::string(what) + ": order must be finite and >= 0, got " +
                      std::to_string(nu));
  }
}

void require_index(int k, const char* what) {
  if (k < 1) {
    throw DomainError(std::string(what) + ": zero index must be >= 1, got " + std::to_string(k));
  }
}

double j_raw(double nu, double x) { return boost::math::cyl_bessel_j(nu, x); }

double j_prime_raw(double nu, double x) {
  if (nu == 0.0) return -j_raw(1.0, x);
  if (nu >= 1.0) return j_raw(nu - 1.0, x) - (nu / x) * j_raw(nu, x);
  return (nu / x) * j_raw(nu, x) - j_raw(nu + 1.0, x);
}

// From Bessel's equation: x^2 J'' + x J' + (x^2 - nu^2) J = 0.
double j_second_raw(double nu, double x) {
  return -j_prime_raw(nu, x) / x - (1.0 - (nu * nu) / (x * x)) * j_raw(nu, x);
}

// Safeguarded Newton on a bracket [lo, hi] where f changes sign. flo is f(lo).
template <class F, class DF>
double polish_root(F&& f, DF&& df, double lo, double hi, double flo) {
  const bool lo_positive = flo > 0.0;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == lo_positive) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = df(x);
    double next = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 2.0 * kEps * std::abs(next) || (hi - lo) <= 4.0 * kEps * hi) {
      return next;
    }
    x = next;
  }
  throw NumericFailure("root polishing did not converge in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
}

// Walks upward from x0 (where f(x0) != 0) and calls visit(lo, hi, f(lo)) for every
// sign change until visit returns false or x_end is reached.
template <class F, class Visit>
void scan_sign_changes(F&& f, double x0, double x_end, Visit&& visit) {
  double a = x0;
  double fa = f(a);
  if (fa == 0.0 || !std::isfinite(fa)) {
    throw NumericFailure("zero scan started on a root or non-finite value at x = " +
                         std::to_string(x0));
  }
  while (a < x_end) {
    const double b = std::min(a + kScanStep, x_end);
    const double fb = f(b);
    if (!std::isfinite(fb)) {
      throw NumericFailure("non-finite Bessel value during zero scan at x = " + std::to_string(b));
    }
    if (fb == 0.0) {
      // Exact hit: report a degenerate bracket; simple zeros flip the sign.
      if (!visit(b, b, fa)) return;
      fa = -fa;
      a = b;
      continue;
    }
    if ((fa > 0.0) != (fb > 0.0)) {
      if (!visit(a, b, fa)) return;
    }
    a = b;
    fa = fb;
  }
}

struct JFunction {
  double nu;
  double operator()(double x) const { return j_raw(nu, x); }
};
struct JDerivative {
  double nu;
  double operator()(double x) const { return j_prime_raw(nu, x); }
};
struct JSecond {
  double nu;
  double operator()(double x) const { return j_second_raw(nu, x); }
};

// J_nu > 0 on (0, j_{nu,1}) and j_{nu,1} > nu.
double zero_scan_start(double nu) { return nu > 0.0 ? nu : 1.0e-3; }

// J'_nu > 0 on (0, j'_{nu,1}) for nu > 0 and j'_{nu,1} > sqrt(nu (nu + 2)).
// J'_0 = -J_1 < 0 on (0, j_{1,1}).
double prime_zero_scan_start(double nu) {
  return nu > 0.0 ? 0.9 * std::sqrt(nu * (nu + 2.0)) : 0.5;
}

template <class F, class DF>
std::vector<double> zeros_below(F f, DF df, double x0, double x_max) {
  std::vector<double> out;
  if (!(x_max > x0)) return out;
  scan_sign_changes(f, x0, x_max, [&](double lo, double hi, double flo) {
    const double root = (lo == hi) ? lo : polish_root(f, df, lo, hi, flo);
    if (root < x_max) out.push_back(root);
    return true;
  });
  return out;
}

template <class F, class DF>
double kth_zero_by_scan(F f, DF df, double x0, int k) {
  int found = 0;
  double result = std::numeric_limits<double>::quiet_NaN();
  scan_sign_changes(f, x0, kScanLimit, [&](double lo, double hi, double flo) {
    if (++found < k) return true;
    result = (lo == hi) ? lo : polish_root(f, df, lo, hi, flo);
    return false;
  });
  if (found < k) {
    throw NumericFailure("zero index " + std::to_string(k) + " not bracketed below x = " +
                         std::to_string(kScanLimit));
  }
  return result;
}

// The McMahon expansion is trusted only when its corrections are far smaller
// than the zero spacing.
bool mcmahon_reliable(double nu, double beta) {
  const double mu = 4.0 * nu * nu;
  return beta >= std::max(mu, 10.0);
}

// Tries to certify the zero closest to guess; returns NaN when the bracket
// around the guess does not contain a sign change.
template <class F, class DF>
double polish_near(F f, DF df, double guess) {
  constexpr double half_width = 0.5;
  const double lo = guess - half_width;
  const double hi = guess + half_width;
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return polish_root(f, df, lo, hi, flo);
}

}  // namespace

ZeroRequest::ZeroRequest(double order, int index) : order(order), index(index) {
  require_order(order, "ZeroRequest");
  require_index(index, "ZeroRequest");
}

double ln_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("ln_gamma: argument must be finite and > 0, got " + std::to_string(x));
  }
  return boost::math::lgamma(x);
}

double gamma_half_integer(int two_x) {
  if (two_x < 1) {
    throw DomainError("gamma_half_integer: two_x must be >= 1, got " + std::to_string(two_x));
  }
  if (two_x % 2 == 0) {
    // Gamma(m) = (m - 1)!
    const int m = two_x / 2;
    double value = 1.0;
    for (int i = 2; i < m; ++i) value *= i;
    return value;
  }
  // Gamma(m + 1/2) = sqrt(pi) * prod_{i=1}^{m} (i - 1/2)
  const int m = two_x / 2;
  double value = std::sqrt(kPi);
  for (int i = 1; i <= m; ++i) value *= (i - 0.5);
  return value;
}

double bessel_j(double nu, double x) {
  require_order(nu, "bessel_j");
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("bessel_j: argument must be finite and >= 0, got " + std::to_string(x));
  }
  return j_raw(nu, x);
}

double bessel_j_prime(double nu, double x) {
  require_order(nu, "bessel_j_prime");
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("bessel_j_prime: argument must be finite and > 0, got " +
                      std::to_string(x));
  }
  return j_prime_raw(nu, x);
}

namespace detail {

double mcmahon_zero(double nu, int k) {
  const double mu = 4.0 * nu * nu;
  const double beta = (k + 0.5 * nu - 0.25) * kPi;
  const double b8 = 8.0 * beta;
  const double b8_3 = b8 * b8 * b8;
  const double b8_5 = b8_3 * b8 * b8;
  return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8_3) -
         32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8_5);
}

double mcmahon_prime_zero(double nu, int k) {
  // For nu = 0 the expansion counts x = 0 as the first zero.
  const int index = nu == 0.0 ? k + 1 : k;
  const double mu = 4.0 * nu * nu;
  const double beta = (index + 0.5 * nu - 0.75) * kPi;
  const double b8 = 8.0 * beta;
  const double b8_3 = b8 * b8 * b8;
  const double b8_5 = b8_3 * b8 * b8;
  return beta - (mu + 3.0) / b8 -
         4.0 * (7.0 * mu * mu + 82.0 * mu - 9.0) / (3.0 * b8_3) -
         32.0 * (83.0 * mu * mu * mu + 2075.0 * mu * mu - 3039.0 * mu + 3537.0) / (15.0 * b8_5);
}

double bessel_zero_by_scan(double nu, int k) {
  require_order(nu, "bessel_zero");
  require_index(k, "bessel_zero");
  return kth_zero_by_scan(JFunction{nu}, JDerivative{nu}, zero_scan_start(nu), k);
}

double bessel_prime_zero_by_scan(double nu, int k) {
  require_order(nu, "bessel_prime_zero");
  require_index(k, "bessel_prime_zero");
  return kth_zero_by_scan(JDerivative{nu}, JSecond{nu}, prime_zero_scan_start(nu), k);
}

}  // namespace detail

double bessel_zero(double nu, int k) {
  require_order(nu, "bessel_zero");
  require_index(k, "bessel_zero");
  const double beta = (k + 0.5 * nu - 0.25) * kPi;
  if (mcmahon_reliable(nu, beta)) {
    const double root = polish_near(JFunction{nu}, JDerivative{nu}, detail::mcmahon_zero(nu, k));
    if (std::isfinite(root)) return root;
  }
  return detail::bessel_zero_by_scan(nu, k);
}

double bessel_zero(const ZeroRequest& request) { return bessel_zero(request.order, request.index); }

double bessel_prime_zero(double nu, int k) {
  require_order(nu, "bessel_prime_zero");
  require_index(k, "bessel_prime_zero");
  const int index = nu == 0.0 ? k + 1 : k;
  const double beta = (index + 0.5 * nu - 0.75) * kPi;
  if (mcmahon_reliable(nu, beta)) {
    const double root =
        polish_near(JDerivative{nu}, JSecond{nu}, detail::mcmahon_prime_zero(nu, k));
    if (std::isfinite(root)) return root;
  }
  return detail::bessel_prime_zero_by_scan(nu, k);
}

double bessel_prime_zero(const ZeroRequest& request) {
  return bessel_prime_zero(request.order, request.index);
}

std::vector<double> bessel_zeros_below(double nu, double x_max) {
  require_order(nu, "bessel_zeros_below");
  return zeros_below(JFunction{nu}, JDerivative{nu}, zero_scan_start(nu), x_max);
}

std::vector<double> bessel_prime_zeros_below(double nu, double x_max) {
  require_order(nu, "bessel_prime_zeros_below");
  return zeros_below(JDerivative{nu}, JSecond{nu}, prime_zero_scan_start(nu), x_max);
}

}  // namespace polya::specfun
