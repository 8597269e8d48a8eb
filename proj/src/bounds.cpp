#include "polya/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polya/errors.hpp"
#include "polya/specfun.hpp"

namespace polya::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPiSquared = 4.0 * kPi * kPi;

// gamma_half_integer is exact to rounding up to two_x = 342; past that use logs.
constexpr int kLargestDirectGamma = 340;

void require_dimension(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw DomainError(std::string(what) + ": dimension must be >= " + std::to_string(minimum) +
                      ", got " + std::to_string(n));
  }
}

void require_volume(double volume, const char* what) {
  if (!std::isfinite(volume) || volume <= 0.0) {
    throw DomainError(std::string(what) + ": volume must be finite and > 0");
  }
}

void require_index(long long k, long long minimum, const char* what) {
  if (k < minimum) {
    throw DomainError(std::string(what) + ": index must be >= " + std::to_string(minimum) +
                      ", got " + std::to_string(k));
  }
}

// Gamma(a / 2) / Gamma(b / 2) for positive integers a, b.
double half_integer_gamma_ratio(int two_a, int two_b) {
  if (std::max(two_a, two_b) <= kLargestDirectGamma) {
    return specfun::gamma_half_integer(two_a) / specfun::gamma_half_integer(two_b);
  }
  return std::exp(specfun::ln_gamma(0.5 * two_a) - specfun::ln_gamma(0.5 * two_b));
}

}  // namespace

BoundReport compare(std::string name, int n, long long k, double bound_value, double eigenvalue,
                    Direction direction, double relative_tolerance) {
  BoundReport r;
  r.name = std::move(name);
  r.n = n;
  r.k = k;
  r.bound_value = bound_value;
  r.eigenvalue = eigenvalue;
  r.margin = direction == Direction::Lower ? eigenvalue - bound_value : bound_value - eigenvalue;
  r.holds = r.margin >= -std::abs(eigenvalue) * relative_tolerance;
  return r;
}

double relative_margin(const BoundReport& r) {
  const double scale = std::max(std::abs(r.eigenvalue), std::abs(r.bound_value));
  return scale == 0.0 ? 0.0 : r.margin / scale;
}

double unit_ball_volume(int n) {
  require_dimension(n, 1, "unit_ball_volume");
  if (n + 2 <= kLargestDirectGamma) {
    return std::pow(kPi, 0.5 * n) / specfun::gamma_half_integer(n + 2);
  }
  return std::exp(0.5 * n * std::log(kPi) - specfun::ln_gamma(0.5 * n + 1.0));
}

double polya_threshold(int n, double volume, long long k) {
  require_dimension(n, 1, "polya_threshold");
  require_volume(volume, "polya_threshold");
  require_index(k, 0, "polya_threshold");
  const double exponent = 2.0 / n;
  return kFourPiSquared / std::pow(unit_ball_volume(n), exponent) *
         std::pow(static_cast<double>(k) / volume, exponent);
}

double weyl_one_term(int n, double volume, long long k) { return polya_threshold(n, volume, k); }

double kroger_bound(int n, double volume, long long k) {
  require_index(k, 1, "kroger_bound");
  return std::pow(0.5 * (n + 2), 2.0 / n) * polya_threshold(n, volume, k - 1);
}

double li_yau_beta(int n) {
  require_dimension(n, 1, "li_yau_beta");
  return static_cast<double>(n) / (n + 2.0);
}

double li_yau_sum_bound(int n, double volume, long long k) {
  require_index(k, 1, "li_yau_sum_bound");
  return li_yau_beta(n) * polya_threshold(n, volume, k);
}

double li_yau_individual_bound(int n, double volume, long long k) {
  require_index(k, 1, "li_yau_individual_bound");
  return li_yau_beta(n) * polya_threshold(n, volume, k);
}

double gamma_quotient(int n) {
  require_dimension(n, 1, "gamma_quotient");
  return half_integer_gamma_ratio(n + 1, n + 2);
}

double alpha(int n) {
  require_dimension(n, 2, "alpha");
  const double dn = n;
  return dn / std::pow(dn + 1.0, 1.0 - 1.0 / dn) * std::pow(kPi / 4.0, 1.0 / dn) *
         std::pow(gamma_quotient(n), 2.0 / dn);
}

double alpha_asymptotic(int n) {
  require_dimension(n, 2, "alpha_asymptotic");
  return 1.0 - (1.0 - std::log(kPi / 2.0)) / n;
}

double improved_cylinder_bound(int n_base, double base_volume, double length, long long k,
                               bool allow_one_dimensional_base) {
  if (n_base < 1 || (n_base == 1 && !allow_one_dimensional_base)) {
    throw DomainError("improved_cylinder_bound: base dimension must be >= 2, got " +
                      std::to_string(n_base));
  }
  require_volume(base_volume, "improved_cylinder_bound");
  if (!std::isfinite(length) || length <= 0.0) {
    throw DomainError("improved_cylinder_bound: length must be finite and > 0");
  }
  require_index(k, 1, "improved_cylinder_bound");
  const int n = n_base + 1;
  return alpha(n) * polya_threshold(n, length * base_volume, k);
}

double weyl_second_term(int n, double volume, double boundary, long long k) {
  require_dimension(n, 1, "weyl_second_term");
  require_volume(volume, "weyl_second_term");
  const double omega_lower = n == 1 ? 1.0 : unit_ball_volume(n - 1);
  const double dn = n;
  return 2.0 * kPi * kPi * omega_lower * boundary * std::pow(static_cast<double>(k), 1.0 / dn) /
         (dn * std::pow(unit_ball_volume(n) * volume, 1.0 + 1.0 / dn));
}

double weyl_two_term(const Domain& d, BoundaryCondition bc, long long k) {
  require_index(k, 1, "weyl_two_term");
  const int n = dimension(d);
  const double volume = measure(d);
  const double second = weyl_second_term(n, volume, boundary_measure(d), k);
  const double first = weyl_one_term(n, volume, k);
  return bc == BoundaryCondition::Dirichlet ? first + second : first - second;
}

WendelBounds wendel_bounds(int n) {
  require_dimension(n, 1, "wendel_bounds");
  const double half = 0.5 * (n + 1);
  return {1.0 / std::sqrt(half), std::sqrt(0.5 * n + 1.0) / half};
}

AlphaChain alpha_chain(int n) {
  require_dimension(n, 2, "alpha_chain");
  AlphaChain c;
  c.n = n;
  const double m = n + 1.0;
  c.beta = li_yau_beta(n + 1);
  c.inner = m / (m + 1.0) * std::pow(kPi / 2.0, 1.0 / m);
  c.outer = c.inner * std::pow((m + 2.0) / (m + 1.0), 1.0 / m);
  c.alpha = alpha(n + 1);
  c.beta_below_inner = c.beta < c.inner;
  c.beta_below_outer = c.beta < c.outer;
  c.inner_below_alpha = c.inner < c.alpha;
  c.alpha_below_outer = c.alpha < c.outer;
  c.alpha_below_one = c.alpha < 1.0;
  c.beta_below_alpha = c.beta < c.alpha;
  return c;
}

}  // namespace polya::bounds
