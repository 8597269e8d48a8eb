#pragma once

#include <string>
#include <utility>

#include "polya/domains.hpp"

namespace polya::bounds {

/// Whether the eigenvalue is expected above (Lower) or below (Upper) the bound.
enum class Direction { Lower, Upper };

/// One comparison between an eigenvalue-like quantity and a bound.
///
/// margin = eigenvalue - bound_value for lower bounds and bound_value - eigenvalue
/// for upper bounds, so a non-negative margin always means the bound holds.
struct BoundReport {
  std::string name;
  int n = 0;
  long long k = 0;
  double bound_value = 0.0;
  double eigenvalue = 0.0;
  double margin = 0.0;
  bool holds = true;
};

inline constexpr double kDefaultReportTolerance = 1e-12;

/// holds <=> margin >= -|eigenvalue| * relative_tolerance.
BoundReport compare(std::string name, int n, long long k, double bound_value, double eigenvalue,
                    Direction direction, double relative_tolerance = kDefaultReportTolerance);

/// margin / max(|eigenvalue|, |bound|), or 0 when both vanish.
double relative_margin(const BoundReport& r);

/// Volume of the unit ball in R^n: pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(int n);

/// Weyl leading term 4 pi^2 / omega_n^{2/n} (k / volume)^{2/n}. Accepts k = 0 for the
/// Neumann comparison mu_1 <= threshold(0) = 0.
double polya_threshold(int n, double volume, long long k);

/// Same value as polya_threshold.
double weyl_one_term(int n, double volume, long long k);

/// Kroger's Neumann upper bound ((n+2)/2)^{2/n} polya_threshold(n, volume, k - 1).
double kroger_bound(int n, double volume, long long k);

/// Berezin-Li-Yau constant n / (n + 2).
double li_yau_beta(int n);

/// Lower bound for the mean of the first k Dirichlet eigenvalues.
double li_yau_sum_bound(int n, double volume, long long k);

/// beta_n * polya_threshold(n, volume, k).
double li_yau_individual_bound(int n, double volume, long long k);

/// Improved cylinder constant
///   alpha_n = n / (n+1)^{1-1/n} (pi/4)^{1/n} [Gamma((n+1)/2) / Gamma((n+2)/2)]^{2/n}.
double alpha(int n);

/// 1 - (1 - ln(pi/2)) / n, the two leading terms of alpha_n for large n.
double alpha_asymptotic(int n);

/// Lower bound for the k-th Dirichlet eigenvalue of base x [0, length], where the
/// base has dimension n_base and volume base_volume:
///   alpha_{n+1} 4 pi^2 / omega_{n+1}^{2/(n+1)} (k / (length * base_volume))^{2/(n+1)}.
/// The statement covers n_base >= 2; n_base = 1 needs allow_one_dimensional_base and
/// is an extrapolation outside that statement.
double improved_cylinder_bound(int n_base, double base_volume, double length, long long k,
                               bool allow_one_dimensional_base = false);

/// Two-term Weyl asymptotic, with the boundary term added for Dirichlet and
/// subtracted for Neumann.
double weyl_two_term(const Domain& d, BoundaryCondition bc, long long k);

/// Second Weyl term 2 pi^2 omega_{n-1} |boundary| k^{1/n} / (n (omega_n |volume|)^{1+1/n}),
/// without sign. omega_0 = 1.
double weyl_second_term(int n, double volume, double boundary, long long k);

struct WendelBounds {
  double lower;
  double upper;
};

/// Bounds on Gamma((n+1)/2) / Gamma(n/2 + 1).
WendelBounds wendel_bounds(int n);

/// Gamma((n+1)/2) / Gamma(n/2 + 1), evaluated directly.
double gamma_quotient(int n);

/// Every quantity of the chain of inequalities for alpha_{n+1}, evaluated, with each
/// comparison reported on its own.
struct AlphaChain {
  int n = 0;
  double beta = 0.0;   // beta_{n+1}
  double inner = 0.0;  // A = (n+1)/(n+2) (pi/2)^{1/(n+1)}
  double outer = 0.0;  // B = A ((n+3)/(n+2))^{1/(n+1)}
  double alpha = 0.0;  // alpha_{n+1}
  bool beta_below_inner = false;
  bool beta_below_outer = false;
  bool inner_below_alpha = false;
  bool alpha_below_outer = false;
  bool alpha_below_one = false;
  bool beta_below_alpha = false;
};

AlphaChain alpha_chain(int n);

}  // namespace polya::bounds
