#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polya/bounds.hpp"
#include "polya/domains.hpp"
#include "polya/spectra.hpp"

namespace polya::verify {

/// Relative slack before an inequality counts as violated. Both sides of most
/// comparisons come from independent root finders.
inline constexpr double kViolationTolerance = 1e-10;

/// Pólya comparisons involve a single computed spectrum against a closed form.
inline constexpr double kPolyaTolerance = 1e-12;

struct CheckOptions {
  /// Overrides the campaign's default tolerance when set.
  std::optional<double> tolerance;
  EnumerationLimits limits;
  /// Lets check_counting_chain evaluate the cylinder bound on interval bases.
  bool allow_one_dimensional_base = false;
};

/// Outcome of one verification campaign over an index range.
struct CheckReport {
  std::string campaign;
  Domain domain;
  BoundaryCondition bc;
  long long k_first = 0;
  long long k_last = 0;
  std::optional<long long> first_violation;
  std::size_t violations = 0;
  /// Minimum of relative_margin over every comparison, negative when violated.
  double worst_margin = 0.0;
  std::vector<bounds::BoundReport> details;

  bool clean() const { return !first_violation.has_value(); }
};

/// Dirichlet: lambda_k >= polya_threshold(k) for k in [1, K].
/// Neumann:   mu_{k+1} <= polya_threshold(k) for k in [0, K-1].
CheckReport check_polya(const Domain& d, BoundaryCondition bc, long long K,
                        const CheckOptions& options = {});

/// mu_k <= kroger_bound(k) for k in [1, K].
CheckReport check_kroger(const Domain& d, long long K, const CheckOptions& options = {});

/// 1 + the largest violating index of a report, or 1 when it is clean. Only an
/// estimate of the eventual index, valid up to the report's horizon.
long long eventual_index(const CheckReport& report);
long long eventual_index(const Domain& d, BoundaryCondition bc, long long K,
                         const CheckOptions& options = {});

/// Dirichlet: lambda_{kp}(base) <= lambda_k(subdomain_at(p)).
/// Neumann:   mu_{(k-1)p+1}(base) >= mu_k(subdomain_at(p)). k in [1, K], p >= 2.
CheckReport check_tiling_interlacing(const TilingFamily& family, BoundaryCondition bc, int p,
                                     long long K, const CheckOptions& options = {});

/// Counting-function quantities at one spectral parameter lambda for the cylinder
/// base x [0, length].
struct ChainTerms {
  std::size_t count = 0;       // N(lambda)
  std::size_t j_lambda = 0;    // number of base eigenvalues <= lambda
  double sqrt_sum_rhs = 0.0;   // (length/pi) sum_{j <= j_lambda} sqrt(lambda - eta_j)
  double cauchy_schwarz_rhs = 0.0;  // (length/pi) sqrt(j_lambda (lambda j_lambda - sum eta_j))
};

/// base_values must hold every base Dirichlet eigenvalue up to lambda, sorted.
ChainTerms chain_terms(const std::vector<double>& base_values, double length, double lambda);

/// For each k in [1, K] with lambda = lambda_k(base x [0, length]) checks
///   (i)   N(lambda) <= sqrt_sum_rhs
///   (ii)  N(lambda) <= cauchy_schwarz_rhs
///   (iii) lambda_k >= pi^2 k^2 / (length^2 j^2) + li_yau_individual_bound(n, |base|, j)
///         at j = j_lambda
///   (iv)  lambda_k >= improved_cylinder_bound(n, |base|, length, k)
CheckReport check_counting_chain(const Domain& base, double length, long long K,
                                 const CheckOptions& options = {});

struct ScanResult {
  double parameter;
  CheckReport report;
};

/// check_polya on base x [0, length] for each length, in order. Lengths must be
/// positive and strictly increasing. Observational: no trend across lengths is assumed.
std::vector<ScanResult> thin_cylinder_scan(const Domain& base, const std::vector<double>& lengths,
                                           long long K, BoundaryCondition bc,
                                           const CheckOptions& options = {});

struct BoundsRow {
  long long k = 0;
  double eigenvalue = 0.0;
  double polya = 0.0;
  double li_yau = 0.0;     // li_yau_individual_bound in dimension n + 1
  double improved = 0.0;   // improved_cylinder_bound
  double ratio = 0.0;      // improved / li_yau
};

struct BoundsComparison {
  Domain cylinder;
  std::vector<BoundsRow> rows;
  bool improved_dominates = true;          // improved >= li_yau at every k
  bool eigenvalues_above_improved = true;  // lambda_k >= improved at every k
  double ratio_spread = 0.0;               // max |ratio / ratio_1 - 1|
};

BoundsComparison compare_bounds(const Domain& base, double length, long long K,
                                const CheckOptions& options = {});

struct WeylRemainder {
  double mean_ratio = 0.0;
  long long window_first = 0;
  long long window_last = 0;
  std::vector<double> ratios;
};

/// Mean over k in [K/2, K] of (lambda_k - first term) / second term, with the sign
/// flipped for Neumann so both conventions should come out positive. K >= 100.
WeylRemainder weyl_remainder_stats(const Domain& d, BoundaryCondition bc, long long K,
                                   const CheckOptions& options = {});

}  // namespace polya::verify
