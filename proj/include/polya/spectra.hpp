#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polya/domains.hpp"

namespace polya {

/// Default cap on the number of candidate modes one enumeration may touch.
inline constexpr std::size_t kDefaultMaxModes = 5'000'000;

/// An eigenvalue e counts as <= lambda when e <= lambda * (1 + kCountingTolerance).
inline constexpr double kCountingTolerance = 1e-12;

struct EnumerationLimits {
  std::size_t max_modes = kDefaultMaxModes;

  /// Reads POLYA_MAX_MODES, falling back to the default when unset.
  /// Throws DomainError on a malformed value.
  static EnumerationLimits from_environment();
};

/// Leading eigenvalues of one domain under one boundary condition, sorted,
/// multiplicities expanded. modes[i] labels the separated mode behind values[i].
struct Spectrum {
  Domain domain;
  BoundaryCondition bc;
  std::vector<double> values;
  std::vector<std::string> modes;
};

/// A domain and boundary condition that can supply arbitrarily many eigenvalues.
struct SpectrumSource {
  Domain domain;
  BoundaryCondition bc;
};

/// Interval eigenvalue with 1-based index k: pi^2 k^2 / l^2 (Dirichlet) or
/// pi^2 (k-1)^2 / l^2 (Neumann). Every code path builds interval values here.
double interval_eigenvalue(double length, BoundaryCondition bc, long long k);

/// First `count` eigenvalues of d.
Spectrum eigenvalues(const Domain& d, BoundaryCondition bc, std::size_t count,
                     const EnumerationLimits& limits = {});

/// Every eigenvalue e with e <= lambda * (1 + kCountingTolerance), sorted.
Spectrum eigenvalues_below(const Domain& d, BoundaryCondition bc, double lambda,
                           const EnumerationLimits& limits = {});

/// Evidence that a product enumeration missed nothing: every unvisited pair has a
/// sum of at least max(next_left_sum, next_right_sum) >= the largest returned value.
struct ProductCertificate {
  std::size_t left_consumed = 0;
  std::size_t right_consumed = 0;
  double largest = 0.0;
  double next_left_sum = 0.0;   // eta_{J+1} + rho_1
  double next_right_sum = 0.0;  // eta_1 + rho_{L+1}

  bool complete() const { return next_left_sum >= largest && next_right_sum >= largest; }
};

struct ProductSpectrum {
  Spectrum spectrum;
  ProductCertificate certificate;
};

/// The `count` smallest sums eta_j + rho_l of two factor spectra, by best-first
/// expansion of the pair lattice. Factor spectra are extended on demand by doubling.
ProductSpectrum product_eigenvalues(const SpectrumSource& left, const SpectrumSource& right,
                                    std::size_t count, const EnumerationLimits& limits = {});

/// Number of eigenvalues <= lambda (with the counting tolerance). Neumann spectra
/// include the zero mode.
std::size_t counting(const Domain& d, BoundaryCondition bc, double lambda,
                     const EnumerationLimits& limits = {});

/// Dirichlet counting function of base x [0, length] through the floor sum
///   sum_{j <= j_lambda} floor((length / pi) sqrt(lambda - eta_j)).
/// Agrees exactly with counting() on the product domain.
std::size_t cylinder_counting(const SpectrumSource& base, double length, double lambda,
                              const EnumerationLimits& limits = {});

/// Same floor sum over an explicit sorted list of base eigenvalues, which must
/// contain every base eigenvalue up to lambda.
std::size_t cylinder_counting(const std::vector<double>& base_values, double length,
                              double lambda);

}  // namespace polya
