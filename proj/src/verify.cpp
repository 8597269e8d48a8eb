#include "polya/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polya/errors.hpp"

namespace polya::verify {

namespace {

using bounds::BoundReport;
using bounds::Direction;

constexpr double kPi = std::numbers::pi;

void require_horizon(long long K, long long minimum, const char* what) {
  if (K < minimum) {
    throw DomainError(std::string(what) + ": K must be >= " + std::to_string(minimum) + ", got " +
                      std::to_string(K));
  }
}

std::size_t as_count(long long K) { return static_cast<std::size_t>(K); }

// Fills first_violation, violations and worst_margin from the details. Reductions
// run over the whole index set so the result does not depend on evaluation order.
void summarize(CheckReport& report) {
  report.first_violation.reset();
  report.violations = 0;
  report.worst_margin = 0.0;
  bool first = true;
  for (const BoundReport& r : report.details) {
    const double rel = bounds::relative_margin(r);
    if (first || rel < report.worst_margin) report.worst_margin = rel;
    first = false;
    if (!r.holds) {
      ++report.violations;
      if (!report.first_violation || r.k < *report.first_violation) report.first_violation = r.k;
    }
  }
}

CheckReport make_report(std::string campaign, const Domain& d, BoundaryCondition bc,
                        long long k_first, long long k_last) {
  CheckReport r{std::move(campaign), d, bc, k_first, k_last, std::nullopt, 0, 0.0, {}};
  return r;
}

}  // namespace

CheckReport check_polya(const Domain& d, BoundaryCondition bc, long long K,
                        const CheckOptions& options) {
  require_horizon(K, 1, "check_polya");
  const double tol = options.tolerance.value_or(kPolyaTolerance);
  const int n = dimension(d);
  const double volume = measure(d);
  const Spectrum s = eigenvalues(d, bc, as_count(K), options.limits);
  const bool dirichlet = bc == BoundaryCondition::Dirichlet;
  CheckReport report = make_report("polya", d, bc, dirichlet ? 1 : 0, dirichlet ? K : K - 1);
  report.details.reserve(as_count(K));
  for (long long i = 0; i < K; ++i) {
    if (dirichlet) {
      const long long k = i + 1;
      report.details.push_back(bounds::compare("polya_dirichlet", n, k,
                                               bounds::polya_threshold(n, volume, k),
                                               s.values[as_count(i)], Direction::Lower, tol));
    } else {
      // mu_{k+1} against the threshold at k.
      const long long k = i;
      report.details.push_back(bounds::compare("polya_neumann", n, k,
                                               bounds::polya_threshold(n, volume, k),
                                               s.values[as_count(i)], Direction::Upper, tol));
    }
  }
  summarize(report);
  return report;
}

CheckReport check_kroger(const Domain& d, long long K, const CheckOptions& options) {
  require_horizon(K, 1, "check_kroger");
  const double tol = options.tolerance.value_or(kPolyaTolerance);
  const int n = dimension(d);
  const double volume = measure(d);
  const Spectrum s = eigenvalues(d, BoundaryCondition::Neumann, as_count(K), options.limits);
  CheckReport report = make_report("kroger", d, BoundaryCondition::Neumann, 1, K);
  report.details.reserve(as_count(K));
  for (long long k = 1; k <= K; ++k) {
    report.details.push_back(bounds::compare("kroger", n, k, bounds::kroger_bound(n, volume, k),
                                             s.values[as_count(k - 1)], Direction::Upper, tol));
  }
  summarize(report);
  return report;
}

long long eventual_index(const CheckReport& report) {
  long long last_bad = 0;
  bool any = false;
  for (const BoundReport& r : report.details) {
    if (!r.holds && (!any || r.k > last_bad)) {
      last_bad = r.k;
      any = true;
    }
  }
  return any ? last_bad + 1 : 1;
}

long long eventual_index(const Domain& d, BoundaryCondition bc, long long K,
                         const CheckOptions& options) {
  return eventual_index(check_polya(d, bc, K, options));
}

CheckReport check_tiling_interlacing(const TilingFamily& family, BoundaryCondition bc, int p,
                                     long long K, const CheckOptions& options) {
  if (p < 2) throw DomainError("check_tiling_interlacing: p must be >= 2, got " + std::to_string(p));
  require_horizon(K, 1, "check_tiling_interlacing");
  const double tol = options.tolerance.value_or(kViolationTolerance);
  const Domain sub = family.subdomain_at(p);
  const int n = dimension(family.base);
  const bool dirichlet = bc == BoundaryCondition::Dirichlet;
  const long long base_count = dirichlet ? K * p : (K - 1) * p + 1;
  const Spectrum big = eigenvalues(family.base, bc, as_count(base_count), options.limits);
  const Spectrum small = eigenvalues(sub, bc, as_count(K), options.limits);

  CheckReport report = make_report("interlace", family.base, bc, 1, K);
  report.details.reserve(as_count(K));
  for (long long k = 1; k <= K; ++k) {
    const double sub_value = small.values[as_count(k - 1)];
    if (dirichlet) {
      const double base_value = big.values[as_count(k * p - 1)];
      report.details.push_back(bounds::compare("interlace_dirichlet", n, k, sub_value, base_value,
                                               Direction::Upper, tol));
    } else {
      const double base_value = big.values[as_count((k - 1) * p)];
      report.details.push_back(bounds::compare("interlace_neumann", n, k, sub_value, base_value,
                                               Direction::Lower, tol));
    }
  }
  summarize(report);
  return report;
}

ChainTerms chain_terms(const std::vector<double>& base_values, double length, double lambda) {
  ChainTerms t;
  t.count = cylinder_counting(base_values, length, lambda);
  // j_lambda: the largest j with lambda - eta_j >= 0.
  t.j_lambda = static_cast<std::size_t>(
      std::upper_bound(base_values.begin(), base_values.end(), lambda) - base_values.begin());
  double sqrt_sum = 0.0;
  double eta_sum = 0.0;
  for (std::size_t j = 0; j < t.j_lambda; ++j) {
    sqrt_sum += std::sqrt(lambda - base_values[j]);
    eta_sum += base_values[j];
  }
  const double jl = static_cast<double>(t.j_lambda);
  t.sqrt_sum_rhs = length / kPi * sqrt_sum;
  t.cauchy_schwarz_rhs = length / kPi * std::sqrt(jl) * std::sqrt(std::max(lambda * jl - eta_sum, 0.0));
  return t;
}

CheckReport check_counting_chain(const Domain& base, double length, long long K,
                                 const CheckOptions& options) {
  require_horizon(K, 1, "check_counting_chain");
  if (!std::isfinite(length) || length <= 0.0) {
    throw DomainError("check_counting_chain: length must be finite and > 0");
  }
  const double tol = options.tolerance.value_or(kViolationTolerance);
  const int n = dimension(base);
  const double volume = measure(base);
  const Domain cylinder = Domain::product(base, Domain::interval(length));
  const Spectrum cyl = eigenvalues(cylinder, BoundaryCondition::Dirichlet, as_count(K), options.limits);
  const std::vector<double> eta =
      eigenvalues_below(base, BoundaryCondition::Dirichlet, cyl.values.back(), options.limits).values;

  CheckReport report = make_report("chain", cylinder, BoundaryCondition::Dirichlet, 1, K);
  report.details.reserve(4 * as_count(K));
  for (long long k = 1; k <= K; ++k) {
    const double lambda = cyl.values[as_count(k - 1)];
    const ChainTerms t = chain_terms(eta, length, lambda);
    const double count = static_cast<double>(t.count);
    report.details.push_back(
        bounds::compare("count_sqrt_sum", n, k, t.sqrt_sum_rhs, count, Direction::Upper, tol));
    report.details.push_back(bounds::compare("count_cauchy_schwarz", n, k, t.cauchy_schwarz_rhs,
                                             count, Direction::Upper, tol));
    const double j = static_cast<double>(t.j_lambda);
    const double interval_part = kPi * kPi * static_cast<double>(k) * static_cast<double>(k) /
                                 (length * length * j * j);
    const double key_bound =
        interval_part + bounds::li_yau_individual_bound(n, volume, static_cast<long long>(t.j_lambda));
    report.details.push_back(
        bounds::compare("key_at_j_lambda", n, k, key_bound, lambda, Direction::Lower, tol));
    report.details.push_back(bounds::compare(
        "improved_cylinder", n + 1, k,
        bounds::improved_cylinder_bound(n, volume, length, k, options.allow_one_dimensional_base),
        lambda, Direction::Lower, tol));
  }
  summarize(report);
  return report;
}

std::vector<ScanResult> thin_cylinder_scan(const Domain& base, const std::vector<double>& lengths,
                                           long long K, BoundaryCondition bc,
                                           const CheckOptions& options) {
  require_horizon(K, 1, "thin_cylinder_scan");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (!std::isfinite(lengths[i]) || lengths[i] <= 0.0) {
      throw DomainError("thin_cylinder_scan: lengths must be finite and > 0");
    }
    if (i > 0 && !(lengths[i] > lengths[i - 1])) {
      throw DomainError("thin_cylinder_scan: lengths must be strictly increasing");
    }
  }
  std::vector<ScanResult> out;
  out.reserve(lengths.size());
  for (double length : lengths) {
    const Domain cylinder = Domain::product(base, Domain::interval(length));
    out.push_back({length, check_polya(cylinder, bc, K, options)});
  }
  return out;
}

BoundsComparison compare_bounds(const Domain& base, double length, long long K,
                                const CheckOptions& options) {
  require_horizon(K, 1, "compare_bounds");
  const int n = dimension(base);
  const double volume = measure(base);
  BoundsComparison out{Domain::product(base, Domain::interval(length)), {}, true, true, 0.0};
  const double cyl_volume = measure(out.cylinder);
  const Spectrum s =
      eigenvalues(out.cylinder, BoundaryCondition::Dirichlet, as_count(K), options.limits);
  out.rows.reserve(as_count(K));
  for (long long k = 1; k <= K; ++k) {
    BoundsRow row;
    row.k = k;
    row.eigenvalue = s.values[as_count(k - 1)];
    row.polya = bounds::polya_threshold(n + 1, cyl_volume, k);
    row.li_yau = bounds::li_yau_individual_bound(n + 1, cyl_volume, k);
    row.improved = bounds::improved_cylinder_bound(n, volume, length, k,
                                                   options.allow_one_dimensional_base);
    row.ratio = row.improved / row.li_yau;
    out.improved_dominates = out.improved_dominates && row.improved >= row.li_yau;
    out.eigenvalues_above_improved = out.eigenvalues_above_improved && row.eigenvalue >= row.improved;
    out.rows.push_back(row);
  }
  const double first_ratio = out.rows.front().ratio;
  for (const BoundsRow& row : out.rows) {
    out.ratio_spread = std::max(out.ratio_spread, std::abs(row.ratio / first_ratio - 1.0));
  }
  return out;
}

WeylRemainder weyl_remainder_stats(const Domain& d, BoundaryCondition bc, long long K,
                                   const CheckOptions& options) {
  require_horizon(K, 100, "weyl_remainder_stats");
  const int n = dimension(d);
  const double volume = measure(d);
  const double boundary = boundary_measure(d);
  const Spectrum s = eigenvalues(d, bc, as_count(K), options.limits);
  WeylRemainder out;
  out.window_first = K / 2;
  out.window_last = K;
  const double sign = bc == BoundaryCondition::Dirichlet ? 1.0 : -1.0;
  double total = 0.0;
  for (long long k = out.window_first; k <= out.window_last; ++k) {
    const double first = bounds::weyl_one_term(n, volume, k);
    const double second = bounds::weyl_second_term(n, volume, boundary, k);
    const double r = sign * (s.values[as_count(k - 1)] - first) / second;
    out.ratios.push_back(r);
    total += r;
  }
  out.mean_ratio = total / static_cast<double>(out.ratios.size());
  return out;
}

}  // namespace polya::verify
