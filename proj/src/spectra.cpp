#include "polya/spectra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <queue>
#include <string>
#include <tuple>
#include <variant>

#include "polya/errors.hpp"
#include "polya/specfun.hpp"

namespace polya {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSquared = kPi * kPi;

struct Entry {
  double value;
  std::string mode;
};

// Tracks the number of candidate modes touched by one enumeration.
class ModeBudget {
 public:
  explicit ModeBudget(const EnumerationLimits& limits) : max_(limits.max_modes) {}

  void charge(std::size_t n) {
    used_ += n;
    if (used_ > max_) {
      throw CapacityError("enumeration exceeded the mode budget of " + std::to_string(max_) +
                          " (raise POLYA_MAX_MODES)");
    }
  }

 private:
  std::size_t max_;
  std::size_t used_ = 0;
};

double cap_for(double lambda) { return lambda * (1.0 + kCountingTolerance); }

// Entries are generated in lexicographic mode order; a stable sort by value keeps
// that order among ties.
Spectrum finish(const Domain& d, BoundaryCondition bc, std::vector<Entry> entries,
                std::size_t keep) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.value < b.value; });
  if (entries.size() > keep) entries.resize(keep);
  Spectrum s{d, bc, {}, {}};
  s.values.reserve(entries.size());
  s.modes.reserve(entries.size());
  for (auto& e : entries) {
    s.values.push_back(e.value);
    s.modes.push_back(std::move(e.mode));
  }
  return s;
}

std::vector<Entry> interval_below(const Interval& iv, BoundaryCondition bc, double cap,
                                  ModeBudget& budget) {
  std::vector<Entry> out;
  for (long long k = 1;; ++k) {
    const double v = interval_eigenvalue(iv.length, bc, k);
    if (v > cap) break;
    budget.charge(1);
    out.push_back({v, "k=" + std::to_string(k)});
  }
  return out;
}

void box_recurse(const std::vector<std::vector<double>>& axis_values, std::size_t axis,
                 double partial, double cap, std::vector<long long>& index,
                 std::vector<Entry>& out, ModeBudget& budget) {
  // Smallest possible contribution of the remaining axes.
  double rest = 0.0;
  for (std::size_t a = axis + 1; a < axis_values.size(); ++a) rest += axis_values[a].front();
  const auto& values = axis_values[axis];
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double sum = axis == 0 ? values[i] : partial + values[i];
    if (sum + rest > cap) break;
    index[axis] = static_cast<long long>(i) + 1;
    if (axis + 1 == axis_values.size()) {
      if (sum > cap) break;
      budget.charge(1);
      std::string label = "n=(";
      for (std::size_t a = 0; a < index.size(); ++a) {
        if (a > 0) label += ',';
        label += std::to_string(index[a]);
      }
      label += ')';
      out.push_back({sum, std::move(label)});
    } else {
      box_recurse(axis_values, axis + 1, sum, cap, index, out, budget);
    }
  }
}

std::vector<Entry> box_below(const Box& box, BoundaryCondition bc, double cap,
                             ModeBudget& budget) {
  std::vector<std::vector<double>> axis_values(box.sides.size());
  for (std::size_t a = 0; a < box.sides.size(); ++a) {
    for (long long k = 1;; ++k) {
      const double v = interval_eigenvalue(box.sides[a], bc, k);
      if (v > cap) break;
      budget.charge(1);
      axis_values[a].push_back(v);
    }
    if (axis_values[a].empty()) return {};
  }
  std::vector<Entry> out;
  std::vector<long long> index(box.sides.size(), 0);
  box_recurse(axis_values, 0, 0.0, cap, index, out, budget);
  return out;
}

// Disk and sector modes: (z / R)^2 for zeros z of J_nu (Dirichlet) or J'_nu (Neumann),
// angular order nu = m * step. Since every positive zero exceeds nu, orders with
// nu >= R sqrt(cap) cannot contribute.
std::vector<Entry> radial_below(double radius, double order_step, int first_m, bool doubled,
                                BoundaryCondition bc, double cap, ModeBudget& budget) {
  std::vector<Entry> out;
  if (cap < 0.0) return out;
  if (bc == BoundaryCondition::Neumann) {
    budget.charge(1);
    out.push_back({0.0, "m=0,k=0"});
  }
  const double x_max = radius * std::sqrt(cap) * (1.0 + 1e-9);
  for (int m = first_m;; ++m) {
    const double nu = m * order_step;
    if (nu >= x_max) break;
    const std::vector<double> zeros = bc == BoundaryCondition::Dirichlet
                                          ? specfun::bessel_zeros_below(nu, x_max)
                                          : specfun::bessel_prime_zeros_below(nu, x_max);
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      const double scaled = zeros[k] / radius;
      const double v = scaled * scaled;
      if (v > cap) break;
      const std::string base = "m=" + std::to_string(m) + ",k=" + std::to_string(k + 1);
      if (doubled && m > 0) {
        budget.charge(2);
        out.push_back({v, base + ",cos"});
        out.push_back({v, base + ",sin"});
      } else {
        budget.charge(1);
        out.push_back({v, base});
      }
    }
  }
  return out;
}

std::vector<Entry> entries_below(const Domain& d, BoundaryCondition bc, double cap,
                                 ModeBudget& budget);

std::vector<Entry> product_below(const Product& p, BoundaryCondition bc, double cap,
                                 ModeBudget& budget) {
  std::vector<Entry> left = entries_below(*p.left, bc, cap, budget);
  std::vector<Entry> right = entries_below(*p.right, bc, cap, budget);
  const auto by_value = [](const Entry& a, const Entry& b) { return a.value < b.value; };
  std::stable_sort(left.begin(), left.end(), by_value);
  std::stable_sort(right.begin(), right.end(), by_value);
  std::vector<Entry> out;
  for (std::size_t j = 0; j < left.size(); ++j) {
    for (std::size_t l = 0; l < right.size(); ++l) {
      const double v = left[j].value + right[l].value;
      if (v > cap) break;
      budget.charge(1);
      out.push_back({v, "(j,l)=(" + std::to_string(j + 1) + "," + std::to_string(l + 1) + ")"});
    }
  }
  return out;
}

std::vector<Entry> entries_below(const Domain& d, BoundaryCondition bc, double cap,
                                 ModeBudget& budget) {
  if (d.is<Interval>()) return interval_below(d.as<Interval>(), bc, cap, budget);
  if (d.is<Box>()) return box_below(d.as<Box>(), bc, cap, budget);
  if (d.is<Disk>()) return radial_below(d.as<Disk>().radius, 1.0, 0, true, bc, cap, budget);
  if (d.is<Sector>()) {
    const auto& s = d.as<Sector>();
    const int first_m = bc == BoundaryCondition::Dirichlet ? 1 : 0;
    return radial_below(s.radius, kPi / s.angle, first_m, false, bc, cap, budget);
  }
  return product_below(d.as<Product>(), bc, cap, budget);
}

// Leading Weyl term, used only to seed the search for an enumeration cap.
double weyl_guess(const Domain& d, std::size_t count) {
  const int n = dimension(d);
  const double omega = std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
  return 4.0 * kPiSquared *
         std::pow(static_cast<double>(count) / (omega * measure(d)), 2.0 / n);
}

}  // namespace

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  const char* raw = std::getenv("POLYA_MAX_MODES");
  if (raw == nullptr || *raw == '\0') return limits;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || value == 0) {
    throw DomainError("POLYA_MAX_MODES must be a positive integer, got '" + std::string(text) +
                      "'");
  }
  limits.max_modes = value;
  return limits;
}

double interval_eigenvalue(double length, BoundaryCondition bc, long long k) {
  const long long index = bc == BoundaryCondition::Dirichlet ? k : k - 1;
  const double s = static_cast<double>(index) / length;
  return kPiSquared * s * s;
}

Spectrum eigenvalues_below(const Domain& d, BoundaryCondition bc, double lambda,
                           const EnumerationLimits& limits) {
  if (!std::isfinite(lambda)) throw DomainError("eigenvalues_below: lambda must be finite");
  ModeBudget budget(limits);
  std::vector<Entry> entries = entries_below(d, bc, cap_for(lambda), budget);
  const std::size_t n = entries.size();
  return finish(d, bc, std::move(entries), n);
}

Spectrum eigenvalues(const Domain& d, BoundaryCondition bc, std::size_t count,
                     const EnumerationLimits& limits) {
  if (count < 1) throw DomainError("eigenvalues: count must be >= 1");
  if (count > limits.max_modes) {
    throw CapacityError("requested " + std::to_string(count) +
                        " eigenvalues, above the mode budget of " +
                        std::to_string(limits.max_modes));
  }
  if (d.is<Product>()) {
    ProductSpectrum ps = product_eigenvalues(SpectrumSource{d.left(), bc},
                                             SpectrumSource{d.right(), bc}, count, limits);
    ps.spectrum.domain = d;
    return std::move(ps.spectrum);
  }
  if (d.is<Interval>()) {
    Spectrum s{d, bc, {}, {}};
    s.values.reserve(count);
    s.modes.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
      s.values.push_back(interval_eigenvalue(d.as<Interval>().length, bc, static_cast<long long>(k)));
      s.modes.push_back("k=" + std::to_string(k));
    }
    return s;
  }
  // Grow a provisional cap until it covers `count` eigenvalues; everything below
  // the cap is enumerated, so the leading `count` values are exact.
  const int n = dimension(d);
  double cap = 1.25 * weyl_guess(d, count);
  for (int attempt = 0; attempt < 200; ++attempt) {
    ModeBudget budget(limits);
    std::vector<Entry> entries = entries_below(d, bc, cap, budget);
    if (entries.size() >= count) return finish(d, bc, std::move(entries), count);
    const double ratio =
        entries.empty() ? 2.0 : static_cast<double>(count) / static_cast<double>(entries.size());
    cap *= std::max(2.0, 1.1 * std::pow(ratio, 2.0 / n));
  }
  throw NumericFailure("eigenvalues: failed to bracket " + std::to_string(count) +
                       " eigenvalues of " + d.to_string());
}

namespace {

// Factor spectrum that grows by doubling when an index beyond its end is needed.
class GrowingFactor {
 public:
  GrowingFactor(const SpectrumSource& source, std::size_t initial, const EnumerationLimits& limits)
      : source_(source), limits_(limits), spectrum_(eigenvalues(source.domain, source.bc,
                                                                std::max<std::size_t>(initial, 1),
                                                                limits)) {}

  double at(std::size_t i) {
    while (i >= spectrum_.values.size()) {
      spectrum_ = eigenvalues(source_.domain, source_.bc, 2 * spectrum_.values.size(), limits_);
    }
    return spectrum_.values[i];
  }

  std::size_t size() const { return spectrum_.values.size(); }

 private:
  const SpectrumSource& source_;
  const EnumerationLimits& limits_;
  Spectrum spectrum_;
};

struct Candidate {
  double sum;
  std::size_t j;
  std::size_t l;
};

struct CandidateAfter {
  bool operator()(const Candidate& a, const Candidate& b) const {
    return std::tie(a.sum, a.j, a.l) > std::tie(b.sum, b.j, b.l);
  }
};

}  // namespace

ProductSpectrum product_eigenvalues(const SpectrumSource& left, const SpectrumSource& right,
                                    std::size_t count, const EnumerationLimits& limits) {
  if (count < 1) throw DomainError("product_eigenvalues: count must be >= 1");
  if (count > limits.max_modes) {
    throw CapacityError("requested " + std::to_string(count) +
                        " product eigenvalues, above the mode budget of " +
                        std::to_string(limits.max_modes));
  }
  const std::size_t initial = std::min<std::size_t>(count, 64);
  GrowingFactor eta(left, initial, limits);
  GrowingFactor rho(right, initial, limits);

  ProductSpectrum out{Spectrum{Domain::product(left.domain, right.domain), left.bc, {}, {}}, {}};
  out.spectrum.values.reserve(count);
  out.spectrum.modes.reserve(count);

  // Each pair (j, l) is reached once: from (j, l-1), or from (j-1, 0) when l = 0.
  std::priority_queue<Candidate, std::vector<Candidate>, CandidateAfter> frontier;
  frontier.push({eta.at(0) + rho.at(0), 0, 0});
  std::size_t max_j = 0;
  std::size_t max_l = 0;
  while (out.spectrum.values.size() < count) {
    const Candidate c = frontier.top();
    frontier.pop();
    out.spectrum.values.push_back(c.sum);
    out.spectrum.modes.push_back("(j,l)=(" + std::to_string(c.j + 1) + "," +
                                 std::to_string(c.l + 1) + ")");
    max_j = std::max(max_j, c.j);
    max_l = std::max(max_l, c.l);
    frontier.push({eta.at(c.j) + rho.at(c.l + 1), c.j, c.l + 1});
    if (c.l == 0) frontier.push({eta.at(c.j + 1) + rho.at(0), c.j + 1, 0});
    if (frontier.size() + eta.size() + rho.size() > limits.max_modes) {
      throw CapacityError("product enumeration exceeded the mode budget of " +
                          std::to_string(limits.max_modes));
    }
  }

  auto& cert = out.certificate;
  cert.left_consumed = max_j + 1;
  cert.right_consumed = max_l + 1;
  cert.largest = out.spectrum.values.back();
  cert.next_left_sum = eta.at(cert.left_consumed) + rho.at(0);
  cert.next_right_sum = eta.at(0) + rho.at(cert.right_consumed);
  if (!cert.complete()) {
    throw NumericFailure("product enumeration failed its completeness certificate");
  }
  return out;
}

std::size_t counting(const Domain& d, BoundaryCondition bc, double lambda,
                     const EnumerationLimits& limits) {
  if (!std::isfinite(lambda)) throw DomainError("counting: lambda must be finite");
  const double cap = cap_for(lambda);
  if (cap < 0.0) return 0;
  if (d.is<Interval>()) {
    const double length = d.as<Interval>().length;
    const long long offset = bc == BoundaryCondition::Dirichlet ? 0 : 1;
    long long c = static_cast<long long>(std::floor(length * std::sqrt(cap) / kPi)) + offset;
    while (interval_eigenvalue(length, bc, c + 1) <= cap) ++c;
    while (c > 0 && interval_eigenvalue(length, bc, c) > cap) --c;
    return static_cast<std::size_t>(c);
  }
  if (d.is<Product>()) {
    // Counted from the best-first product enumeration itself.
    std::size_t batch = 64;
    for (;;) {
      const Spectrum s = eigenvalues(d, bc, batch, limits);
      if (s.values.back() > cap) {
        return static_cast<std::size_t>(
            std::upper_bound(s.values.begin(), s.values.end(), cap) - s.values.begin());
      }
      batch *= 2;
    }
  }
  return eigenvalues_below(d, bc, lambda, limits).values.size();
}

std::size_t cylinder_counting(const SpectrumSource& base, double length, double lambda,
                              const EnumerationLimits& limits) {
  if (!std::isfinite(lambda)) throw DomainError("cylinder_counting: lambda must be finite");
  const std::vector<double> eta =
      lambda < 0.0 ? std::vector<double>{}
                   : eigenvalues_below(base.domain, base.bc, lambda, limits).values;
  return cylinder_counting(eta, length, lambda);
}

std::size_t cylinder_counting(const std::vector<double>& base_values, double length,
                              double lambda) {
  if (!std::isfinite(length) || length <= 0.0) {
    throw DomainError("cylinder_counting: length must be finite and > 0");
  }
  if (!std::isfinite(lambda)) throw DomainError("cylinder_counting: lambda must be finite");
  const double cap = cap_for(lambda);
  if (cap < 0.0) return 0;
  const auto rho = [length](long long l) {
    return interval_eigenvalue(length, BoundaryCondition::Dirichlet, l);
  };
  std::size_t total = 0;
  for (double e : base_values) {
    if (e > cap) break;
    long long c = static_cast<long long>(std::floor(length / kPi * std::sqrt(std::max(lambda - e, 0.0))));
    // Settle rounding at the boundary with the same comparison the enumeration uses.
    while (e + rho(c + 1) <= cap) ++c;
    while (c > 0 && e + rho(c) > cap) --c;
    total += static_cast<std::size_t>(c);
  }
  return total;
}

}  // namespace polya
