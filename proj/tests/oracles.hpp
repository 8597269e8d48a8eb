#pragma once

// Independent reference implementations for tests. Nothing here calls into the
// library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr long double kPi = std::numbers::pi_v<long double>;

// Power series for J_nu in long double. Accurate while x stays small enough that
// the largest term does not swamp the sum (about x <= 12 for 1e-13 absolute).
inline long double series_j(long double nu, long double x) {
  if (x == 0.0L) return nu == 0.0L ? 1.0L : 0.0L;
  const long double half = x / 2.0L;
  long double term = std::pow(half, nu) / std::tgamma(nu + 1.0L);
  long double sum = term;
  for (int m = 1; m < 400; ++m) {
    term *= -half * half / (static_cast<long double>(m) * (m + nu));
    sum += term;
    if (std::fabs(term) < 1e-30L * std::fabs(sum) && m > 5) break;
  }
  return sum;
}

// J'_nu from the series, through J'_nu = (nu/x) J_nu - J_{nu+1}.
inline long double series_j_prime(long double nu, long double x) {
  return nu / x * series_j(nu, x) - series_j(nu + 1.0L, x);
}

// Plain bisection on a sign change in [a, b].
inline long double bisect(const std::function<long double(long double)>& f, long double a,
                          long double b) {
  long double fa = f(a);
  for (int it = 0; it < 200 && b - a > 1e-18L * b; ++it) {
    const long double mid = (a + b) / 2.0L;
    const long double fm = f(mid);
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return (a + b) / 2.0L;
}

// Sorted values pi^2 sum_i n_i^2 / a_i^2 over n_i >= 1 (Dirichlet) or n_i >= 0
// (Neumann), all tuples with value <= cap.
inline std::vector<double> lattice(const std::vector<double>& sides, bool neumann, double cap) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  std::vector<double> out;
  std::vector<int> idx(sides.size(), neumann ? 0 : 1);
  const int lo = neumann ? 0 : 1;
  std::function<void(std::size_t, double)> rec = [&](std::size_t axis, double partial) {
    if (axis == sides.size()) {
      out.push_back(partial);
      return;
    }
    for (int n = lo;; ++n) {
      const double v = partial + pi2 * n * n / (sides[axis] * sides[axis]);
      // Remaining axes add at least their minimum.
      double rest = 0.0;
      for (std::size_t b = axis + 1; b < sides.size(); ++b)
        rest += pi2 * lo * lo / (sides[b] * sides[b]);
      if (v + rest > cap) break;
      rec(axis + 1, v);
    }
  };
  rec(0, 0.0);
  std::sort(out.begin(), out.end());
  return out;
}

// First `count` lattice values, growing the cap until enough are found.
inline std::vector<double> lattice_first(const std::vector<double>& sides, bool neumann,
                                         std::size_t count) {
  double cap = 50.0;
  for (;;) {
    auto v = lattice(sides, neumann, cap);
    if (v.size() >= count) {
      // Values at the cap may be incomplete only above it, so the first `count`
      // are exact once count <= size.
      v.resize(count);
      return v;
    }
    cap *= 2.0;
  }
}

inline std::size_t count_le(const std::vector<double>& sorted, double lambda) {
  return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), lambda) -
                                  sorted.begin());
}

}  // namespace oracle
