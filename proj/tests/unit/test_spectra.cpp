#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <map>
#include <random>

#include "oracles.hpp"
#include "polya/errors.hpp"
#include "polya/specfun.hpp"
#include "polya/spectra.hpp"

using namespace polya;
using std::numbers::pi;

namespace {

constexpr double kPi2 = pi * pi;
constexpr auto D = BoundaryCondition::Dirichlet;
constexpr auto N = BoundaryCondition::Neumann;

bool simple_at(const std::vector<double>& v, std::size_t i) {
  const double tol = 1e-9 * v[i];
  return (i == 0 || v[i] - v[i - 1] > tol) && (i + 1 == v.size() || v[i + 1] - v[i] > tol);
}

}  // namespace

TEST(Eigenvalues, Interval) {
  const auto s = eigenvalues(Domain::interval(1), D, 3);
  ASSERT_EQ(s.values.size(), 3u);
  EXPECT_DOUBLE_EQ(s.values[0], kPi2);
  EXPECT_DOUBLE_EQ(s.values[1], 4 * kPi2);
  EXPECT_DOUBLE_EQ(s.values[2], 9 * kPi2);
  EXPECT_EQ(s.modes[0], "k=1");
  const auto n = eigenvalues(Domain::interval(2), N, 3);
  EXPECT_EQ(n.values[0], 0.0);
  EXPECT_DOUBLE_EQ(n.values[2], kPi2);
}

TEST(Eigenvalues, UnitSquare) {
  const auto s = eigenvalues(Domain::box({1, 1}), D, 4);
  const std::vector<double> expected{2 * kPi2, 5 * kPi2, 5 * kPi2, 8 * kPi2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s.values[i], expected[i], 1e-12 * expected[i]);
}

TEST(Eigenvalues, DiskFirstValues) {
  const long double j01 =
      oracle::bisect([](long double x) { return oracle::series_j(0, x); }, 2.0L, 3.0L);
  const auto s = eigenvalues(Domain::disk(1), D, 3);
  EXPECT_NEAR(s.values[0], static_cast<double>(j01 * j01), 1e-12);
  EXPECT_EQ(s.modes[0], "m=0,k=1");
  EXPECT_DOUBLE_EQ(s.values[1], s.values[2]);
  const auto n = eigenvalues(Domain::disk(1), N, 2);
  EXPECT_EQ(n.values[0], 0.0);
  EXPECT_NEAR(n.values[1], 1.841183781340659 * 1.841183781340659, 1e-12);
}

TEST(Eigenvalues, DiskMultiplicities) {
  // Every value of order m >= 1 appears exactly twice.
  const auto s = eigenvalues(Domain::disk(1), D, 400);
  std::map<std::string, int> per_mode;
  for (const auto& m : s.modes) {
    const auto cut = m.find(",cos") != std::string::npos ? m.find(",cos") : m.find(",sin");
    per_mode[m.substr(0, cut)]++;
  }
  for (const auto& [label, count] : per_mode) {
    if (label.rfind("m=0,", 0) == 0) EXPECT_EQ(count, 1) << label;
  }
}

TEST(Eigenvalues, DiskAgainstDirectZeroEnumeration) {
  // Collect (j_{m,k}/R)^2 from specfun below a cap and compare with the sorted spectrum.
  const double R = 1.3;
  const double cap = 900.0;
  std::vector<double> ref;
  for (int m = 0; m < 60; ++m) {
    for (double z : specfun::bessel_zeros_below(m, R * std::sqrt(cap))) {
      ref.push_back(z * z / (R * R));
      if (m > 0) ref.push_back(z * z / (R * R));
    }
  }
  std::sort(ref.begin(), ref.end());
  const auto s = eigenvalues(Domain::disk(R), D, ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(s.values[i], ref[i], 1e-12 * ref[i]);
}

TEST(Eigenvalues, SectorHalfDiskMatchesOddDiskModes) {
  const auto half = eigenvalues(Domain::sector(1, pi), D, 30);
  std::vector<double> ref;
  for (int m = 1; m < 20; ++m)
    for (double z : specfun::bessel_zeros_below(m, 20.0)) ref.push_back(z * z);
  std::sort(ref.begin(), ref.end());
  for (int i = 0; i < 30; ++i) EXPECT_NEAR(half.values[i], ref[i], 1e-12 * ref[i]);
}

TEST(Eigenvalues, SectorNeumannHasZeroModeOnce) {
  const auto s = eigenvalues(Domain::sector(1, pi / 3), N, 20);
  EXPECT_EQ(s.values[0], 0.0);
  EXPECT_GT(s.values[1], 0.0);
  EXPECT_EQ(s.modes[0], "m=0,k=0");
}

TEST(Eigenvalues, BoxOracle) {
  const double r2 = std::sqrt(2.0);
  for (double a : {1.0, r2, 2.0}) {
    for (double b : {1.0, r2, 2.0}) {
      for (auto bc : {D, N}) {
        const auto ref = oracle::lattice_first({a, b}, bc == N, 2000);
        const auto s = eigenvalues(Domain::box({a, b}), bc, 2000);
        ASSERT_EQ(s.values.size(), 2000u);
        for (std::size_t i = 0; i < ref.size(); ++i)
          ASSERT_NEAR(s.values[i], ref[i], 1e-12 * ref[i]) << a << " " << b << " " << i;
      }
    }
  }
}

TEST(Eigenvalues, ThreeDimensionalBoxOracle) {
  const auto ref = oracle::lattice_first({1.0, 0.7, 1.9}, false, 1500);
  const auto s = eigenvalues(Domain::box({1.0, 0.7, 1.9}), D, 1500);
  for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_NEAR(s.values[i], ref[i], 1e-12 * ref[i]);
}

TEST(Eigenvalues, ProductOfIntervalsEqualsBox) {
  for (auto bc : {D, N}) {
    const auto p = eigenvalues(Domain::product(Domain::interval(1), Domain::interval(std::sqrt(2.0))),
                               bc, 2000);
    const auto b = eigenvalues(Domain::box({1, std::sqrt(2.0)}), bc, 2000);
    for (std::size_t i = 0; i < 2000; ++i)
      ASSERT_NEAR(p.values[i], b.values[i], 1e-12 * std::max(1.0, b.values[i])) << i;
  }
}

TEST(Eigenvalues, SpectrumInvariants) {
  const std::vector<Domain> domains{
      Domain::interval(0.8), Domain::box({1, 2}), Domain::disk(1), Domain::sector(1, 1.0),
      Domain::product(Domain::disk(1), Domain::interval(0.5))};
  for (const auto& d : domains) {
    for (auto bc : {D, N}) {
      const auto s = eigenvalues(d, bc, 300);
      ASSERT_EQ(s.values.size(), 300u);
      ASSERT_EQ(s.modes.size(), 300u);
      EXPECT_TRUE(std::is_sorted(s.values.begin(), s.values.end())) << d.to_string();
      if (bc == D)
        EXPECT_GT(s.values[0], 0.0);
      else
        EXPECT_EQ(s.values[0], 0.0);
    }
  }
}

TEST(Eigenvalues, SectorMonotoneInAngle) {
  const auto a2 = eigenvalues(Domain::sector(1, pi / 2), D, 100);
  const auto a3 = eigenvalues(Domain::sector(1, pi / 3), D, 100);
  const auto a4 = eigenvalues(Domain::sector(1, pi / 4), D, 100);
  for (int i = 0; i < 100; ++i) {
    EXPECT_LE(a2.values[i], a3.values[i]);
    EXPECT_LE(a3.values[i], a4.values[i]);
  }
}

TEST(Eigenvalues, ScalingHomogeneity) {
  for (const auto& [d, d2] : std::vector<std::pair<Domain, Domain>>{
           {Domain::disk(1), Domain::disk(2)},
           {Domain::sector(1, 0.9), Domain::sector(2, 0.9)},
           {Domain::box({1, 3}), Domain::box({2, 6})}}) {
    const auto s = eigenvalues(d, D, 200);
    const auto t = eigenvalues(d2, D, 200);
    for (int i = 0; i < 200; ++i) EXPECT_NEAR(t.values[i] * 4, s.values[i], 1e-12 * s.values[i]);
  }
}

TEST(Eigenvalues, RejectsZeroCount) {
  EXPECT_THROW(eigenvalues(Domain::disk(1), D, 0), DomainError);
}

TEST(Eigenvalues, CapacityLimit) {
  EnumerationLimits tiny;
  tiny.max_modes = 50;
  EXPECT_THROW(eigenvalues(Domain::box({1, 1, 1}), D, 1000, tiny), CapacityError);
  EXPECT_THROW(eigenvalues(Domain::disk(1), D, 1000, tiny), CapacityError);
  EXPECT_THROW(
      eigenvalues(Domain::product(Domain::disk(1), Domain::interval(1)), D, 1000, tiny),
      CapacityError);
}

TEST(EnumerationLimits, FromEnvironment) {
  ::setenv("POLYA_MAX_MODES", "1234", 1);
  EXPECT_EQ(EnumerationLimits::from_environment().max_modes, 1234u);
  ::setenv("POLYA_MAX_MODES", "lots", 1);
  EXPECT_THROW(EnumerationLimits::from_environment(), DomainError);
  ::unsetenv("POLYA_MAX_MODES");
  EXPECT_EQ(EnumerationLimits::from_environment().max_modes, kDefaultMaxModes);
}

TEST(ProductEigenvalues, IntervalsAndCertificate) {
  const auto ps = product_eigenvalues({Domain::interval(1), D}, {Domain::interval(1), D}, 4);
  const std::vector<double> expected{2 * kPi2, 5 * kPi2, 5 * kPi2, 8 * kPi2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(ps.spectrum.values[i], expected[i], 1e-12 * expected[i]);
  EXPECT_TRUE(ps.certificate.complete());
  EXPECT_EQ(ps.spectrum.modes[0], "(j,l)=(1,1)");
  EXPECT_EQ(ps.spectrum.modes[1], "(j,l)=(1,2)");
  EXPECT_EQ(ps.spectrum.modes[2], "(j,l)=(2,1)");
}

TEST(ProductEigenvalues, DiskTimesInterval) {
  const auto ps = product_eigenvalues({Domain::disk(1), D}, {Domain::interval(1), D}, 1);
  EXPECT_NEAR(ps.spectrum.values[0], 5.783185962946784 + kPi2, 1e-11);
}

TEST(ProductEigenvalues, FirstValueIsSumOfFirsts) {
  for (auto bc : {D, N}) {
    const SpectrumSource l{Domain::sector(1, 1.2), bc};
    const SpectrumSource r{Domain::box({0.4, 2}), bc};
    const auto ps = product_eigenvalues(l, r, 1);
    EXPECT_NEAR(ps.spectrum.values[0],
                eigenvalues(l.domain, bc, 1).values[0] + eigenvalues(r.domain, bc, 1).values[0],
                1e-12 * std::max(1.0, ps.spectrum.values[0]));
  }
}

TEST(ProductEigenvalues, CertificateAlwaysComplete) {
  for (std::size_t count : {1u, 7u, 100u, 2500u}) {
    const auto ps =
        product_eigenvalues({Domain::disk(1), D}, {Domain::interval(0.3), D}, count);
    const auto& c = ps.certificate;
    EXPECT_TRUE(c.complete());
    EXPECT_EQ(c.largest, ps.spectrum.values.back());
    EXPECT_GE(c.next_left_sum, c.largest);
    EXPECT_GE(c.next_right_sum, c.largest);
  }
}

TEST(ProductEigenvalues, AgainstPairBruteForce) {
  const auto left = eigenvalues(Domain::disk(1), N, 400).values;
  const auto right = eigenvalues(Domain::interval(2.0), N, 400).values;
  std::vector<double> sums;
  for (double a : left)
    for (double b : right) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  const auto ps = product_eigenvalues({Domain::disk(1), N}, {Domain::interval(2.0), N}, 1000);
  // The brute force is only complete below min(left.back(), right.back()).
  ASSERT_LT(ps.spectrum.values.back(), std::min(left.back(), right.back()));
  for (std::size_t i = 0; i < 1000; ++i)
    EXPECT_NEAR(ps.spectrum.values[i], sums[i], 1e-12 * std::max(1.0, sums[i]));
}

TEST(Counting, Examples) {
  EXPECT_EQ(counting(Domain::interval(1), D, 50.0), 2u);
  EXPECT_EQ(counting(Domain::box({1, 1}), D, 2 * kPi2), 1u);
  EXPECT_EQ(counting(Domain::disk(1), D, 5.0), 0u);
  EXPECT_EQ(counting(Domain::disk(1), N, 0.0), 1u);
  EXPECT_EQ(counting(Domain::interval(1), D, kPi2 * 9), 3u);
  EXPECT_EQ(counting(Domain::interval(1), N, kPi2 * 9), 4u);
  EXPECT_EQ(counting(Domain::box({1, 1}), D, -1.0), 0u);
}

TEST(Counting, DualityWithEnumeration) {
  const std::vector<Domain> domains{
      Domain::interval(1.3),
      Domain::box({1, 1}),
      Domain::box({1, std::sqrt(2.0), 0.6}),
      Domain::disk(1),
      Domain::sector(1, pi / 3),
      Domain::sector(1.2, 2.0),
      Domain::product(Domain::disk(1), Domain::interval(0.7)),
      Domain::product(Domain::box({1, 2}), Domain::interval(0.5))};
  for (const auto& d : domains) {
    for (auto bc : {D, N}) {
      const auto s = eigenvalues(d, bc, 400);
      for (std::size_t k = 1; k <= s.values.size(); k += 7) {
        const double v = s.values[k - 1];
        EXPECT_GE(counting(d, bc, v + 1e-9), k) << d.to_string() << " k=" << k;
        if (v > 0 && simple_at(s.values, k - 1))
          EXPECT_LT(counting(d, bc, v - 1e-9 * v), k) << d.to_string() << " k=" << k;
      }
    }
  }
}

TEST(Counting, LatticeOracle) {
  const auto ref = oracle::lattice({1.0, 1.7}, false, 3000.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 3000.0);
  for (int i = 0; i < 100; ++i) {
    const double lam = u(rng);
    EXPECT_EQ(counting(Domain::box({1.0, 1.7}), D, lam), oracle::count_le(ref, lam)) << lam;
  }
}

TEST(CylinderCounting, Examples) {
  EXPECT_EQ(cylinder_counting({Domain::interval(1), D}, 1.0, 2 * kPi2), 1u);
  EXPECT_EQ(cylinder_counting({Domain::disk(1), D}, 1.0, 1.0), 0u);
  EXPECT_EQ(cylinder_counting({Domain::box({1, 1}), D}, 1.0, 3 * kPi2 + 0.1), 1u);
  EXPECT_EQ(cylinder_counting({Domain::box({1, 1}), D}, 1.0, 3 * kPi2 - 0.1), 0u);
  EXPECT_THROW(cylinder_counting({Domain::box({1, 1}), D}, 0.0, 30.0), DomainError);
}

TEST(CylinderCounting, TripleLatticeOracle) {
  const auto ref = oracle::lattice({1.0, 1.0, 0.6}, false, 2500.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 2500.0);
  for (int i = 0; i < 60; ++i) {
    const double lam = u(rng);
    EXPECT_EQ(cylinder_counting({Domain::box({1, 1}), D}, 0.6, lam), oracle::count_le(ref, lam));
  }
}

TEST(CylinderCounting, IdentityWithProductCounting) {
  std::mt19937_64 rng(3);
  for (const auto& base : {Domain::interval(1), Domain::box({1, 1}), Domain::disk(1),
                           Domain::sector(1, 1.0)}) {
    for (double len : {0.3, 1.0, 2.2}) {
      const auto cyl = Domain::product(base, Domain::interval(len));
      const auto top = eigenvalues(cyl, D, 600).values.back();
      std::uniform_real_distribution<double> u(0.0, top);
      for (int i = 0; i < 50; ++i) {
        const double lam = u(rng);
        EXPECT_EQ(cylinder_counting({base, D}, len, lam), counting(cyl, D, lam))
            << base.to_string() << " l=" << len << " lam=" << lam;
      }
      // Exactly at eigenvalues, where rounding matters most.
      const auto vals = eigenvalues(cyl, D, 200).values;
      for (double v : vals) EXPECT_EQ(cylinder_counting({base, D}, len, v), counting(cyl, D, v));
    }
  }
}
