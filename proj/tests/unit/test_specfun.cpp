#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "oracles.hpp"
#include "polya/errors.hpp"
#include "polya/specfun.hpp"

using namespace polya::specfun;
using std::numbers::pi;

namespace {

long double oracle_zero(long double nu, long double a, long double b) {
  return oracle::bisect([nu](long double x) { return oracle::series_j(nu, x); }, a, b);
}

long double oracle_prime_zero(long double nu, long double a, long double b) {
  return oracle::bisect([nu](long double x) { return oracle::series_j_prime(nu, x); }, a, b);
}

}  // namespace

TEST(LnGamma, KnownValues) {
  EXPECT_EQ(ln_gamma(1.0), 0.0);
  EXPECT_NEAR(ln_gamma(0.5), std::log(std::sqrt(pi)), 1e-15);
  EXPECT_NEAR(ln_gamma(5.0), std::log(24.0), 1e-14);
}

TEST(LnGamma, RelativeAccuracyAgainstLongDouble) {
  for (double x = 0.5; x < 1e6; x *= 1.37) {
    const long double ref = std::lgamma(static_cast<long double>(x));
    if (std::fabs(ref) < 1e-3) continue;
    EXPECT_NEAR(ln_gamma(x), static_cast<double>(ref), 1e-13 * std::fabs(static_cast<double>(ref)))
        << x;
  }
}

TEST(LnGamma, RejectsBadInput) {
  EXPECT_THROW(ln_gamma(0.0), polya::DomainError);
  EXPECT_THROW(ln_gamma(-1.0), polya::DomainError);
  EXPECT_THROW(ln_gamma(std::numeric_limits<double>::infinity()), polya::DomainError);
  EXPECT_THROW(ln_gamma(std::nan("")), polya::DomainError);
}

TEST(GammaHalfInteger, KnownValues) {
  EXPECT_NEAR(gamma_half_integer(1), std::sqrt(pi), 1e-15);
  EXPECT_NEAR(gamma_half_integer(5), 3.0 * std::sqrt(pi) / 4.0, 1e-15);
  EXPECT_EQ(gamma_half_integer(4), 1.0);
  EXPECT_EQ(gamma_half_integer(2), 1.0);
  EXPECT_EQ(gamma_half_integer(10), 24.0);
  EXPECT_THROW(gamma_half_integer(0), polya::DomainError);
}

TEST(GammaHalfInteger, AgreesWithLnGamma) {
  for (int two_x = 1; two_x <= 200; ++two_x) {
    const double g = gamma_half_integer(two_x);
    const double ref = std::exp(ln_gamma(two_x / 2.0));
    EXPECT_NEAR(g / ref, 1.0, 1e-13) << two_x;
  }
}

TEST(BesselJ, SpecialValues) {
  EXPECT_EQ(bessel_j(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(2.5, 0.0), 0.0);
  EXPECT_NEAR(bessel_j(0.5, pi / 2), 2.0 / pi, 1e-15);
  EXPECT_NEAR(bessel_j(0.0, 2.404825557695773), 0.0, 1e-12);
  EXPECT_THROW(bessel_j(-1.0, 1.0), polya::DomainError);
  EXPECT_THROW(bessel_j(1.0, -1.0), polya::DomainError);
}

TEST(BesselJ, MatchesSeriesForSmallArguments) {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.7, 6.0, 12.5, 30.0, 50.0}) {
    for (double x = 0.0; x <= 12.0; x += 0.37) {
      const double ref = static_cast<double>(oracle::series_j(nu, x));
      EXPECT_NEAR(bessel_j(nu, x), ref, 1e-12) << "nu=" << nu << " x=" << x;
    }
  }
}

TEST(BesselJ, HalfIntegerClosedForm) {
  for (double x = 0.1; x <= 50.0; x += 0.0731) {
    const double ref = std::sqrt(2.0 / (pi * x)) * std::sin(x);
    EXPECT_NEAR(bessel_j(0.5, x), ref, 1e-12) << x;
    const double ref32 = std::sqrt(2.0 / (pi * x)) * (std::sin(x) / x - std::cos(x));
    EXPECT_NEAR(bessel_j(1.5, x), ref32, 1e-12) << x;
  }
}

TEST(BesselJ, RecurrenceOverTheTestEnvelope) {
  // J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu, independent of how J is evaluated.
  for (double nu = 1.0; nu <= 49.0; nu += 3.3) {
    for (double x = 0.5; x <= 50.0; x += 1.7) {
      const double lhs = bessel_j(nu - 1, x) + bessel_j(nu + 1, x);
      const double rhs = 2.0 * nu / x * bessel_j(nu, x);
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, 2.0 * nu / x)) << nu << " " << x;
    }
  }
}

TEST(BesselJPrime, MatchesFiniteDifference) {
  for (double nu : {0.0, 0.25, 0.5, 1.0, 2.0, 4.5, 10.0, 33.0}) {
    for (double x = 0.3; x <= 40.0; x += 0.61) {
      const double h = 1e-5;
      const double fd = (bessel_j(nu, x + h) - bessel_j(nu, x - h)) / (2 * h);
      EXPECT_NEAR(bessel_j_prime(nu, x), fd, 1e-8) << nu << " " << x;
    }
  }
}

TEST(BesselJPrime, SpecialValues) {
  EXPECT_NEAR(bessel_j_prime(0.0, 3.831705970207512), 0.0, 1e-10);
  EXPECT_NEAR(bessel_j_prime(0.5, pi), -std::sqrt(2.0 / (pi * pi)), 1e-12);
  EXPECT_LT(std::fabs(bessel_j_prime(2.0, 1e-6)), 1e-6);
  EXPECT_THROW(bessel_j_prime(1.0, 0.0), polya::DomainError);
}

TEST(BesselZero, AgainstBisectionOracle) {
  EXPECT_NEAR(bessel_zero(0.0, 1), static_cast<double>(oracle_zero(0, 2.0L, 3.0L)), 1e-13);
  EXPECT_NEAR(bessel_zero(1.0, 1), static_cast<double>(oracle_zero(1, 3.5L, 4.0L)), 1e-13);
  EXPECT_NEAR(bessel_zero(0.0, 2), static_cast<double>(oracle_zero(0, 5.0L, 6.0L)), 1e-13);
  EXPECT_NEAR(bessel_zero(2.5, 1), static_cast<double>(oracle_zero(2.5L, 5.0L, 6.2L)), 1e-13);
  EXPECT_NEAR(bessel_zero(0.0, 1), 2.404825557695773, 1e-13);
  EXPECT_NEAR(bessel_zero(1.0, 1), 3.831705970207512, 1e-13);
}

TEST(BesselZero, HalfIntegerOrderGivesMultiplesOfPi) {
  for (int k = 1; k <= 30; ++k) EXPECT_NEAR(bessel_zero(0.5, k), k * pi, 1e-11 * k) << k;
}

TEST(BesselZero, ResidualAndMonotonicity) {
  for (double nu : {0.0, 0.3, 1.0, 2.0, 7.5, 18.0, 45.0, 120.0}) {
    double prev = nu;
    for (int k = 1; k <= 40; ++k) {
      const double z = bessel_zero(nu, k);
      EXPECT_GT(z, prev) << nu << " " << k;
      EXPECT_LE(std::fabs(bessel_j(nu, z)), 1e-11) << nu << " " << k;
      prev = z;
    }
  }
}

TEST(BesselZero, McMahonAndScanAgree) {
  for (double nu : {0.0, 0.5, 1.0, 3.0, 4.7}) {
    for (int k : {20, 35, 60, 100}) {
      EXPECT_NEAR(bessel_zero(nu, k), detail::bessel_zero_by_scan(nu, k), 1e-10 * k)
          << nu << " " << k;
      EXPECT_NEAR(bessel_prime_zero(nu, k), detail::bessel_prime_zero_by_scan(nu, k), 1e-10 * k)
          << nu << " " << k;
    }
  }
}

TEST(BesselZero, ZeroInterlacing) {
  for (int i = 0; i <= 80; ++i) {
    const double nu = 0.5 * i;
    const auto a = bessel_zeros_below(nu, 400.0);
    const auto b = bessel_zeros_below(nu + 1.0, 400.0);
    ASSERT_GE(a.size(), 51u) << nu;
    ASSERT_GE(b.size(), 50u) << nu;
    for (int k = 0; k < 50; ++k) {
      EXPECT_LT(a[k], b[k]) << nu << " " << k;
      EXPECT_LT(b[k], a[k + 1]) << nu << " " << k;
    }
    EXPECT_GT(a[0], nu);
  }
}

TEST(BesselZero, ZerosBelowMatchesIndexedZeros) {
  for (double nu : {0.0, 1.3, 9.0}) {
    const auto zs = bessel_zeros_below(nu, 100.0);
    for (std::size_t i = 0; i < zs.size(); ++i)
      EXPECT_NEAR(zs[i], bessel_zero(nu, static_cast<int>(i) + 1), 1e-12);
    EXPECT_LT(zs.back(), 100.0);
    EXPECT_GE(bessel_zero(nu, static_cast<int>(zs.size()) + 1), 100.0);
  }
  EXPECT_TRUE(bessel_zeros_below(5.0, 5.0).empty());
}

TEST(BesselPrimeZero, AgainstBisectionOracle) {
  EXPECT_NEAR(bessel_prime_zero(0.0, 1), 3.831705970207512, 1e-12);
  EXPECT_NEAR(bessel_prime_zero(1.0, 1),
              static_cast<double>(oracle_prime_zero(1, 1.5L, 2.2L)), 1e-12);
  EXPECT_NEAR(bessel_prime_zero(1.0, 1), 1.841183781340659, 1e-12);
  const long double tan_root =
      oracle::bisect([](long double x) { return std::sin(x) - 2 * x * std::cos(x); }, 1.0L, 1.5L);
  EXPECT_NEAR(bessel_prime_zero(0.5, 1), static_cast<double>(tan_root), 1e-12);
  EXPECT_NEAR(bessel_prime_zero(0.5, 1), 1.165561185207211, 1e-12);
  EXPECT_NEAR(bessel_prime_zero(2.5, 2),
              static_cast<double>(oracle_prime_zero(2.5L, 6.0L, 8.5L)), 1e-12);
}

TEST(BesselPrimeZero, ResidualMonotonicityAndExcludesOrigin) {
  for (double nu : {0.0, 0.2, 0.5, 1.0, 3.0, 11.0, 60.0}) {
    double prev = 0.0;
    for (int k = 1; k <= 30; ++k) {
      const double z = bessel_prime_zero(nu, k);
      EXPECT_GT(z, prev);
      EXPECT_LE(std::fabs(bessel_j_prime(nu, z)), 1e-10) << nu << " " << k;
      prev = z;
    }
  }
  const auto zs = bessel_prime_zeros_below(0.0, 20.0);
  ASSERT_FALSE(zs.empty());
  EXPECT_GT(zs.front(), 3.0);
}

TEST(BesselPrimeZero, PrimeZerosInterlaceWithZeros) {
  // nu <= j'_{nu,1} < j_{nu,1} < j'_{nu,2} < j_{nu,2} < ...
  for (double nu : {0.5, 1.0, 2.0, 7.0, 25.0}) {
    for (int k = 1; k <= 20; ++k) {
      EXPECT_LT(bessel_prime_zero(nu, k), bessel_zero(nu, k));
      EXPECT_LT(bessel_zero(nu, k), bessel_prime_zero(nu, k + 1));
    }
    EXPECT_GE(bessel_prime_zero(nu, 1), nu);
  }
}

TEST(ZeroRequest, Validation) {
  EXPECT_THROW(ZeroRequest(-0.5, 1), polya::DomainError);
  EXPECT_THROW(ZeroRequest(1.0, 0), polya::DomainError);
  EXPECT_THROW(ZeroRequest(std::nan(""), 1), polya::DomainError);
  EXPECT_NEAR(bessel_zero(ZeroRequest(0.0, 1)), 2.404825557695773, 1e-13);
  EXPECT_THROW(bessel_zero(0.0, 0), polya::DomainError);
}

TEST(Specfun, ConcurrentCallsAgreeWithSequential) {
  std::vector<double> expected;
  for (int k = 1; k <= 50; ++k) expected.push_back(bessel_zero(3.3, k) + ln_gamma(k + 0.5));
  std::vector<std::vector<double>> got(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int k = 1; k <= 50; ++k) got[t].push_back(bessel_zero(3.3, k) + ln_gamma(k + 0.5));
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& g : got) EXPECT_EQ(g, expected);
}
