#include "rnaknot/exactcount.hpp"
#include "rnaknot/limitlaw.hpp"

#include <gtest/gtest.h>

namespace rnaknot {
namespace {

namespace mp = boost::multiprecision;

double d(const Real& x) { return x.convert_to<double>(); }
Real sqrt_of(int v) { return mp::sqrt(Real(v)); }

TEST(Rho, ValuesAtZero) {
  EXPECT_NEAR(d(rho(3, 0)), 0.2087121525, 1e-10);
  EXPECT_LT(mp::abs(rho(3, 0) - (5 - sqrt_of(21)) / 2), Real(1e-40));
  EXPECT_NEAR(d(rho(2, 0)), 0.3819660113, 1e-10);
  EXPECT_LT(mp::abs(rho(2, 0) - (3 - sqrt_of(5)) / 2), Real(1e-40));
  const Real r = rho(3, 0);
  EXPECT_LT(mp::abs(r * r - 5 * r + 1), Real(1e-12));
}

TEST(Rho, SatisfiesDefiningQuadraticAcrossBand) {
  for (int i = -10; i <= 10; ++i) {
    const Real s = Real(i) / 100;
    const Real e = mp::exp(s);
    const Real h = mp::exp(s / 2);
    const Real r3 = rho(3, s);
    const Real r2 = rho(2, s);
    EXPECT_LT(mp::abs(e * r3 * r3 - (1 + 4 * h) * r3 + 1), Real(1e-12)) << i;
    EXPECT_LT(mp::abs(e * r2 * r2 - (1 + 2 * h) * r2 + 1), Real(1e-12)) << i;
  }
}

TEST(Rho, RejectsOutsideBand) {
  EXPECT_THROW(rho(3, Real("0.11")), std::domain_error);
  EXPECT_THROW(rho(2, Real("-0.2")), std::domain_error);
  EXPECT_NO_THROW(rho(3, Real("0.1")));
  EXPECT_THROW(rho(4, 0), std::invalid_argument);
}

TEST(RhoDerivative, MatchesClosedFormsForK3) {
  const Real d1 = Real(-3) / 2 + Real(13) / 42 * sqrt_of(21);
  const Real d2 = 1 - Real(94) / 441 * sqrt_of(21);
  EXPECT_LT(mp::abs(rho_derivative(3, 0, 1) - d1), Real(1e-40));
  EXPECT_LT(mp::abs(rho_derivative(3, 0, 2) - d2), Real(1e-40));
}

TEST(RhoDerivative, MatchesFiniteDifferences) {
  const Real step("1e-4");
  for (int k : {2, 3}) {
    for (int order : {1, 2}) {
      const Real exact = rho_derivative(k, 0, order);
      const Real fd = rho_finite_difference(k, order, step);
      EXPECT_LT(mp::abs(fd / exact - 1), Real(1e-6)) << k << ' ' << order;
    }
  }
  // also away from the origin, where the e^{-s} factors matter
  const Real s("0.05");
  const Real fd1 = (rho(3, s + step) - rho(3, s - step)) / (2 * step);
  EXPECT_LT(mp::abs(fd1 / rho_derivative(3, s, 1) - 1), Real(1e-6));
}

TEST(Roots, ValuesAtZero) {
  const SingularityData z = roots_at(0);
  EXPECT_NEAR(d(z.roots[3].re), 4.7912878475, 1e-10);
  EXPECT_NEAR(d(z.roots[4].re), -0.3819660113, 1e-10);
  EXPECT_NEAR(d(z.roots[5].re), -2.6180339887, 1e-10);
  EXPECT_NEAR(d(z.roots[2].re), 0.2087121525, 1e-10);
  EXPECT_NEAR(d(z.roots[0].modulus()), 1.0, 1e-14);
  EXPECT_NEAR(d(z.roots[1].modulus()), 1.0, 1e-14);
  EXPECT_LT(mp::abs(z.rho * z.roots[3].re - 1), Real(1e-12));
}

TEST(Roots, AreRootsAndRhoIsStrictlyMinimal) {
  for (int i = -10; i <= 10; ++i) {
    const SingularityData z = roots_at(Real(i) / 100);
    for (int r = 0; r < 6; ++r)
      EXPECT_LT(quadratic_residual(z.lead, z.linear_coefficients[r], z.roots[r]), Real(1e-12))
          << i << ' ' << r;
    EXPECT_EQ(z.rho, rho(3, z.s));
    for (int r = 3; r < 6; ++r) EXPECT_LT(z.roots[2].modulus(), z.roots[r].modulus());
  }
}

TEST(LimitConstants, ReproduceReportedValues) {
  const LimitConstants c3 = limit_constants(3);
  EXPECT_NEAR(d(c3.mu), 0.39089, 5e-6);
  EXPECT_NEAR(d(c3.sigma2), 0.041565, 5e-7);
  EXPECT_LT(mp::abs(c3.gamma - (5 + sqrt_of(21)) / 2), Real(1e-12));
  ASSERT_TRUE(c3.subexp_exponent.has_value());
  EXPECT_EQ(*c3.subexp_exponent, 5);
  EXPECT_NEAR(d(*c3.amplitude), 251.3376, 1e-9);

  const LimitConstants c2 = limit_constants(2);
  EXPECT_NEAR(d(c2.mu), 0.27639, 5e-6);
  EXPECT_NEAR(d(c2.sigma2), 0.04472, 5e-6);
  // mu_2 = 1/2 - 1/(2 sqrt 5), sigma2_2 = 1/(10 sqrt 5) = sqrt(5)/50
  EXPECT_LT(mp::abs(c2.mu - (Real(1) / 2 - 1 / (2 * sqrt_of(5)))), Real(1e-40));
  EXPECT_LT(mp::abs(c2.sigma2 - sqrt_of(5) / 50), Real(1e-40));
  EXPECT_FALSE(c2.amplitude.has_value());

  for (const auto& c : {c2, c3}) {
    EXPECT_GT(c.mu, 0);
    EXPECT_GT(c.sigma2, 0);
    EXPECT_GT(c.gamma, 1);
  }
}

TEST(LimitConstants, PaperClosedForms) {
  const Real rho0 = (5 - sqrt_of(21)) / 2;
  const Real mu = -(Real(-3) / 2 + Real(13) / 42 * sqrt_of(21)) / rho0;
  const Real sigma2 = mu * mu - (1 - Real(94) / 441 * sqrt_of(21)) / rho0;
  const LimitConstants c = limit_constants(3);
  EXPECT_LT(mp::abs(c.mu - mu), Real(1e-10));
  EXPECT_LT(mp::abs(c.sigma2 - sigma2), Real(1e-10));
}

TEST(LimitConstants, UnpairedFraction) {
  // 2 * 0.27639 = 55.278% of positions are paired.
  EXPECT_NEAR(d(unpaired_fraction(limit_constants(2).mu)), 0.44721, 1e-5);
}

TEST(Asymptotic, Constants) {
  const AsymptoticValue a5 = asymptotic_s3(5);
  const Real gamma = (5 + sqrt_of(21)) / 2;
  EXPECT_NEAR(d(gamma), 4.7912878475, 1e-10);
  EXPECT_LT(mp::abs(a5.value - Real(kS3Amplitude) * 24 / 120 * mp::pow(gamma, 5)), Real(1e-30));
  EXPECT_LT(mp::abs(mp::log(a5.value) - a5.log_value), Real(1e-30));
  EXPECT_THROW(asymptotic_s3(4), std::invalid_argument);
}

TEST(Asymptotic, RatioTrend) {
  // Exact/asymptotic from an independent big-integer evaluation of the
  // inclusion-exclusion sums: 0.56924 (n=50), 0.75429 (100), 0.86953 (200).
  StructureCounter c(3);
  const auto ratio = [&](int n) { return d(to_real(c.total_by_double_sum(n)) / asymptotic_s3(n).value); };
  EXPECT_NEAR(ratio(50), 0.56924, 1e-5);
  EXPECT_NEAR(ratio(100), 0.75429, 1e-5);
  EXPECT_NEAR(ratio(200), 0.86953, 1e-5);
  EXPECT_LT(ratio(100), ratio(200));
  EXPECT_NEAR(d(implied_s3_amplitude(100, c.total_by_double_sum(100))), 0.75429 * 10.4724, 1e-3);
}

TEST(Distribution, SmallExactRow) {
  const ExactDistribution dist = distribution(4, 3);
  EXPECT_EQ(dist.probability, (std::vector<Rational>{Rational(1, 5), Rational(3, 5), Rational(1, 5)}));
  EXPECT_EQ(dist.mean, 1);
  EXPECT_EQ(dist.variance, Rational(2, 5));
}

TEST(Distribution, NormalizedExactly) {
  for (int k : {2, 3}) {
    StructureCounter counter(k);
    for (int n = 1; n <= 120; n += 7) {
      const ExactDistribution dist = distribution(counter.table(n));
      Rational sum = 0;
      for (const Rational& p : dist.probability) sum += p;
      EXPECT_EQ(sum, 1) << k << ' ' << n;
    }
  }
  EXPECT_THROW(distribution(0, 3), std::invalid_argument);
  EXPECT_THROW(distribution(10, 4), std::invalid_argument);
}

TEST(Distribution, MeanAt100) {
  EXPECT_NEAR(d(to_real(distribution(100, 3).mean)), 39.089, 1.0);
  EXPECT_NEAR(d(to_real(distribution(100, 2).mean)), 27.6393, 1.0);
}

TEST(Distribution, DensitiesApproachLimits) {
  for (int k : {2, 3}) {
    const LimitConstants c = limit_constants(k);
    const ExactDistribution d50 = distribution(50, k);
    const ExactDistribution d200 = distribution(200, k);
    const Real gap50 = mp::abs(to_real(d50.mean) / 50 - c.mu);
    const Real gap200 = mp::abs(to_real(d200.mean) / 200 - c.mu);
    EXPECT_LT(gap200, gap50) << k;
    EXPECT_LT(mp::abs(to_real(d200.variance) / 200 - c.sigma2),
              mp::abs(to_real(d50.variance) / 50 - c.sigma2))
        << k;
  }
}

TEST(Distances, StrictlyDecreasing) {
  for (int k : {2, 3}) {
    Real prev_ks = 2;
    Real prev_llt = 2;
    for (int n : {25, 50, 100, 200}) {
      const DistanceReport r = distance_report(n, k);
      EXPECT_GE(r.ks_distance, 0);
      EXPECT_LE(r.ks_distance, 1);
      EXPECT_GE(r.llt_distance, 0);
      EXPECT_LE(r.llt_distance, 1);
      EXPECT_LT(r.ks_distance, prev_ks) << k << ' ' << n;
      EXPECT_LT(r.llt_distance, prev_llt) << k << ' ' << n;
      prev_ks = r.ks_distance;
      prev_llt = r.llt_distance;
    }
  }
}

TEST(Distances, LocalDifferencePeaksNearTheMode) {
  const DistanceReport r = distance_report(100, 3);
  EXPECT_LE(std::abs(r.llt_argmax - 39), 3);
  EXPECT_NEAR(d(r.ks_distance), 0.1040008, 1e-6);
  EXPECT_NEAR(d(r.llt_distance), 0.0575236, 1e-6);
}

TEST(Distances, BinomialControl) {
  const auto row = binomial_row(10000);
  const DistanceReport r = distance_to_gaussian(row, 10000, Real("0.5"), Real("0.25"));
  EXPECT_LT(r.ks_distance, Real("0.01"));
  EXPECT_LT(r.llt_distance, Real("0.01"));
  EXPECT_NEAR(d(r.mean), 5000, 1e-9);
  EXPECT_NEAR(d(r.variance), 2500, 1e-9);
  Real prev = 1;
  for (int n : {25, 100, 400, 1600}) {
    const DistanceReport s = distance_to_gaussian(binomial_row(n), n, Real("0.5"), Real("0.25"));
    EXPECT_LT(s.llt_distance, prev);
    prev = s.llt_distance;
  }
}

TEST(Pathological, Rows) {
  EXPECT_EQ(pathological_row(2), (std::vector<BigInt>{3, -2, 3}));
  EXPECT_EQ(pathological_row(4), (std::vector<BigInt>{3, -4, 18, -4, 3}));
  for (int n = 1; n <= 40; ++n) {
    BigInt sum = 0;
    for (const BigInt& v : pathological_row(n)) sum += v;
    EXPECT_EQ(sum, BigInt(1) << n);
  }
  EXPECT_THROW(pathological_row(0), std::invalid_argument);
}

TEST(Pathological, GlobalButNotLocal) {
  Real prev_ks = 2;
  for (int n : {25, 50, 100, 200}) {
    const DistanceReport r =
        distance_to_gaussian(pathological_row(n), n, Real(kPathologicalMu), Real(kPathologicalSigma2));
    EXPECT_NEAR(d(r.mean), n / 2.0, 1e-9);
    EXPECT_NEAR(d(r.variance), n / 4.0, 1e-9);
    EXPECT_GT(r.llt_distance, Real("0.1")) << n;
    EXPECT_LT(r.ks_distance, prev_ks) << n;
    prev_ks = r.ks_distance;
  }
}

TEST(Distances, RejectsBadInput) {
  EXPECT_THROW(distance_report(1, 3), std::invalid_argument);
  const std::vector<BigInt> zero{1, -1};
  EXPECT_THROW(distance_to_gaussian(zero, 1, Real("0.5"), Real("0.25")), std::invalid_argument);
  const std::vector<BigInt> one{1, 1};
  EXPECT_THROW(distance_to_gaussian(one, 1, Real("0.5"), Real(0)), std::invalid_argument);
}

}  // namespace
}  // namespace rnaknot
