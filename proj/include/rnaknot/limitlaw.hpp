#pragma once

// Limit laws for the arc count of k-noncrossing structures (k = 2, 3).
//
// With the arc weight w = e^{s/2}, the dominant singularity rho_k(s) of
//   sum_n sum_h S'_k(n,h) e^{hs} z^n
// comes from the square-root singularity of the matching series pulled back
// through y = (e^{s/2} z / (e^s z^2 - z + 1))^2. For k = 3 that is y = 1/16,
// for k = 2 (Catalan) y = 1/4, which gives
//
//   k = 3:  e^s z^2 - (1 + 4e^{s/2}) z + 1 = 0
//   k = 2:  e^s z^2 - (1 + 2e^{s/2}) z + 1 = 0
//
// rho_k(s) is the smaller root. The arc count X_n then has mean ~ mu n and
// variance ~ sigma^2 n with mu = -rho'(0)/rho(0), sigma^2 = mu^2 - rho''(0)/rho(0).

#include "rnaknot/exactcount.hpp"
#include "rnaknot/numeric.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnaknot {

inline constexpr double kSingularityBand = 0.1;  // |s| validated band
inline constexpr double kS3Amplitude = 10.4724;   // multiplied by 4! in the asymptotic

namespace detail {

// rho(s) = (a e^{s/2} + 1 - sqrt(c e^s + d e^{s/2} + 1)) / (2 e^s)
struct RhoFamily {
  int a;
  int c;
  int d;
};

inline RhoFamily rho_family(int k) {
  switch (k) {
    case 2: return {2, 0, 4};
    case 3: return {4, 12, 8};
    default: throw std::invalid_argument("singularity data only for k = 2, 3, got " + std::to_string(k));
  }
}

inline void check_band(const Real& s) {
  if (boost::multiprecision::abs(s) > Real(kSingularityBand))
    throw std::domain_error("|s| must be <= 0.1, got " + s.str(12));
}

inline Real rho_unchecked(int k, const Real& s) {
  const RhoFamily f = rho_family(k);
  const Real e = boost::multiprecision::exp(s);
  const Real h = boost::multiprecision::exp(s / 2);
  return (f.a * h + 1 - boost::multiprecision::sqrt(f.c * e + f.d * h + 1)) / (2 * e);
}

}  // namespace detail

inline Real rho(int k, const Real& s) {
  detail::check_band(s);
  return detail::rho_unchecked(k, s);
}

/// First or second derivative of rho_k in s, differentiated by hand.
/// With g = a h + 1 - sqrt(Q), h = e^{s/2}, Q = c e^s + d h + 1, rho = g e^{-s} / 2:
///   rho'  = (g' - g) e^{-s} / 2
///   rho'' = (g'' - 2g' + g) e^{-s} / 2
///   g'  = a h/2 - Q' / (2 sqrt Q)
///   g'' = a h/4 - Q'' / (2 sqrt Q) + Q'^2 / (4 Q^{3/2})
///   Q'  = c e^s + d h/2,  Q'' = c e^s + d h/4
inline Real rho_derivative(int k, const Real& s, int order) {
  detail::check_band(s);
  if (order < 0 || order > 2) throw std::invalid_argument("rho_derivative: order must be 0, 1 or 2");
  const detail::RhoFamily f = detail::rho_family(k);
  const Real e = boost::multiprecision::exp(s);
  const Real h = boost::multiprecision::exp(s / 2);
  const Real q = f.c * e + f.d * h + 1;
  const Real q1 = f.c * e + f.d * h / 2;
  const Real q2 = f.c * e + f.d * h / 4;
  const Real root = boost::multiprecision::sqrt(q);
  const Real g = f.a * h + 1 - root;
  const Real g1 = f.a * h / 2 - q1 / (2 * root);
  const Real g2 = f.a * h / 4 - q2 / (2 * root) + q1 * q1 / (4 * q * root);
  switch (order) {
    case 0: return g / (2 * e);
    case 1: return (g1 - g) / (2 * e);
    default: return (g2 - 2 * g1 + g) / (2 * e);
  }
}

/// Central differences of rho_k at s = 0: (rho(t) - rho(-t)) / 2t and
/// (rho(t) - 2 rho(0) + rho(-t)) / t^2.
inline Real rho_finite_difference(int k, int order, const Real& step) {
  const Real plus = rho(k, step);
  const Real minus = rho(k, -step);
  if (order == 1) return (plus - minus) / (2 * step);
  if (order == 2) return (plus - 2 * rho(k, Real(0)) + minus) / (step * step);
  throw std::invalid_argument("rho_finite_difference: order must be 1 or 2");
}

struct ComplexValue {
  Real re;
  Real im;
  Real modulus() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

/// Residual |e^s z^2 + b z + 1| of a quadratic with unit constant term.
inline Real quadratic_residual(const Real& lead, const Real& b, const ComplexValue& z) {
  const Real re = lead * (z.re * z.re - z.im * z.im) + b * z.re + 1;
  const Real im = lead * 2 * z.re * z.im + b * z.im;
  return boost::multiprecision::sqrt(re * re + im * im);
}

/// The six singularities of the k = 3 arc-weighted generating function.
///   zeta_{1,2}: roots of e^s z^2 - z + 1 (complex conjugate near s = 0)
///   zeta_{3,4}: roots of e^s z^2 - (1 + 4e^{s/2}) z + 1, zeta_3 = rho_3(s)
///   zeta_{5,6}: roots of e^s z^2 + (4e^{s/2} - 1) z + 1
struct SingularityData {
  int k = 3;
  Real s;
  Real rho;
  std::array<ComplexValue, 6> roots;  // roots[i] is zeta_{i+1}

  // Linear coefficient b of the quadratic e^s z^2 + b z + 1 that roots[i] solves.
  std::array<Real, 6> linear_coefficients;
  Real lead;  // e^s
};

inline SingularityData roots_at(const Real& s) {
  detail::check_band(s);
  namespace mp = boost::multiprecision;
  SingularityData out;
  out.s = s;
  const Real e = mp::exp(s);
  const Real h = mp::exp(s / 2);
  out.lead = e;

  // 1 - 4e^s < 0 in the whole band.
  const Real disc12 = 1 - 4 * e;
  if (disc12 < 0) {
    const Real im = mp::sqrt(-disc12) / (2 * e);
    out.roots[0] = {1 / (2 * e), -im};
    out.roots[1] = {1 / (2 * e), im};
  } else {
    out.roots[0] = {(1 - mp::sqrt(disc12)) / (2 * e), Real(0)};
    out.roots[1] = {(1 + mp::sqrt(disc12)) / (2 * e), Real(0)};
  }
  const Real mu_plus = 1 + 4 * h;
  const Real mu_minus = 1 - 4 * h;
  const Real theta = mp::sqrt(12 * e + 8 * h + 1);
  // Discriminant of e^s z^2 + (4h - 1) z + 1 is (4h - 1)^2 - 4e^s = 12e^s - 8h + 1.
  const Real theta_minus = mp::sqrt(12 * e - 8 * h + 1);
  out.roots[2] = {(mu_plus - theta) / (2 * e), Real(0)};
  out.roots[3] = {(mu_plus + theta) / (2 * e), Real(0)};
  out.roots[4] = {(mu_minus + theta_minus) / (2 * e), Real(0)};
  out.roots[5] = {(mu_minus - theta_minus) / (2 * e), Real(0)};
  out.linear_coefficients = {Real(-1), Real(-1), -mu_plus, -mu_plus, -mu_minus, -mu_minus};
  out.rho = out.roots[2].re;
  return out;
}

struct LimitConstants {
  int k = 3;
  Real mu;
  Real sigma2;
  Real gamma;  // 1 / rho_k(0)
  std::optional<int> subexp_exponent;
  std::optional<Real> amplitude;
};

inline LimitConstants limit_constants(int k) {
  const Real zero(0);
  const Real r0 = rho_derivative(k, zero, 0);
  const Real r1 = rho_derivative(k, zero, 1);
  const Real r2 = rho_derivative(k, zero, 2);
  LimitConstants c;
  c.k = k;
  c.mu = -r1 / r0;
  c.sigma2 = c.mu * c.mu - r2 / r0;
  c.gamma = 1 / r0;
  if (k == 3) {
    c.subexp_exponent = 5;
    c.amplitude = Real(kS3Amplitude) * 24;
  }
  return c;
}

/// Fraction of unpaired positions implied by an arc density mu.
inline Real unpaired_fraction(const Real& mu) { return 1 - 2 * mu; }

struct AsymptoticValue {
  Real value;
  Real log_value;
};

/// 10.4724 * 4! / (n (n-1) ... (n-4)) * ((5 + sqrt 21) / 2)^n, through logs.
inline AsymptoticValue asymptotic_s3(int n) {
  if (n < 5) throw std::invalid_argument("asymptotic_s3 needs n >= 5");
  namespace mp = boost::multiprecision;
  const Real gamma = (5 + mp::sqrt(Real(21))) / 2;
  Real log_falling = 0;
  for (int j = 0; j < 5; ++j) log_falling += mp::log(Real(n - j));
  AsymptoticValue out;
  out.log_value = mp::log(Real(kS3Amplitude) * 24) - log_falling + n * mp::log(gamma);
  out.value = mp::exp(out.log_value);
  return out;
}

/// The amplitude that would make the asymptotic exact at n:
/// S_3(n) (n)_5 gamma^{-n} / 4!.
inline Real implied_s3_amplitude(int n, const BigInt& exact_total) {
  if (n < 5) throw std::invalid_argument("implied_s3_amplitude needs n >= 5");
  namespace mp = boost::multiprecision;
  const Real gamma = (5 + mp::sqrt(Real(21))) / 2;
  Real falling = 1;
  for (int j = 0; j < 5; ++j) falling *= n - j;
  return to_real(exact_total) * falling / mp::pow(gamma, n) / 24;
}

struct ExactDistribution {
  int n = 0;
  int k = 2;
  std::vector<Rational> probability;  // P(X_n = h), h = 0..n/2
  Rational mean;
  Rational variance;
};

inline ExactDistribution distribution(const CountTable& table) {
  if (table.total == 0) throw std::invalid_argument("distribution: empty table");
  ExactDistribution d;
  d.n = table.n;
  d.k = table.k;
  Rational first = 0;
  Rational second = 0;
  for (std::size_t h = 0; h < table.by_arcs.size(); ++h) {
    d.probability.emplace_back(table.by_arcs[h], table.total);
    first += d.probability.back() * static_cast<long>(h);
    second += d.probability.back() * static_cast<long>(h * h);
  }
  d.mean = first;
  d.variance = second - first * first;
  return d;
}

inline ExactDistribution distribution(int n, int k) {
  if (n < 1) throw std::invalid_argument("distribution needs n >= 1");
  detail::rho_family(k);
  return distribution(count_table(k, n));
}

struct DistanceReport {
  int n = 0;
  int k = 0;  // 0 for rows that are not structure counts
  Real mean;
  Real variance;
  Real ks_distance;
  Real llt_distance;
  int ks_argmax = 0;
  int llt_argmax = 0;
};

/// Compares the lattice row a_h / sum(a) (h = 0..len-1) with N(mu n, sigma2 n).
///   ks  = sup_h |P(X <= h) - Phi((h + 1/2 - mu n) / sd)|
///   llt = sup_h |sd P(X = h) - phi((h - mu n) / sd)|,   sd = sqrt(sigma2 n)
/// Rows may contain negative entries; the total must be nonzero.
inline DistanceReport distance_to_gaussian(std::span<const BigInt> row, int n, const Real& mu,
                                           const Real& sigma2) {
  namespace mp = boost::multiprecision;
  if (row.empty()) throw std::invalid_argument("distance_to_gaussian: empty row");
  if (sigma2 <= 0) throw std::invalid_argument("distance_to_gaussian: sigma2 must be positive");
  BigInt total = 0;
  BigInt first = 0;
  BigInt second = 0;
  for (std::size_t h = 0; h < row.size(); ++h) {
    total += row[h];
    first += row[h] * h;
    second += row[h] * h * h;
  }
  if (total == 0) throw std::invalid_argument("distance_to_gaussian: row sums to zero");

  DistanceReport r;
  r.n = n;
  const Rational mean(first, total);
  r.mean = to_real(mean);
  r.variance = to_real(Rational(second, total) - mean * mean);

  const Real center = mu * n;
  const Real sd = mp::sqrt(sigma2 * n);
  const Real total_real = to_real(total);
  r.ks_distance = 0;
  r.llt_distance = 0;
  BigInt cumulative = 0;
  for (std::size_t h = 0; h < row.size(); ++h) {
    cumulative += row[h];
    const Real x = Real(static_cast<long>(h));
    const Real ks = mp::abs(to_real(cumulative) / total_real - normal_cdf((x + Real(0.5) - center) / sd));
    const Real llt = mp::abs(sd * to_real(row[h]) / total_real - normal_pdf((x - center) / sd));
    if (ks > r.ks_distance) {
      r.ks_distance = ks;
      r.ks_argmax = static_cast<int>(h);
    }
    if (llt > r.llt_distance) {
      r.llt_distance = llt;
      r.llt_argmax = static_cast<int>(h);
    }
  }
  if (cumulative != total) throw std::logic_error("cumulative mass does not reach the total");
  return r;
}

/// Exact structure distribution against the asymptotic mu n, sigma^2 n.
inline DistanceReport distance_report(const CountTable& table) {
  const LimitConstants c = limit_constants(table.k);
  DistanceReport r = distance_to_gaussian(table.by_arcs, table.n, c.mu, c.sigma2);
  r.k = table.k;
  return r;
}

inline DistanceReport distance_report(int n, int k) {
  if (n < 2) throw std::invalid_argument("distance report needs n >= 2");
  detail::rho_family(k);
  return distance_report(count_table(k, n));
}

inline Real ks_distance(int n, int k) { return distance_report(n, k).ks_distance; }
inline Real llt_distance(int n, int k) { return distance_report(n, k).llt_distance; }

inline std::vector<BigInt> binomial_row(int n) {
  if (n < 0) throw std::invalid_argument("binomial_row: negative n");
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int h = 1; h <= n; ++h) row[h] = row[h - 1] * (n - h + 1) / h;
  return row;
}

/// a_{n,h} = C(n,h) + (-1)^h 2 C(n,h): sums to 2^n, alternates between
/// 3 C(n,h) and -C(n,h).
inline std::vector<BigInt> pathological_row(int n) {
  if (n < 1) throw std::invalid_argument("pathological_row needs n >= 1");
  std::vector<BigInt> row = binomial_row(n);
  for (int h = 0; h <= n; ++h) row[h] *= (h % 2 == 0) ? 3 : -1;
  return row;
}

// The alternating part contributes nothing to the first two moments for
// n >= 3, so the row is centred at n/2 with variance n/4.
inline constexpr double kPathologicalMu = 0.5;
inline constexpr double kPathologicalSigma2 = 0.25;

}  // namespace rnaknot
