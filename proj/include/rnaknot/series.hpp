#pragma once

// Truncated power series in x with exact rational coefficients, and the
// arc-weighted structure generating function written two ways:
//
//   sum_n sum_h S'_k(n,h) w^{2h} x^n
//     = 1/(w^2x^2 - x + 1) * sum_n f_k(2n,0) (w x / (w^2x^2 - x + 1))^{2n}
//
// w is a fixed rational parameter, so only x is an indeterminate.

#include "rnaknot/exactcount.hpp"
#include "rnaknot/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rnaknot {

class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(check_order(order) + 1) {}

  TruncSeries(int order, std::vector<Rational> coeffs) : TruncSeries(order) {
    if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
    std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
  }

  static TruncSeries constant(int order, const Rational& c) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  static std::size_t check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return static_cast<std::size_t>(order);
  }

  std::vector<Rational> coeffs_;
};

namespace detail {
inline void check_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}
}  // namespace detail

inline TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
  detail::check_same_order(a, b);
  TruncSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  detail::check_same_order(a, b);
  const int n = a.order();
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline TruncSeries series_scale(const TruncSeries& a, const Rational& c) {
  TruncSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] * c;
  return r;
}

/// Multiplicative inverse; the constant term must be nonzero.
inline TruncSeries series_inv(const TruncSeries& a) {
  if (a[0] == 0) throw std::domain_error("series_inv: zero constant term");
  const int n = a.order();
  TruncSeries r(n);
  const Rational inv0 = 1 / a[0];
  r[0] = inv0;
  for (int i = 1; i <= n; ++i) {
    Rational acc = 0;
    for (int j = 1; j <= i; ++j) acc += a[j] * r[i - j];
    r[i] = -acc * inv0;
  }
  return r;
}

inline TruncSeries series_pow(const TruncSeries& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("series_pow: negative exponent");
  TruncSeries result = TruncSeries::constant(a.order(), 1);
  TruncSeries base = a;
  while (exponent > 0) {
    if (exponent & 1) result = series_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = series_mul(base, base);
  }
  return result;
}

/// Parses "p", "p/q" or a terminating decimal such as "1.5".
inline Rational parse_rational(const std::string& text) {
  try {
    const auto dot = text.find('.');
    if (dot != std::string::npos && text.find('/') == std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      BigInt den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rational(BigInt(digits), den);
    }
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

/// x^n coefficient: sum over h of S'_k(n,h) w^{2h}.
inline TruncSeries lhs_series(int k, const Rational& w, int order) {
  TruncSeries r(order);
  StructureCounter counter(k);
  const Rational w2 = w * w;
  for (int n = 0; n <= order; ++n) {
    Rational acc = 0;
    Rational weight = 1;
    for (int h = 0; h <= n / 2; ++h) {
      acc += Rational(counter.structures_with_isolated(n, n - 2 * h)) * weight;
      weight *= w2;
    }
    r[n] = acc;
  }
  return r;
}

/// The matching-side expression. (w x / (w^2x^2 - x + 1))^{2j} has valuation
/// 2j when w != 0, so j <= order/2 covers every retained coefficient.
inline TruncSeries rhs_series(int k, const Rational& w, int order) {
  StructureCounter counter(k);
  TruncSeries denom(order);
  denom[0] = 1;
  if (order >= 1) denom[1] = -1;
  if (order >= 2) denom[2] = w * w;
  const TruncSeries inv_denom = series_inv(denom);

  TruncSeries wx(order);
  if (order >= 1) wx[1] = w;
  const TruncSeries arg = series_mul(wx, inv_denom);
  const TruncSeries arg_sq = series_mul(arg, arg);

  TruncSeries sum(order);
  TruncSeries power = TruncSeries::constant(order, 1);
  for (int j = 0; j <= order / 2; ++j) {
    sum = series_add(sum, series_scale(power, Rational(counter.perfect(j))));
    power = series_mul(power, arg_sq);
  }
  return series_mul(inv_denom, sum);
}

struct IdentityCheck {
  bool holds = true;
  int order = 0;
  std::optional<int> first_mismatch;
  Rational lhs_at_mismatch;
  Rational rhs_at_mismatch;
};

inline IdentityCheck compare_series(const TruncSeries& lhs, const TruncSeries& rhs) {
  detail::check_same_order(lhs, rhs);
  IdentityCheck out;
  out.order = lhs.order();
  for (int n = 0; n <= lhs.order(); ++n) {
    if (lhs[n] != rhs[n]) {
      out.holds = false;
      out.first_mismatch = n;
      out.lhs_at_mismatch = lhs[n];
      out.rhs_at_mismatch = rhs[n];
      break;
    }
  }
  return out;
}

inline IdentityCheck verify_identity(int k, const Rational& w, int order) {
  return compare_series(lhs_series(k, w, order), rhs_series(k, w, order));
}

}  // namespace rnaknot
