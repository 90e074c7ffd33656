#pragma once

// Exact enumeration of k-noncrossing RNA structures.
//
// f_k(n, l)   k-noncrossing partial matchings on n points, l of them isolated
//             (arcs of length 1 allowed)
// S_k(n, l)   k-noncrossing structures (no arcs (i, i+1)) with l isolated points
// S'_k(n, h)  the same indexed by arc count, S'_k(n, h) = S_k(n, n - 2h)
// S_k(n)      all k-noncrossing structures on n points
//
// Structures are obtained from matchings by inclusion-exclusion over 1-arcs,
// so every quantity here is an arbitrary-precision integer.

#include "rnaknot/numeric.hpp"

#include <gmp.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnaknot {

inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Catalan numbers C_0..C_m via C_{j+1} = C_j * 2(2j+1) / (j+2).
inline std::vector<BigInt> catalan_numbers(int m) {
  if (m < 0) throw std::invalid_argument("catalan: negative index");
  std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
  c[0] = 1;
  for (int j = 0; j < m; ++j) c[j + 1] = c[j] * (2 * (2 * j + 1)) / (j + 2);
  return c;
}

inline BigInt catalan(int m) { return catalan_numbers(m).back(); }

namespace detail {

inline void check_k(int k) {
  if (k < 2) throw std::invalid_argument("crossing bound k must be >= 2, got " + std::to_string(k));
}

inline void check_n_ell(int n, int ell) {
  if (n < 0 || ell < 0 || ell > n)
    throw std::invalid_argument("need 0 <= ell <= n, got n=" + std::to_string(n) +
                                " ell=" + std::to_string(ell));
}

// f_k(2m, 0) for k = 2, 3 from Catalan numbers; c must hold C_0..C_{m+2}.
inline BigInt perfect_closed(int k, int m, const std::vector<BigInt>& c) {
  if (k == 2) return c[m];
  return c[m + 2] * c[m] - c[m + 1] * c[m + 1];
}

}  // namespace detail

/// k-noncrossing perfect matchings f_k(2m, 0) for m = 0..max_m, counted as
/// closed walks of length 2m on Young diagrams with at most k-1 rows where
/// each step adds or removes one box. Shifting row lengths by (k-1, ..., 1)
/// turns these into lattice walks in the Weyl chamber x_1 > ... > x_{k-1} > 0.
inline std::vector<BigInt> perfect_matchings_weyl(int k, int max_m) {
  detail::check_k(k);
  if (max_m < 0) throw std::invalid_argument("perfect_matchings_weyl: negative length");
  const int rows = k - 1;
  const int len = 2 * max_m;
  using Shape = std::vector<int>;
  std::map<Shape, BigInt> layer{{Shape(rows, 0), BigInt(1)}};
  std::vector<BigInt> out(static_cast<std::size_t>(max_m) + 1);
  out[0] = 1;
  for (int t = 1; t <= len; ++t) {
    std::map<Shape, BigInt> next;
    // A shape of size > len - t can no longer return to the empty shape.
    const int budget = len - t;
    for (const auto& [shape, count] : layer) {
      int size = 0;
      for (int v : shape) size += v;
      for (int i = 0; i < rows; ++i) {
        if (size + 1 <= budget && (i == 0 || shape[i - 1] > shape[i])) {
          Shape s = shape;
          ++s[i];
          next[s] += count;
        }
        if (size - 1 <= budget && shape[i] > 0 && (i + 1 == rows || shape[i + 1] < shape[i])) {
          Shape s = shape;
          --s[i];
          next[s] += count;
        }
      }
    }
    layer = std::move(next);
    if (t % 2 == 0) {
      auto it = layer.find(Shape(rows, 0));
      out[t / 2] = it == layer.end() ? BigInt(0) : it->second;
    }
  }
  return out;
}

/// f_k(n, l) for k = 2, 3 from the Catalan closed forms.
inline BigInt f_closed(int k, int n, int ell) {
  if (k != 2 && k != 3)
    throw std::invalid_argument("f_closed only covers k = 2, 3; use f_general");
  detail::check_n_ell(n, ell);
  if ((n - ell) % 2 != 0) return 0;
  const int m = (n - ell) / 2;
  return binomial(n, ell) * detail::perfect_closed(k, m, catalan_numbers(m + 2));
}

/// f_k(n, l) for any k >= 2 through the Weyl-chamber walk count.
inline BigInt f_general(int k, int n, int ell) {
  detail::check_k(k);
  detail::check_n_ell(n, ell);
  if ((n - ell) % 2 != 0) return 0;
  const int m = (n - ell) / 2;
  return binomial(n, ell) * perfect_matchings_weyl(k, m)[m];
}

struct CountTable {
  int k = 2;
  int n = 0;
  std::vector<BigInt> by_arcs;  // index h = 0..n/2
  BigInt total;

  // S_k(n, l); zero when n - l is odd.
  BigInt isolated(int ell) const {
    if (ell < 0 || ell > n || (n - ell) % 2 != 0) return 0;
    return by_arcs[static_cast<std::size_t>((n - ell) / 2)];
  }
};

/// Caches f_k(2m, 0) for one crossing bound so that sweeps over n reuse the
/// matching counts. k = 2, 3 use the Catalan closed forms, larger k the walk
/// count. Not thread-safe; the free functions below build a private instance.
class StructureCounter {
 public:
  explicit StructureCounter(int k) : k_(k) { detail::check_k(k); }

  int k() const { return k_; }

  const BigInt& perfect(int m) {
    if (m < 0) throw std::invalid_argument("perfect: negative half-length");
    if (static_cast<std::size_t>(m) >= perfect_.size()) grow(m);
    return perfect_[m];
  }

  BigInt matchings(int n, int ell) {
    detail::check_n_ell(n, ell);
    if ((n - ell) % 2 != 0) return 0;
    return binomial(n, ell) * perfect((n - ell) / 2);
  }

  // Inclusion-exclusion over b marked 1-arcs:
  //   S_k(n, l) = sum_b (-1)^b C(n-b, b) f_k(n-2b, l).
  BigInt structures_with_isolated(int n, int ell) {
    detail::check_n_ell(n, ell);
    if ((n - ell) % 2 != 0) return 0;
    BigInt sum = 0;
    for (int b = 0; b <= (n - ell) / 2; ++b) {
      BigInt term = binomial(n - b, b) * matchings(n - 2 * b, ell);
      if (b % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    if (sum < 0)
      throw std::logic_error("negative inclusion-exclusion residue at n=" + std::to_string(n) +
                             " ell=" + std::to_string(ell));
    return sum;
  }

  // S_k(n) = sum_b (-1)^b C(n-b, b) sum_l f_k(n-2b, l), without going through
  // the per-l structure counts.
  BigInt total_by_double_sum(int n) {
    if (n < 0) throw std::invalid_argument("total_by_double_sum: negative n");
    BigInt sum = 0;
    for (int b = 0; b <= n / 2; ++b) {
      const int m = n - 2 * b;
      BigInt all_matchings = 0;
      for (int ell = m % 2; ell <= m; ell += 2) all_matchings += matchings(m, ell);
      BigInt term = binomial(n - b, b) * all_matchings;
      if (b % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    return sum;
  }

  CountTable table(int n) {
    if (n < 0) throw std::invalid_argument("count_table: negative n");
    CountTable t;
    t.k = k_;
    t.n = n;
    t.by_arcs.reserve(static_cast<std::size_t>(n / 2) + 1);
    BigInt row_sum = 0;
    for (int h = 0; h <= n / 2; ++h) {
      t.by_arcs.push_back(structures_with_isolated(n, n - 2 * h));
      row_sum += t.by_arcs.back();
    }
    t.total = total_by_double_sum(n);
    if (t.total != row_sum)
      throw std::logic_error("row sum disagrees with double-sum total at k=" +
                             std::to_string(k_) + " n=" + std::to_string(n));
    return t;
  }

 private:
  void grow(int m) {
    if (k_ <= 3) {
      const auto c = catalan_numbers(m + 2);
      for (int j = static_cast<int>(perfect_.size()); j <= m; ++j)
        perfect_.push_back(detail::perfect_closed(k_, j, c));
    } else {
      // The walk count is a single pass for every length up to m; overshoot
      // so that incremental requests do not redo it each time.
      const int target = std::max(m, 2 * static_cast<int>(perfect_.size()));
      perfect_ = perfect_matchings_weyl(k_, target);
    }
  }

  int k_;
  std::vector<BigInt> perfect_;
};

inline BigInt s_count_iso(int k, int n, int ell) {
  return StructureCounter(k).structures_with_isolated(n, ell);
}

inline CountTable count_table(int k, int n) { return StructureCounter(k).table(n); }

}  // namespace rnaknot
