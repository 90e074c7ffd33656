#pragma once

// Brute-force enumeration of diagrams on {1..n}. Exponential; this is the
// ground truth the closed forms and recursions are checked against, so it
// stays as literal as possible.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rnaknot {

struct Arc {
  int left;
  int right;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Diagram {
  int n = 0;
  std::vector<Arc> arcs;  // sorted by left endpoint

  std::size_t arc_count() const { return arcs.size(); }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

enum class OracleMode {
  structures,  // partial matchings, no arcs (i, i+1)
  matchings,   // perfect matchings, arcs (i, i+1) allowed
};

inline constexpr int kDefaultOracleCap = 14;

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest c such that some arcs (i_1,j_1),...,(i_c,j_c) satisfy
/// i_1 < ... < i_c < j_1 < ... < j_c. Checks every subset.
inline int crossing_number(const Diagram& d) {
  const std::size_t a = d.arcs.size();
  if (a > 20) throw std::invalid_argument("crossing_number: too many arcs for subset search");
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << a); ++mask) {
    int size = 0;
    bool pairwise = true;
    for (std::size_t x = 0; x < a && pairwise; ++x) {
      if (!(mask & (1u << x))) continue;
      ++size;
      for (std::size_t y = x + 1; y < a; ++y) {
        if (!(mask & (1u << y))) continue;
        const Arc& p = d.arcs[x];
        const Arc& q = d.arcs[y];
        const bool cross = (p.left < q.left && q.left < p.right && p.right < q.right) ||
                           (q.left < p.left && p.left < q.right && q.right < p.right);
        if (!cross) {
          pairwise = false;
          break;
        }
      }
    }
    if (pairwise && size > best) best = size;
  }
  return best;
}

/// Degree <= 1, endpoints in range and ordered, and (in structure mode) no 1-arcs.
inline bool is_valid(const Diagram& d, OracleMode mode = OracleMode::structures) {
  std::vector<int> degree(static_cast<std::size_t>(d.n) + 1, 0);
  for (const Arc& arc : d.arcs) {
    if (arc.left < 1 || arc.right > d.n || arc.left >= arc.right) return false;
    if (mode == OracleMode::structures && arc.right - arc.left < 2) return false;
    if (++degree[arc.left] > 1 || ++degree[arc.right] > 1) return false;
  }
  if (mode == OracleMode::matchings)
    for (int v = 1; v <= d.n; ++v)
      if (degree[v] != 1) return false;
  return true;
}

namespace detail {

struct Enumerator {
  int n;
  int k;
  OracleMode mode;
  std::vector<bool> used;
  Diagram current;
  std::vector<Diagram>* out;

  void visit(int v) {
    while (v <= n && used[v]) ++v;
    if (v > n) {
      out->push_back(current);
      return;
    }
    if (mode == OracleMode::structures) visit(v + 1);  // v stays isolated
    const int min_gap = mode == OracleMode::structures ? 2 : 1;
    for (int w = v + min_gap; w <= n; ++w) {
      if (used[w]) continue;
      current.arcs.push_back({v, w});
      if (crossing_number(current) < k) {
        used[v] = used[w] = true;
        visit(v + 1);
        used[v] = used[w] = false;
      }
      current.arcs.pop_back();
    }
  }
};

}  // namespace detail

/// Every k-noncrossing diagram on n points of the requested kind, each once.
/// Order is lexicographic in the choice sequence made left to right: for the
/// leftmost undecided point, "isolated" first, then partners in increasing order.
inline std::vector<Diagram> enumerate_structures(int n, int k,
                                                 OracleMode mode = OracleMode::structures,
                                                 int cap = kDefaultOracleCap) {
  if (k < 2) throw std::invalid_argument("crossing bound k must be >= 2");
  if (n < 0) throw std::invalid_argument("enumerate_structures: negative n");
  if (n > cap)
    throw OracleCapExceeded("oracle refuses n=" + std::to_string(n) + " (cap " +
                            std::to_string(cap) + ")");
  std::vector<Diagram> out;
  detail::Enumerator e{n, k, mode, std::vector<bool>(static_cast<std::size_t>(n) + 2, false),
                       Diagram{n, {}}, &out};
  e.visit(1);
  return out;
}

inline std::map<int, long long> histogram_by_arcs(int n, int k,
                                                  OracleMode mode = OracleMode::structures,
                                                  int cap = kDefaultOracleCap) {
  std::map<int, long long> hist;
  for (const Diagram& d : enumerate_structures(n, k, mode, cap))
    ++hist[static_cast<int>(d.arc_count())];
  return hist;
}

}  // namespace rnaknot
