#pragma once

// Brute-force reference computations for the test suites. Nothing here
// calls into the library's algorithms; everything is enumerated or
// expanded directly.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace brute {

using Poly = std::vector<long long>;  // index = q-exponent

// Schoolbook product truncated at degree n.
inline Poly multiply(const Poly& a, const Poly& b, int n) {
  Poly out(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(n); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Every partition of n, weakly decreasing, no pruning.
inline void each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

inline bool gordon_ok(const std::vector<int>& b, int l, int t) {
  int ones = 0;
  for (int x : b) ones += (x == 1);
  if (ones > t - 1) return false;
  for (std::size_t j = 0; j + static_cast<std::size_t>(l - 1) < b.size(); ++j) {
    if (b[j] - b[j + static_cast<std::size_t>(l - 1)] < 2) return false;
  }
  return true;
}

inline bool congruence_ok(const std::vector<int>& b, int l, int t) {
  const int mod = 2 * l + 1;
  for (int x : b) {
    const int r = x % mod;
    if (r == 0 || r == t || r == mod - t) return false;
  }
  return true;
}

// Gordon partitions of n; charge < 0 means any number of parts.
inline std::uint64_t gordon_count(int l, int t, int n, int charge = -1) {
  std::uint64_t c = 0;
  each_partition(n, [&](const std::vector<int>& b) {
    if ((charge < 0 || static_cast<int>(b.size()) == charge) && gordon_ok(b, l, t)) ++c;
  });
  return c;
}

inline std::uint64_t congruence_count(int l, int t, int n) {
  std::uint64_t c = 0;
  each_partition(n, [&](const std::vector<int>& b) { c += congruence_ok(b, l, t); });
  return c;
}

inline std::uint64_t parts_at_most(int n, int max_part) {
  std::uint64_t c = 0;
  each_partition(n, [&](const std::vector<int>& b) { c += b.empty() || b.front() <= max_part; });
  return c;
}

// Rank over Q by ordinary Gaussian elimination with rational entries.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace brute
