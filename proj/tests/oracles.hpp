#pragma once

// Independent brute-force oracles used only by the tests. None of them reuse
// the library's cached structure or enumeration code paths.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "pruferlab/ring.hpp"
#include "pruferlab/snf.hpp"

namespace oracle {

using pruferlab::FiniteRing;
using pruferlab::Index;

/// Backtracking search for a ring isomorphism A -> B.
inline std::optional<std::vector<Index>> ring_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return std::nullopt;
  constexpr Index unset = ~Index{0};
  std::vector<Index> f(n, unset), inv(n, unset);
  f[a.zero()] = b.zero();
  inv[b.zero()] = a.zero();
  if (f[a.one()] != unset && f[a.one()] != b.one()) return std::nullopt;
  f[a.one()] = b.one();
  inv[b.one()] = a.one();

  auto consistent = [&](Index x) {
    for (Index y = 0; y < n; ++y) {
      if (f[y] == unset) continue;
      const Index s = a.add(x, y), p = a.mul(x, y);
      if (f[s] != unset && f[s] != b.add(f[x], f[y])) return false;
      if (f[p] != unset && f[p] != b.mul(f[x], f[y])) return false;
      const Index bs = b.add(f[x], f[y]), bp = b.mul(f[x], f[y]);
      if (inv[bs] != unset && inv[bs] != s) return false;
      if (inv[bp] != unset && inv[bp] != p) return false;
    }
    return true;
  };
  if (!consistent(a.one())) return std::nullopt;

  auto rec = [&](auto&& self, Index x) -> bool {
    while (x < n && f[x] != unset) ++x;
    if (x == n) return true;
    for (Index c = 0; c < n; ++c) {
      if (inv[c] != unset) continue;
      f[x] = c;
      inv[c] = x;
      if (consistent(x) && self(self, x + 1)) return true;
      f[x] = unset;
      inv[c] = unset;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return f;
}

/// Every subset of R that is an ideal, by scanning the full powerset. Order <= 16.
inline std::vector<std::uint64_t> powerset_ideals(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;  // contains zero (index 0)
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) {
      if (!(mask >> x & 1)) continue;
      for (Index y = 0; y < n && ok; ++y) {
        if ((mask >> y & 1) && !(mask >> r.add(x, y) & 1)) ok = false;
        if (!(mask >> r.mul(x, y) & 1)) ok = false;
      }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

/// Exact determinant by fraction-free Bareiss elimination (int64, small matrices).
inline std::int64_t bareiss_det(pruferlab::IntMatrix m) {
  const auto n = m.rows();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      m.row(k).swap(m.row(s));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// gcd of all k x k minors; the product d_1...d_k of the Smith form equals it.
inline std::int64_t determinantal_divisor(const pruferlab::IntMatrix& m, Eigen::Index k) {
  const auto rows = m.rows(), cols = m.cols();
  std::int64_t g = 0;
  std::vector<Eigen::Index> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
  auto choose_cols = [&](auto&& self, Eigen::Index start, Eigen::Index depth) -> void {
    if (depth == k) {
      pruferlab::IntMatrix sub(k, k);
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
      g = std::gcd(g, bareiss_det(sub));
      return;
    }
    for (Eigen::Index c = start; c < cols; ++c) {
      ci[depth] = c;
      self(self, c + 1, depth + 1);
    }
  };
  auto choose_rows = [&](auto&& self, Eigen::Index start, Eigen::Index depth) -> void {
    if (depth == k) {
      choose_cols(choose_cols, 0, 0);
      return;
    }
    for (Eigen::Index r = start; r < rows; ++r) {
      ri[depth] = r;
      self(self, r + 1, depth + 1);
    }
  };
  choose_rows(choose_rows, 0, 0);
  return g;
}

}  // namespace oracle
