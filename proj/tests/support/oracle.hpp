#pragma once

// Test-side reference implementations. Deliberately naive and written
// without the library's kernels, so that they can cross-check them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "nearbrace/near_brace.hpp"
#include "nearbrace/sampling.hpp"
#include "nearbrace/solutions.hpp"

namespace oracle {

using nearbrace::ElementId;
using Rows = std::vector<std::vector<ElementId>>;

inline bool is_group(const Rows& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  std::size_t e = n;
  for (std::size_t x = 0; x < n && e == n; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n; ++y) ok = ok && t[x][y] == y && t[y][x] == y;
    if (ok) e = x;
  }
  if (e == n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    bool has = false;
    for (std::size_t y = 0; y < n; ++y) has = has || (t[x][y] == e && t[y][x] == e);
    if (!has) return false;
  }
  return true;
}

inline ElementId neutral(const Rows& t) {
  for (ElementId x = 0; x < t.size(); ++x)
    if (t[x][x] == x) return x;
  return 0;
}

inline ElementId inverse(const Rows& t, ElementId a) {
  const ElementId e = neutral(t);
  for (ElementId x = 0; x < t.size(); ++x)
    if (t[a][x] == e) return x;
  return 0;
}

/// a.(b+c) = a.b - a.0 + a.c over every triple.
inline bool is_near_brace(const Rows& add, const Rows& mul) {
  const std::size_t n = add.size();
  const ElementId zero = neutral(add);
  for (ElementId a = 0; a < n; ++a) {
    const ElementId a0 = mul[a][zero];
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c) {
        const ElementId lhs = mul[a][add[b][c]];
        const ElementId rhs = add[add[mul[a][b]][inverse(add, a0)]][mul[a][c]];
        if (lhs != rhs) return false;
      }
  }
  return true;
}

/// Every Latin square with a two-sided identity at some element, kept when
/// it is a group addition compatible with `mul`. Only for n <= 5.
inline std::size_t brute_force_near_brace_count(const Rows& mul, bool skew_only = false) {
  const std::size_t n = mul.size();
  const ElementId one = neutral(mul);
  std::size_t count = 0;
  for (ElementId e = 0; e < n; ++e) {
    if (skew_only && e != one) continue;
    Rows t(n, std::vector<ElementId>(n, 0));
    std::vector<std::uint32_t> row_used(n, 0), col_used(n, 0);
    for (ElementId x = 0; x < n; ++x) {
      t[e][x] = x;
      t[x][e] = x;
    }
    for (ElementId x = 0; x < n; ++x) {
      row_used[e] |= 1u << x;
      col_used[e] |= 1u << x;
      if (x != e) {
        row_used[x] |= 1u << x;
        col_used[x] |= 1u << x;
      }
    }
    std::function<void(std::size_t)> fill = [&](std::size_t cell) {
      if (cell == n * n) {
        if (is_group(t) && is_near_brace(t, mul)) ++count;
        return;
      }
      const std::size_t i = cell / n, j = cell % n;
      if (i == e || j == e) {
        fill(cell + 1);
        return;
      }
      for (ElementId v = 0; v < n; ++v) {
        const std::uint32_t bit = 1u << v;
        if ((row_used[i] & bit) || (col_used[j] & bit)) continue;
        row_used[i] |= bit;
        col_used[j] |= bit;
        t[i][j] = v;
        fill(cell + 1);
        row_used[i] &= ~bit;
        col_used[j] &= ~bit;
      }
    };
    fill(0);
  }
  return count;
}

/// Braid equation on composed maps, (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r),
/// evaluated directly from the sigma and tau tables.
inline bool braid_holds(const nearbrace::BraidMap& m) {
  const std::size_t n = m.order();
  auto r = [&](ElementId x, ElementId y) { return std::pair{m.sigma(x, y), m.tau(y, x)}; };
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId w = 0; w < n; ++w) {
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, w);
        auto [a3, b3] = r(a1, b2);
        auto [q1, w1] = r(y, w);
        auto [x2, q2] = r(x, q1);
        auto [q3, w3] = r(q2, w1);
        if (a3 != x2 || b3 != q3 || c2 != w3) return false;
      }
  return true;
}

inline std::vector<ElementId> random_permutation(nearbrace::SplitMix64& rng, std::size_t n) {
  std::vector<ElementId> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t k = n; k > 1; --k) std::swap(p[k - 1], p[rng.next() % k]);
  return p;
}

/// Relabel a table through the bijection p: t'(p a, p b) = p t(a, b).
inline nearbrace::SquareTable relabel(const nearbrace::SquareTable& t, const std::vector<ElementId>& p) {
  nearbrace::SquareTable out(t.order());
  for (ElementId a = 0; a < t.order(); ++a)
    for (ElementId b = 0; b < t.order(); ++b) out(p[a], p[b]) = p[t(a, b)];
  return out;
}

}  // namespace oracle
