#pragma once

// Exhaustive verification loops over [0,n)^3. Every kernel exists twice:
// a plain serial loop kept as the reference, and an OpenMP version that
// must return exactly the same witness (the lexicographically first failure).

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "nearbrace/table.hpp"

namespace nearbrace::kernels {

using Triple = std::array<ElementId, 3>;

enum class Exec { serial, parallel };

/// Process-wide default used by the library's checks. Starts as parallel.
Exec default_exec() noexcept;
void set_default_exec(Exec exec) noexcept;

template <class Pred>
std::optional<Triple> first_failing_triple_serial(std::size_t n, const Pred& holds) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!holds(a, b, c))
          return Triple{static_cast<ElementId>(a), static_cast<ElementId>(b), static_cast<ElementId>(c)};
  return std::nullopt;
}

template <class Pred>
std::optional<Triple> first_failing_triple_omp(std::size_t n, const Pred& holds) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  // Lowest outer index known to fail; iterations above it can be skipped.
  std::atomic<std::size_t> best_a{none};
  std::vector<std::size_t> first_bc(n, none);

  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t ia = 0; ia < count; ++ia) {
    const auto a = static_cast<std::size_t>(ia);
    if (a > best_a.load(std::memory_order_relaxed)) continue;
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!holds(a, b, c)) {
          first_bc[a] = b * n + c;
          found = true;
          break;
        }
    if (found) {
      std::size_t cur = best_a.load(std::memory_order_relaxed);
      while (a < cur && !best_a.compare_exchange_weak(cur, a, std::memory_order_relaxed)) {
      }
    }
  }

  const std::size_t a = best_a.load();
  if (a == none) return std::nullopt;
  const std::size_t bc = first_bc[a];
  return Triple{static_cast<ElementId>(a), static_cast<ElementId>(bc / n), static_cast<ElementId>(bc % n)};
}

template <class Pred>
std::optional<Triple> first_failing_triple(std::size_t n, const Pred& holds, Exec exec) {
  return exec == Exec::parallel ? first_failing_triple_omp(n, holds)
                                : first_failing_triple_serial(n, holds);
}

// Concrete kernels shared by the library.

/// First (a,b,c) with (a.b).c != a.(b.c).
std::optional<Triple> associativity_failure(const SquareTable& op, Exec exec);

/// First (a,b,c) with a.(b+c) != a.b - a.0 + a.c, for an additive group
/// with neutral `zero` and negation table `neg`.
std::optional<Triple> distributivity_failure(const SquareTable& add, std::span<const ElementId> neg,
                                             ElementId zero, const SquareTable& mul, Exec exec);

/// Which of the three braid constraints a triple violates.
enum class BraidConstraint { c1, c2, c3 };

/// First (eta,x,y) violating the given braid constraint for sigma[x][y] = s_x(y),
/// tau[y][x] = t_y(x).
std::optional<Triple> braid_constraint_failure(const SquareTable& sigma, const SquareTable& tau,
                                               BraidConstraint which, Exec exec);

/// First triple on which (r x id)(id x r)(r x id) != (id x r)(r x id)(id x r),
/// evaluated by composing the maps on triples rather than through C1-C3.
std::optional<Triple> braid_composition_failure(const SquareTable& sigma, const SquareTable& tau, Exec exec);

}  // namespace nearbrace::kernels
