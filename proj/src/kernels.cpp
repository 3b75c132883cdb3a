#include "nearbrace/kernels.hpp"

namespace nearbrace::kernels {

namespace {
std::atomic<Exec> g_default_exec{Exec::parallel};
}

Exec default_exec() noexcept { return g_default_exec.load(std::memory_order_relaxed); }
void set_default_exec(Exec exec) noexcept { g_default_exec.store(exec, std::memory_order_relaxed); }

std::optional<Triple> associativity_failure(const SquareTable& op, Exec exec) {
  return first_failing_triple(
      op.order(), [&](std::size_t a, std::size_t b, std::size_t c) { return op(op(a, b), c) == op(a, op(b, c)); },
      exec);
}

std::optional<Triple> distributivity_failure(const SquareTable& add, std::span<const ElementId> neg,
                                             ElementId zero, const SquareTable& mul, Exec exec) {
  return first_failing_triple(
      add.order(),
      [&](std::size_t a, std::size_t b, std::size_t c) {
        const ElementId lhs = mul(a, add(b, c));
        const ElementId rhs = add(add(mul(a, b), neg[mul(a, zero)]), mul(a, c));
        return lhs == rhs;
      },
      exec);
}

std::optional<Triple> braid_constraint_failure(const SquareTable& sigma, const SquareTable& tau,
                                               BraidConstraint which, Exec exec) {
  // s(x, y) = sigma_x(y), t(y, x) = tau_y(x); triple is (eta, x, y).
  auto s = [&](std::size_t x, std::size_t y) { return sigma(x, y); };
  auto t = [&](std::size_t y, std::size_t x) { return tau(y, x); };
  switch (which) {
    case BraidConstraint::c1:
      return first_failing_triple(
          sigma.order(),
          [&](std::size_t eta, std::size_t x, std::size_t y) {
            return s(eta, s(x, y)) == s(s(eta, x), s(t(x, eta), y));
          },
          exec);
    case BraidConstraint::c2:
      return first_failing_triple(
          sigma.order(),
          [&](std::size_t eta, std::size_t x, std::size_t y) {
            return t(y, t(x, eta)) == t(t(y, x), t(s(x, y), eta));
          },
          exec);
    case BraidConstraint::c3:
      return first_failing_triple(
          sigma.order(),
          [&](std::size_t eta, std::size_t x, std::size_t y) {
            return t(s(t(x, eta), y), s(eta, x)) == s(t(s(x, y), eta), t(y, x));
          },
          exec);
  }
  return std::nullopt;
}

std::optional<Triple> braid_composition_failure(const SquareTable& sigma, const SquareTable& tau, Exec exec) {
  auto r = [&](ElementId u, ElementId v) -> std::pair<ElementId, ElementId> { return {sigma(u, v), tau(v, u)}; };
  auto r12 = [&](Triple p) {
    auto [u, v] = r(p[0], p[1]);
    return Triple{u, v, p[2]};
  };
  auto r23 = [&](Triple p) {
    auto [u, v] = r(p[1], p[2]);
    return Triple{p[0], u, v};
  };
  return first_failing_triple(
      sigma.order(),
      [&](std::size_t a, std::size_t b, std::size_t c) {
        const Triple in{static_cast<ElementId>(a), static_cast<ElementId>(b), static_cast<ElementId>(c)};
        return r12(r23(r12(in))) == r23(r12(r23(in)));
      },
      exec);
}

}  // namespace nearbrace::kernels
