#include "nearbrace/solutions.hpp"

#include <algorithm>

namespace nearbrace {

namespace {

Check from_triple(const std::optional<kernels::Triple>& w) {
  if (!w) return {};
  return {false, {(*w)[0], (*w)[1], (*w)[2]}};
}

void require_admissible(const NearBrace& nb, const ParamTriple& p) {
  const auto full = make_params(nb, p.z1, p.z2, p.xi);
  if (!full) throw PreconditionError("parameters (" + std::to_string(p.z1) + "," + std::to_string(p.z2) + "," +
                                     std::to_string(p.xi) + ") are not admissible for this near brace");
}

}  // namespace

SquareTable tau_from_sigma(const SquareTable& sigma, const GroupTable& g) {
  const std::size_t n = sigma.order();
  SquareTable tau(n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) tau(b, a) = g.op(g.op(g.inverse(sigma(a, b)), a), b);
  return tau;
}

SolutionReport analyze_solution(const BraidMap& m, kernels::Exec exec) {
  using kernels::BraidConstraint;
  const std::size_t n = m.order();
  if (m.tau.order() != n) throw std::invalid_argument("sigma and tau sizes differ");

  SolutionReport r;
  r.c1 = from_triple(kernels::braid_constraint_failure(m.sigma, m.tau, BraidConstraint::c1, exec));
  r.c2 = from_triple(kernels::braid_constraint_failure(m.sigma, m.tau, BraidConstraint::c2, exec));
  r.c3 = from_triple(kernels::braid_constraint_failure(m.sigma, m.tau, BraidConstraint::c3, exec));
  r.composed = from_triple(kernels::braid_composition_failure(m.sigma, m.tau, exec));
  r.braid_ok = r.c1.holds && r.c2.holds && r.c3.holds;
  if (r.braid_ok != r.composed.holds)
    throw InternalDisagreement("braid constraints and composed braid check disagree");

  for (ElementId x = 0; x < n && r.nondegenerate.holds; ++x)
    if (!m.sigma.row_is_permutation(x)) r.nondegenerate = {false, {0, x}};
  for (ElementId y = 0; y < n && r.nondegenerate.holds; ++y)
    if (!m.tau.row_is_permutation(y)) r.nondegenerate = {false, {1, y}};

  for (ElementId x = 0; x < n && r.involutive.holds; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const auto [u, v] = m.apply(x, y);
      if (m.apply(u, v) != std::pair{x, y}) {
        r.involutive = {false, {x, y}};
        break;
      }
    }
  return r;
}

SolutionReport analyze_solution(const BraidMap& m, const GroupTable& g, kernels::Exec exec) {
  SolutionReport r = analyze_solution(m, exec);
  r.multiplicative = check_multiplicativity(m, g).ok;
  return r;
}

BraidMap build_solution(const NearBrace& nb, const ParamTriple& p) {
  require_admissible(nb, p);
  const auto full = *make_params(nb, p.z1, p.z2, p.xi);
  BraidMap m;
  m.sigma = sigma_table(nb, p.z1, p.z2, p.xi);
  m.tau = tau_from_sigma(m.sigma, nb.mul_group());
  m.params = full;
  m.mul = nb.mul_group().table();
  return m;
}

BraidMap build_inverse(const NearBrace& nb, const ParamTriple& p) {
  require_admissible(nb, p);
  const InverseParams h = inverse_params(nb, p);
  const std::size_t n = nb.order();
  BraidMap m;
  m.sigma = SquareTable(n);
  for (ElementId x = 0; x < n; ++x) {
    const ElementId xh = nb.times(x, h.hxi);
    for (ElementId y = 0; y < n; ++y) m.sigma(x, y) = nb.heap(h.hz2, xh, nb.times(x, y, h.hz1));
  }
  m.tau = tau_from_sigma(m.sigma, nb.mul_group());
  m.params = *make_params(nb, p.z1, p.z2, p.xi);
  m.mul = nb.mul_group().table();
  return m;
}

MultiplicativityCheck check_multiplicativity(const BraidMap& m, const GroupTable& g) {
  if (g.order() != m.order()) throw std::invalid_argument("group and map orders differ");
  for (ElementId a = 0; a < m.order(); ++a)
    for (ElementId b = 0; b < m.order(); ++b)
      if (g.op(m.sigma(a, b), m.tau(b, a)) != g.op(a, b)) return {false, {a, b}};
  return {};
}

InversePairCheck verify_inverse_pair(const BraidMap& m, const BraidMap& w) {
  if (m.order() != w.order()) throw std::invalid_argument("map orders differ");
  const std::size_t n = m.order();
  for (int id = 1; id <= 4; ++id)
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y) {
        bool ok = true;
        switch (id) {
          case 1: ok = w.sigma(m.sigma(x, y), m.tau(y, x)) == x; break;
          case 2: ok = w.tau(m.tau(y, x), m.sigma(x, y)) == y; break;
          case 3: ok = m.sigma(w.sigma(x, y), w.tau(y, x)) == x; break;
          case 4: ok = m.tau(w.tau(y, x), w.sigma(x, y)) == y; break;
        }
        if (!ok) return {false, id, {x, y}};
      }
  return {};
}

Check yang_baxter_form(const BraidMap& m) {
  using T = kernels::Triple;
  // r(u, v) = (sigma_v(u), tau_u(v))
  auto r = [&](ElementId u, ElementId v) -> std::pair<ElementId, ElementId> { return {m.sigma(v, u), m.tau(u, v)}; };
  auto r12 = [&](T p) {
    auto [u, v] = r(p[0], p[1]);
    return T{u, v, p[2]};
  };
  auto r13 = [&](T p) {
    auto [u, w] = r(p[0], p[2]);
    return T{u, p[1], w};
  };
  auto r23 = [&](T p) {
    auto [v, w] = r(p[1], p[2]);
    return T{p[0], v, w};
  };
  return from_triple(kernels::first_failing_triple(
      m.order(),
      [&](std::size_t a, std::size_t b, std::size_t c) {
        const T t{static_cast<ElementId>(a), static_cast<ElementId>(b), static_cast<ElementId>(c)};
        return r12(r13(r23(t))) == r23(r13(r12(t)));
      },
      kernels::default_exec()));
}

BraidMap gv_solution(const NearBrace& skew) {
  if (!skew.is_skew()) throw PreconditionError("the GV solution needs a skew brace (0 = 1)");
  const std::size_t n = skew.order();
  BraidMap m;
  m.sigma = SquareTable(n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) m.sigma(a, b) = skew.plus(skew.neg(a), skew.times(a, b));
  m.tau = tau_from_sigma(m.sigma, skew.mul_group());
  m.mul = skew.mul_group().table();
  return m;
}

RumpReport rump_check(const NearBrace& brace) {
  if (!brace.is_skew() || !brace.is_abelian())
    throw PreconditionError("Rump's construction needs a brace (0 = 1 and abelian addition)");
  const ElementId one = brace.one();
  const BraidMap m = build_solution(brace, ParamTriple{one, one, one});
  RumpReport r;
  r.sigma_matches = true;
  for (ElementId x = 0; x < brace.order(); ++x)
    for (ElementId y = 0; y < brace.order(); ++y)
      if (m.sigma(x, y) != brace.minus(brace.times(x, y), x)) r.sigma_matches = false;
  const SolutionReport s = analyze_solution(m);
  r.braid_ok = s.braid_ok;
  r.nondegenerate = s.nondegenerate.holds;
  r.involutive = s.involutive.holds;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

class TwistSearch {
public:
  TwistSearch(const NearBrace& nb, ElementId z) : nb_(nb), n_(nb.order()), z_(z), buckets_(nb.order()) {
    const ElementId oz = nb.times(nb.zero(), z);
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = 0; b < n_; ++b) {
        const ElementId arg = nb.heap(nb.times(a, b), nb.times(a, z), z);
        buckets_[std::max({a, b, arg})].push_back({a, b, arg});
      }
    oz_ = oz;
  }

  std::optional<std::vector<ElementId>> run(bool injective_only) {
    injective_ = injective_only;
    f_.assign(n_, 0);
    found_.reset();
    dfs(0, 0);
    return found_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  struct Eq {
    ElementId a, b, arg;
  };

  bool consistent(std::size_t k) const {
    for (const Eq& e : buckets_[k]) {
      const ElementId fa = f_[e.a];
      const ElementId rhs = nb_.heap(nb_.times(fa, f_[e.b]), nb_.times(fa, oz_), z_);
      if (f_[e.arg] != rhs) return false;
    }
    return true;
  }

  void dfs(std::size_t k, std::uint64_t used) {
    if (found_) return;
    ++nodes_;
    if (k == n_) {
      if (std::find(f_.begin(), f_.end(), nb_.one()) != f_.end()) found_ = f_;
      return;
    }
    for (ElementId v = 0; v < n_ && !found_; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (injective_ && (used & bit)) continue;
      f_[k] = v;
      if (consistent(k)) dfs(k + 1, used | bit);
    }
  }

  const NearBrace& nb_;
  std::size_t n_;
  ElementId z_;
  ElementId oz_ = 0;
  std::vector<std::vector<Eq>> buckets_;
  std::vector<ElementId> f_;
  std::optional<std::vector<ElementId>> found_;
  bool injective_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

TwistResult twist_search(const NearBrace& nb, ElementId z) {
  if (nb.order() > kMaxTwistOrder)
    throw PreconditionError("twist search is exhaustive over n^n maps and limited to order <= 5");
  if (z >= nb.order()) throw PreconditionError("z out of range");
  TwistSearch search(nb, z);
  TwistResult r;
  if (auto f = search.run(true)) {
    r.map = std::move(f);
    r.bijective = true;
  } else {
    r.map = search.run(false);
  }
  r.nodes_visited = search.nodes();
  return r;
}

}  // namespace nearbrace
