#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearbrace/parameters.hpp"

namespace nearbrace {

/// A candidate set-theoretic solution r(x, y) = (sigma_x(y), tau_y(x)),
/// stored as sigma(x, y) = sigma_x(y) and tau(y, x) = tau_y(x).
struct BraidMap {
  SquareTable sigma;
  SquareTable tau;
  std::optional<ParamTriple> params;
  /// Multiplication table of the near brace the map was built from, if any.
  std::optional<SquareTable> mul;

  [[nodiscard]] std::size_t order() const noexcept { return sigma.order(); }
  [[nodiscard]] std::pair<ElementId, ElementId> apply(ElementId x, ElementId y) const noexcept {
    return {sigma(x, y), tau(y, x)};
  }

  friend bool operator==(const BraidMap&, const BraidMap&) = default;
};

/// tau_y(x) = sigma_x(y)^-1 . x . y over the group g.
SquareTable tau_from_sigma(const SquareTable& sigma, const GroupTable& g);

struct Check {
  bool holds = true;
  std::vector<ElementId> witness;
};

struct SolutionReport {
  Check c1, c2, c3;
  Check composed;  // the braid equation evaluated on composed maps
  bool braid_ok = false;
  Check nondegenerate;  // witness {0, x} for sigma_x, {1, y} for tau_y
  Check involutive;
  std::optional<bool> multiplicative;  // filled when a group is supplied
  std::optional<bool> p_braiding;      // filled by the caller from check_p_braiding
};

/// Thrown when the constraint decomposition and the composed braid check
/// disagree, which can only mean an implementation error.
class InternalDisagreement : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

SolutionReport analyze_solution(const BraidMap& m, kernels::Exec exec = kernels::default_exec());
SolutionReport analyze_solution(const BraidMap& m, const GroupTable& g, kernels::Exec exec = kernels::default_exec());

/// sigma_a(b) = a.b.z1 - a.xi + z2, tau_b(a) = sigma_a(b)^-1.a.b.
/// Throws PreconditionError when p is not admissible for nb.
BraidMap build_solution(const NearBrace& nb, const ParamTriple& p);

/// sigma^_x(y) = hz2 - x.hxi + x.y.hz1 with hxi = xi^-1, hz_i = z_i.xi^-1,
/// tau^_y(x) = sigma^_x(y)^-1.x.y.
BraidMap build_inverse(const NearBrace& nb, const ParamTriple& p);

struct MultiplicativityCheck {
  bool ok = true;
  std::vector<ElementId> witness;
};

/// sigma_a(b) . tau_b(a) = a.b for all pairs.
MultiplicativityCheck check_multiplicativity(const BraidMap& m, const GroupTable& g);

struct InversePairCheck {
  bool ok = true;
  int identity = 0;  // 1..4, the first failing identity
  std::vector<ElementId> witness;
};

/// The four identities
///   s^_{s_x(y)}(t_y(x)) = x,  t^_{t_y(x)}(s_x(y)) = y,
///   s_{s^_x(y)}(t^_y(x)) = x,  t_{t^_y(x)}(s^_x(y)) = y.
InversePairCheck verify_inverse_pair(const BraidMap& m, const BraidMap& w);

/// r(y, x) = (sigma_x(y), tau_y(x)) checked against r12 r13 r23 = r23 r13 r12.
Check yang_baxter_form(const BraidMap& m);

/// sigma_a(b) = -a + a.b over a skew brace.
BraidMap gv_solution(const NearBrace& skew);

struct RumpReport {
  bool sigma_matches = false;  // build_solution(B, (1,1,1)).sigma == x.y - x
  bool braid_ok = false;
  bool nondegenerate = false;
  bool involutive = false;
};

/// Requires a brace (0 = 1, + abelian); throws PreconditionError otherwise.
RumpReport rump_check(const NearBrace& brace);

struct TwistResult {
  std::optional<std::vector<ElementId>> map;
  bool bijective = false;
  std::uint64_t nodes_visited = 0;  // search-tree nodes, pruned branches included
};

inline constexpr std::size_t kMaxTwistOrder = 5;

/// Searches maps f with some f(e) = 1 and
///   f(a.b - a.z + z) = f(a).f(b) - f(a).0.z + z   for all a, b.
/// Bijections are tried first (lexicographically), then all n^n maps.
/// Throws PreconditionError above order 5.
TwistResult twist_search(const NearBrace& nb, ElementId z);

}  // namespace nearbrace
