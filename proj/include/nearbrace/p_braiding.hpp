#pragma once

#include "nearbrace/solutions.hpp"

namespace nearbrace {

/// Conditions for r to be a p-braiding operator on the group g:
///   (1) x.y = sigma_x(y).tau_y(x)
///   (2) (id x m) r12 r23 (x,y,w) = (f_{x.y}(w), f_{x.y}(w)^-1.x.y.w)
///   (3) (m x id) r23 r12 (x,y,w) = (g_x(y.w), g_x(y.w)^-1.x.y.w)
/// for bijections f_c, g_c, and sigma_x, tau_y bijective.
struct PBraidingReport {
  bool nondegenerate = false;
  bool multiplicative_ok = false;
  bool f_factors = false;  // first output of (2) depends only on (x.y, w)
  bool g_factors = false;  // first output of (3) depends only on (x, y.w)
  bool f_second_coordinate = false;
  bool g_second_coordinate = false;
  bool f_bijective = false;
  bool g_bijective = false;
  /// f_table(c, w) = f_c(w), g_table(x, d) = g_x(d); only meaningful when
  /// the corresponding factorisation holds.
  SquareTable f_table, g_table;
  /// Two triples sharing a key but disagreeing on the first output.
  std::vector<ElementId> f_witness, g_witness;
  std::vector<ElementId> multiplicative_witness;

  [[nodiscard]] bool verdict() const noexcept {
    return nondegenerate && multiplicative_ok && f_factors && g_factors && f_second_coordinate &&
           g_second_coordinate && f_bijective && g_bijective;
  }
};

PBraidingReport check_p_braiding(const BraidMap& m, const GroupTable& g);

struct ClosedFormFG {
  SquareTable f;  // f_a(b) = a.b.z1.z1 - a.xi.z1 + c1 + z2
  SquareTable g;  // g_a(b) = a.b.z1 + c2 - a.xi.z2 + z2.z2
};

/// Throws PreconditionError when p is not admissible.
ClosedFormFG closed_form_fg(const NearBrace& nb, const ParamTriple& p);

}  // namespace nearbrace
