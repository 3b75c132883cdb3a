#include "nearbrace/p_braiding.hpp"

namespace nearbrace {

namespace {
constexpr ElementId kUnset = ~ElementId{0};
}

PBraidingReport check_p_braiding(const BraidMap& m, const GroupTable& g) {
  const std::size_t n = m.order();
  if (g.order() != n) throw std::invalid_argument("group and map orders differ");
  auto s = [&](ElementId x, ElementId y) { return m.sigma(x, y); };
  auto t = [&](ElementId y, ElementId x) { return m.tau(y, x); };
  auto mul = [&](ElementId a, ElementId b) { return g.op(a, b); };

  PBraidingReport r;
  r.nondegenerate = m.sigma.all_rows_are_permutations() && m.tau.all_rows_are_permutations();

  const auto mc = check_multiplicativity(m, g);
  r.multiplicative_ok = mc.ok;
  r.multiplicative_witness = mc.witness;

  r.f_table = SquareTable(n, kUnset);
  r.g_table = SquareTable(n, kUnset);
  r.f_factors = r.g_factors = true;
  r.f_second_coordinate = r.g_second_coordinate = true;
  // Triple that first defined each table entry, for witnesses.
  std::vector<std::array<ElementId, 3>> f_src(n * n), g_src(n * n);

  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId w = 0; w < n; ++w) {
        const ElementId xyw = mul(mul(x, y), w);

        // (id x m) r12 r23
        const ElementId syw = s(y, w);
        const ElementId f_first = s(x, syw);
        const ElementId f_second = mul(t(syw, x), t(w, y));
        const ElementId c = mul(x, y);
        ElementId& fe = r.f_table(c, w);
        if (fe == kUnset) {
          fe = f_first;
          f_src[c * n + w] = {x, y, w};
        } else if (fe != f_first && r.f_factors) {
          r.f_factors = false;
          const auto& o = f_src[c * n + w];
          r.f_witness = {o[0], o[1], o[2], x, y, w};
        }
        if (f_second != mul(g.inverse(f_first), xyw)) r.f_second_coordinate = false;

        // (m x id) r23 r12
        const ElementId sxy = s(x, y), txy = t(y, x);
        const ElementId g_first = mul(sxy, s(txy, w));
        const ElementId g_second = t(w, txy);
        const ElementId d = mul(y, w);
        ElementId& ge = r.g_table(x, d);
        if (ge == kUnset) {
          ge = g_first;
          g_src[x * n + d] = {x, y, w};
        } else if (ge != g_first && r.g_factors) {
          r.g_factors = false;
          const auto& o = g_src[x * n + d];
          r.g_witness = {o[0], o[1], o[2], x, y, w};
        }
        if (g_second != mul(g.inverse(g_first), xyw)) r.g_second_coordinate = false;
      }

  r.f_bijective = r.f_factors && r.f_table.all_rows_are_permutations();
  r.g_bijective = r.g_factors && r.g_table.all_rows_are_permutations();
  return r;
}

ClosedFormFG closed_form_fg(const NearBrace& nb, const ParamTriple& p) {
  const auto full = make_params(nb, p.z1, p.z2, p.xi);
  if (!full) throw PreconditionError("parameters are not admissible for this near brace");
  const std::size_t n = nb.order();
  const ElementId z11 = nb.times(p.z1, p.z1), xz1 = nb.times(p.xi, p.z1), xz2 = nb.times(p.xi, p.z2),
                  z22 = nb.times(p.z2, p.z2);
  ClosedFormFG out{SquareTable(n), SquareTable(n)};
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab = nb.times(a, b);
      out.f(a, b) = nb.plus(nb.plus(nb.minus(nb.times(ab, z11), nb.times(a, xz1)), full->c1), p.z2);
      out.g(a, b) = nb.plus(nb.minus(nb.plus(nb.times(ab, p.z1), full->c2), nb.times(a, xz2)), z22);
    }
  return out;
}

}  // namespace nearbrace
