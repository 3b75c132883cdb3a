#include "nearbrace/parameters.hpp"

namespace nearbrace {

bool is_right_distributive(const NearBrace& nb, ElementId h) {
  const std::size_t n = nb.order();
  return !kernels::first_failing_triple(
              n,
              [&](std::size_t a, std::size_t b, std::size_t c) {
                const auto ea = static_cast<ElementId>(a), eb = static_cast<ElementId>(b),
                           ec = static_cast<ElementId>(c);
                return nb.times(nb.heap(ea, eb, ec), h) == nb.heap(nb.times(ea, h), nb.times(eb, h), nb.times(ec, h));
              },
              kernels::Exec::serial)
              .has_value();
}

std::vector<ElementId> right_distributive_set(const NearBrace& nb) {
  const std::size_t n = nb.order();
  std::vector<char> flag(n, 0);
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (kernels::default_exec() == kernels::Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t h = 0; h < count; ++h) flag[h] = is_right_distributive(nb, static_cast<ElementId>(h));
  } else {
    for (std::ptrdiff_t h = 0; h < count; ++h) flag[h] = is_right_distributive(nb, static_cast<ElementId>(h));
  }
  std::vector<ElementId> out;
  for (ElementId h = 0; h < n; ++h)
    if (flag[h]) out.push_back(h);
  return out;
}

std::variant<Constants, NonConstant> constants_for(const NearBrace& nb, ElementId z1, ElementId z2, ElementId xi) {
  const std::size_t n = nb.order();
  if (z1 >= n || z2 >= n || xi >= n) throw PreconditionError("parameter out of range");
  const ElementId z21 = nb.times(z2, z1), z12 = nb.times(z1, z2);
  auto c1_at = [&](ElementId a) { return nb.minus(nb.times(a, z21), nb.times(a, xi)); };
  auto c2_at = [&](ElementId a) { return nb.plus(nb.neg(nb.times(a, xi)), nb.times(a, z12)); };

  const ElementId c1 = c1_at(0), c2 = c2_at(0);
  for (ElementId a = 1; a < n; ++a) {
    if (const ElementId v = c1_at(a); v != c1) return NonConstant{NonConstant::Which::c1, 0, a, c1, v};
    if (const ElementId v = c2_at(a); v != c2) return NonConstant{NonConstant::Which::c2, 0, a, c2, v};
  }
  return Constants{c1, c2};
}

bool is_admissible(const NearBrace& nb, ElementId z1, ElementId z2, ElementId xi) {
  return make_params(nb, z1, z2, xi).has_value();
}

std::optional<ParamTriple> make_params(const NearBrace& nb, ElementId z1, ElementId z2, ElementId xi) {
  const auto k = constants_for(nb, z1, z2, xi);
  const auto* c = std::get_if<Constants>(&k);
  if (!c) return std::nullopt;
  for (ElementId h : {z1, z2, xi})
    if (!is_right_distributive(nb, h)) return std::nullopt;
  return ParamTriple{z1, z2, xi, c->c1, c->c2};
}

std::vector<ParamTriple> admissible_params(const NearBrace& nb) {
  const auto rd = right_distributive_set(nb);
  std::vector<ParamTriple> out;
  for (ElementId z1 : rd)
    for (ElementId z2 : rd)
      for (ElementId xi : rd)
        if (const auto k = constants_for(nb, z1, z2, xi); const auto* c = std::get_if<Constants>(&k))
          out.push_back({z1, z2, xi, c->c1, c->c2});
  return out;
}

std::vector<ParamTriple> weak_only_params(const NearBrace& nb) {
  const auto rd = right_distributive_set(nb);
  std::vector<char> is_rd(nb.order(), 0);
  for (ElementId h : rd) is_rd[h] = 1;
  std::vector<ParamTriple> out;
  for (ElementId z1 : rd)
    for (ElementId z2 : rd)
      for (ElementId xi = 0; xi < nb.order(); ++xi) {
        if (is_rd[xi]) continue;
        if (const auto k = constants_for(nb, z1, z2, xi); const auto* c = std::get_if<Constants>(&k))
          out.push_back({z1, z2, xi, c->c1, c->c2});
      }
  return out;
}

InverseParams inverse_params(const NearBrace& nb, const ParamTriple& p) {
  const ElementId xinv = nb.inv(p.xi);
  return {nb.times(p.z1, xinv), nb.times(p.z2, xinv), xinv};
}

SquareTable sigma_table(const NearBrace& nb, ElementId z1, ElementId z2, ElementId xi) {
  const std::size_t n = nb.order();
  SquareTable s(n);
  for (ElementId a = 0; a < n; ++a) {
    const ElementId axi = nb.times(a, xi);
    for (ElementId b = 0; b < n; ++b) s(a, b) = nb.heap(nb.times(a, b, z1), axi, z2);
  }
  return s;
}

CoincidenceReport sigma_coincidence_check(const NearBrace& nb, const ParamTriple& t1, const ParamTriple& t2) {
  CoincidenceReport r;
  r.tables_equal = sigma_table(nb, t1.z1, t1.z2, t1.xi) == sigma_table(nb, t2.z1, t2.z2, t2.xi);

  const ElementId one = nb.one(), zero = nb.zero();
  auto single = [&](const ParamTriple& t) { return t.z1 == one && t.xi == nb.times(zero, t.z2); };
  if (single(t1) && single(t2)) {
    r.kind = CoincidenceReport::Kind::single_param;
    if (r.tables_equal) {
      const ElementId z = t1.z2, w = t2.z2;
      r.identity_holds = nb.minus(nb.times(nb.inv(z), w), one) == nb.minus(w, z);
    }
  } else if (t1.z1 == t2.z2 && t1.z2 == t2.z1 && t1.xi == t2.xi) {
    r.kind = CoincidenceReport::Kind::swapped_params;
    if (r.tables_equal)
      r.identity_holds = nb.times(zero, nb.inv(t1.z1), t1.z2) == nb.minus(t1.z2, t1.z1);
  }
  return r;
}

}  // namespace nearbrace
