#include "nearbrace/near_brace.hpp"

namespace nearbrace {

namespace {

bool compute_singular(const NearBrace& nb) {
  for (ElementId a = 0; a < nb.order(); ++a) {
    const ElementId a0 = nb.times(a, nb.zero());
    if (nb.minus(a, a0) != nb.one() || nb.plus(nb.neg(a0), a) != nb.one()) return false;
  }
  return true;
}

GroupTable group_or_throw(SquareTable t, const std::vector<std::string>& labels, std::string_view what) {
  try {
    return GroupTable::from_table(std::move(t), labels);
  } catch (const InvalidStructure& e) {
    Diagnostics d;
    d.merge(e.diagnostics(), "group:");
    throw InvalidStructure(std::string(what) + " is not a group: " + e.diagnostics().summary(), std::move(d));
  }
}

}  // namespace

NearBrace::NearBrace(GroupTable add, GroupTable mul) : add_(std::move(add)), mul_(std::move(mul)) {
  singular_ = compute_singular(*this);
}

Diagnostics validate_near_brace(const GroupTable& add, const GroupTable& mul) {
  if (add.order() != mul.order())
    throw std::invalid_argument("carrier sizes differ: " + std::to_string(add.order()) + " vs " +
                                std::to_string(mul.order()));
  Diagnostics d;
  if (auto w = kernels::distributivity_failure(add.table(), add.inverses(), add.identity(), mul.table(),
                                               kernels::default_exec()))
    d.add("distributivity", {(*w)[0], (*w)[1], (*w)[2]}, "a.(b+c) != a.b - a.0 + a.c");
  return d;
}

Diagnostics validate_near_brace(const SquareTable& add, const SquareTable& mul) {
  if (add.order() != mul.order())
    throw std::invalid_argument("carrier sizes differ: " + std::to_string(add.order()) + " vs " +
                                std::to_string(mul.order()));
  Diagnostics d;
  Diagnostics da = validate_group(add), dm = validate_group(mul);
  d.merge(da, "add:");
  d.merge(dm, "mul:");
  if (!d.ok()) return d;
  return validate_near_brace(GroupTable::from_table(add), GroupTable::from_table(mul));
}

NearBrace NearBrace::from_groups(GroupTable add, GroupTable mul) {
  Diagnostics d = validate_near_brace(add, mul);
  if (!d.ok()) throw InvalidStructure("not a near brace: " + d.summary(), Diagnostics(d));
  if (add.labels() != mul.labels()) add = GroupTable::from_table(add.table(), mul.labels());
  return NearBrace(std::move(add), std::move(mul));
}

NearBrace trivial_near_brace(const GroupTable& g, ElementId kappa) {
  if (kappa >= g.order()) throw PreconditionError("kappa out of range");
  if (!g.is_central(kappa)) throw PreconditionError("kappa = " + g.label(kappa) + " is not central");
  const std::size_t n = g.order();
  const ElementId kinv = g.inverse(kappa);
  SquareTable add(n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) add(a, b) = g.op(g.op(a, kinv), b);
  return NearBrace::from_groups(GroupTable::from_table(std::move(add), g.labels()), g);
}

NearBrace addition_from_sigma(const GroupTable& g, const SigmaFamily& fam) {
  const std::size_t n = g.order();
  if (fam.sigma.order() != n) throw PreconditionError("sigma family size does not match the group");
  if (fam.z >= n) throw PreconditionError("z out of range");
  for (std::size_t x = 0; x < n; ++x)
    if (!fam.sigma.row_is_permutation(x))
      throw PreconditionError("sigma_" + std::to_string(x) + " is not a bijection");

  const ElementId z = fam.z, zinv = g.inverse(z);
  // y + x := x . sigma_{x^-1}(y . z) . z^-1
  SquareTable add(n);
  for (ElementId y = 0; y < n; ++y)
    for (ElementId x = 0; x < n; ++x) add(y, x) = g.op(g.op(x, fam.sigma(g.inverse(x), g.op(y, z))), zinv);

  if (auto w = kernels::associativity_failure(add, kernels::default_exec())) {
    Diagnostics d;
    d.add("associativity", {(*w)[0], (*w)[1], (*w)[2]});
    throw InvalidStructure("addition not associative: " + d.summary(), Diagnostics(d));
  }

  // 0_x = sigma_{x^-1}^-1(z) . z^-1 must not depend on x.
  std::optional<ElementId> zero;
  ElementId first_x = 0;
  for (ElementId x = 0; x < n; ++x) {
    const auto row = fam.sigma.row(g.inverse(x));
    ElementId pre = 0;
    for (ElementId v = 0; v < n; ++v)
      if (row[v] == z) pre = v;
    const ElementId zx = g.op(pre, zinv);
    if (!zero) {
      zero = zx;
      first_x = x;
    } else if (*zero != zx) {
      Diagnostics d;
      d.add("neutral", {first_x, x}, "left neutral element depends on x");
      throw InvalidStructure("neutral element not unique: " + d.summary(), Diagnostics(d));
    }
  }

  GroupTable add_group = group_or_throw(std::move(add), g.labels(), "addition");
  Diagnostics d = validate_near_brace(add_group, g);
  if (!d.ok()) throw InvalidStructure("addition not distributive: " + d.summary(), Diagnostics(d));
  return NearBrace::from_groups(std::move(add_group), g);
}

SigmaFamily sigma_family_of(const NearBrace& nb, ElementId z) {
  const std::size_t n = nb.order();
  SigmaFamily fam{SquareTable(n), z};
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      fam.sigma(x, y) = nb.heap(nb.times(x, y), nb.times(x, nb.zero(), z), z);
  return fam;
}

NearBrace shift_to_skew(const NearBrace& nb) {
  const std::size_t n = nb.order();
  SquareTable add(n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) add(a, b) = nb.heap(a, nb.one(), b);
  return NearBrace::from_groups(GroupTable::from_table(std::move(add), nb.labels()), nb.mul_group());
}

NearBrace shift_by(const NearBrace& skew, ElementId t) {
  if (!skew.is_skew()) throw PreconditionError("shift_by expects a skew brace (0 = 1)");
  if (t >= skew.order()) throw PreconditionError("shift element out of range");
  const std::size_t n = skew.order();
  SquareTable add(n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) add(a, b) = skew.heap(a, t, b);
  return NearBrace::from_groups(GroupTable::from_table(std::move(add), skew.labels()), skew.mul_group());
}

// ---------------------------------------------------------------------------

bool StructuralReport::consistent() const noexcept {
  if (!distributivity.holds || !negation_identity.holds || !ternary_distributivity.holds) return false;
  if (singular.holds)
    return zero_mul_zero_is_neg_one.holds && one_plus_one_is_zero_inverse.holds && one_central_in_add.holds;
  return true;
}

StructuralReport structural_report(const NearBrace& nb) {
  const std::size_t n = nb.order();
  const ElementId zero = nb.zero(), one = nb.one();
  StructuralReport r;

  auto fail = [](IdentityCheck& c, std::vector<ElementId> w) {
    if (c.holds) {
      c.holds = false;
      c.witness = std::move(w);
    }
  };

  r.is_skew = nb.is_skew();
  if (auto w = kernels::distributivity_failure(nb.add_group().table(), nb.add_group().inverses(), zero,
                                               nb.mul_group().table(), kernels::default_exec()))
    fail(r.distributivity, {(*w)[0], (*w)[1], (*w)[2]});

  for (ElementId a = 0; a < n; ++a) {
    const ElementId a0 = nb.times(a, zero);
    if (nb.minus(a, a0) != one || nb.plus(nb.neg(a0), a) != one) fail(r.singular, {a});
    if (nb.plus(a, one) != nb.plus(one, a)) fail(r.one_central_in_add, {a});
  }
  if (nb.times(zero, zero) != nb.neg(one)) fail(r.zero_mul_zero_is_neg_one, {zero});
  if (nb.plus(one, one) != nb.inv(zero)) fail(r.one_plus_one_is_zero_inverse, {one});

  for (ElementId a = 0; a < n; ++a) {
    const ElementId a0 = nb.times(a, zero);
    for (ElementId b = 0; b < n; ++b) {
      if (nb.times(a, nb.neg(b)) != nb.heap(a0, nb.times(a, b), a0)) fail(r.negation_identity, {a, b});
      for (ElementId c = 0; c < n; ++c) {
        const ElementId lhs_r = nb.times(nb.heap(a, b, c), zero);
        if (lhs_r != nb.heap(nb.times(a, zero), nb.times(b, zero), nb.times(c, zero)))
          fail(r.zero_right_distributive, {a, b, c});
        if (!r.ternary_distributivity.holds) continue;
        for (ElementId d = 0; d < n; ++d)
          if (nb.times(a, nb.heap(b, c, d)) != nb.heap(nb.times(a, b), nb.times(a, c), nb.times(a, d))) {
            fail(r.ternary_distributivity, {a, b, c, d});
            break;
          }
      }
    }
  }
  return r;
}

MorphismCheck check_morphism(std::span<const ElementId> f, const NearBrace& from, const NearBrace& to) {
  if (f.size() != from.order()) throw std::invalid_argument("map size does not match the source carrier");
  for (ElementId v : f)
    if (v >= to.order()) throw std::invalid_argument("map image outside the target carrier");
  const std::size_t n = from.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (f[from.plus(a, b)] != to.plus(f[a], f[b])) return {false, "add", {a, b}};
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (f[from.times(a, b)] != to.times(f[a], f[b])) return {false, "mul", {a, b}};
  return {};
}

}  // namespace nearbrace
