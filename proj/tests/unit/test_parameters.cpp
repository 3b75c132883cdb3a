#include <doctest.h>

#include "nearbrace/enumerate.hpp"
#include "nearbrace/parameters.hpp"
#include "oracle.hpp"

using namespace nearbrace;

namespace {

bool rd_oracle(const NearBrace& nb, ElementId h) {
  const std::size_t n = nb.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c) {
        const ElementId lhs = nb.times(nb.plus(nb.plus(a, nb.neg(b)), c), h);
        const ElementId rhs = nb.plus(nb.plus(nb.times(a, h), nb.neg(nb.times(b, h))), nb.times(c, h));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST_SUITE("parameters") {

TEST_CASE("trivial near braces: every element is right distributive") {
  for (const char* spec : {"cyclic:4", "symmetric:3", "quaternion"}) {
    const GroupTable g = build_standard(spec);
    for (ElementId kappa : g.center()) {
      const NearBrace nb = trivial_near_brace(g, kappa);
      CHECK(right_distributive_set(nb).size() == g.order());
    }
  }
}

TEST_CASE("right distributive set agrees with a direct check and is closed under inverse") {
  for (const std::string& spec : standard_catalogue(6))
    for (const NearBrace& nb : enumerate_near_braces(build_standard(spec))) {
      const auto rd = right_distributive_set(nb);
      for (ElementId h = 0; h < nb.order(); ++h) {
        const bool in = std::binary_search(rd.begin(), rd.end(), h);
        CHECK(in == rd_oracle(nb, h));
        CHECK(in == is_right_distributive(nb, h));
        if (in) CHECK(is_right_distributive(nb, nb.inv(h)));
      }
      if (nb.is_skew()) CHECK(std::binary_search(rd.begin(), rd.end(), nb.one()));
    }
}

TEST_CASE("constants for z1 = z2 = xi = 1 are (0, 0)") {
  for (const std::string& spec : standard_catalogue(6))
    for (const NearBrace& nb : enumerate_near_braces(build_standard(spec))) {
      const auto c = constants_for(nb, nb.one(), nb.one(), nb.one());
      REQUIRE(std::holds_alternative<Constants>(c));
      CHECK(std::get<Constants>(c).c1 == nb.zero());
      CHECK(std::get<Constants>(c).c2 == nb.zero());
    }
}

TEST_CASE("trivial near brace on cyclic(4): c1 = z2.z1.xi^-1.kappa") {
  const NearBrace nb = trivial_near_brace(cyclic(4), 2);
  const GroupTable& g = nb.mul_group();
  for (ElementId z1 = 0; z1 < 4; ++z1)
    for (ElementId z2 = 0; z2 < 4; ++z2)
      for (ElementId xi = 0; xi < 4; ++xi) {
        const auto c = constants_for(nb, z1, z2, xi);
        REQUIRE(std::holds_alternative<Constants>(c));
        CHECK(std::get<Constants>(c).c1 == g.op(g.op(g.op(z2, z1), g.inverse(xi)), 2));
      }
  CHECK(admissible_params(nb).size() == 64);
  const auto c = std::get<Constants>(constants_for(nb, 0, 1, 3));
  CHECK(c.c1 == 0);
}

TEST_CASE("trivial skew brace on symmetric(3)") {
  const NearBrace nb = trivial_near_brace(symmetric(3), 0);
  const ElementId t = 1;  // the transposition 132
  const auto c = constants_for(nb, 0, 0, t);
  REQUIRE(std::holds_alternative<NonConstant>(c));
  const NonConstant& nc = std::get<NonConstant>(c);
  CHECK(nc.value1 != nc.value2);
  CHECK_THROWS_AS(constants_for(nb, 0, 0, 6), PreconditionError);

  std::vector<ElementId> admissible_xi;
  for (const ParamTriple& p : admissible_params(nb))
    if (p.z1 == 0 && p.z2 == 0) admissible_xi.push_back(p.xi);
  CHECK(admissible_xi == std::vector<ElementId>{0});
  CHECK(!admissible_params(nb).empty());
  CHECK(admissible_params(nb).front() == ParamTriple{0, 0, 0, 0, 0});
}

TEST_CASE("admissible triples: constants reproduce, order is lexicographic") {
  for (const std::string& spec : standard_catalogue(6))
    for (const NearBrace& nb : enumerate_near_braces(build_standard(spec))) {
      const auto ps = admissible_params(nb);
      CHECK(std::is_sorted(ps.begin(), ps.end()));
      for (const ParamTriple& p : ps) {
        for (ElementId a = 0; a < nb.order(); ++a) {
          CHECK(nb.minus(nb.times(a, p.z2, p.z1), nb.times(a, p.xi)) == p.c1);
          CHECK(nb.plus(nb.neg(nb.times(a, p.xi)), nb.times(a, p.z1, p.z2)) == p.c2);
        }
        const InverseParams h = inverse_params(nb, p);
        CHECK(h.hxi == nb.inv(p.xi));
        CHECK(h.hz1 == nb.times(p.z1, h.hxi));
        CHECK(h.hz2 == nb.times(p.z2, h.hxi));
      }
      for (const ParamTriple& p : weak_only_params(nb)) {
        CHECK_FALSE(is_right_distributive(nb, p.xi));
        CHECK_FALSE(is_admissible(nb, p.z1, p.z2, p.xi));
      }
    }
}

TEST_CASE("sigma table matches its formula") {
  const NearBrace nb = trivial_near_brace(dihedral(8), 2);
  const SquareTable s = sigma_table(nb, 1, 3, 5);
  for (ElementId a = 0; a < 8; ++a)
    for (ElementId b = 0; b < 8; ++b)
      CHECK(s(a, b) == nb.plus(nb.minus(nb.times(a, b, 1), nb.times(a, 5)), 3));
}

TEST_CASE("coincidence lemmas") {
  SUBCASE("reflexive pair") {
    const NearBrace nb = trivial_near_brace(cyclic(4), 2);
    const ElementId z = 1;
    const ParamTriple t = *make_params(nb, nb.one(), z, nb.times(nb.zero(), z));
    const CoincidenceReport r = sigma_coincidence_check(nb, t, t);
    CHECK(r.tables_equal);
    CHECK(r.kind == CoincidenceReport::Kind::single_param);
    REQUIRE(r.identity_holds);
    CHECK(*r.identity_holds);
  }
  SUBCASE("cyclic(2) single-parameter pairs") {
    // Here a - b + c = a.b^-1.c, so sigma_a(b) = b.kappa^-1 whatever z is.
    const NearBrace nb = trivial_near_brace(cyclic(2), 1);
    for (ElementId z = 0; z < 2; ++z)
      for (ElementId w = 0; w < 2; ++w) {
        const auto t1 = make_params(nb, 0, z, nb.times(nb.zero(), z));
        const auto t2 = make_params(nb, 0, w, nb.times(nb.zero(), w));
        REQUIRE(t1);
        REQUIRE(t2);
        const CoincidenceReport r = sigma_coincidence_check(nb, *t1, *t2);
        CHECK(r.tables_equal);
        CHECK(r.kind == CoincidenceReport::Kind::single_param);
        CHECK(r.identity_holds.value_or(false));
      }
  }
  SUBCASE("distinct tables assert nothing") {
    const NearBrace nb = trivial_near_brace(cyclic(4), 0);
    const auto t1 = make_params(nb, 0, 0, 0), t2 = make_params(nb, 1, 0, 0);
    const CoincidenceReport r = sigma_coincidence_check(nb, *t1, *t2);
    CHECK_FALSE(r.tables_equal);
    CHECK_FALSE(r.identity_holds.has_value());
  }
}

}
