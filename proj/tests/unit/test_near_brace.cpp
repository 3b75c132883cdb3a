#include <doctest.h>

#include "nearbrace/enumerate.hpp"
#include "nearbrace/near_brace.hpp"
#include "nearbrace/parameters.hpp"
#include "oracle.hpp"

using namespace nearbrace;

TEST_SUITE("near_brace") {

TEST_CASE("add = mul = cyclic(2) is the trivial skew brace") {
  const GroupTable c2 = cyclic(2);
  CHECK(validate_near_brace(c2, c2).ok());
  const NearBrace nb = NearBrace::from_groups(c2, c2);
  CHECK(nb.is_skew());
  CHECK(nb.is_singular());
}

TEST_CASE("trivial near brace on cyclic(2) with kappa = g") {
  const NearBrace nb = trivial_near_brace(cyclic(2), 1);
  CHECK(nb.zero() == 1);
  CHECK(nb.one() == 0);
  for (ElementId a = 0; a < 2; ++a)
    for (ElementId b = 0; b < 2; ++b) CHECK(nb.plus(a, b) == (a + 1 + b) % 2);
}

TEST_CASE("trivial near brace on cyclic(4) with kappa = g^2") {
  const NearBrace nb = trivial_near_brace(cyclic(4), 2);
  CHECK(validate_near_brace(nb.add_group(), nb.mul_group()).ok());
  CHECK(nb.zero() == 2);
  CHECK_FALSE(nb.is_skew());
  CHECK(nb.is_singular());
  const StructuralReport r = structural_report(nb);
  CHECK(r.distributivity.holds);
  CHECK(r.is_singular());
  CHECK(r.zero_mul_zero_is_neg_one.holds);
  CHECK(r.one_plus_one_is_zero_inverse.holds);
  CHECK(r.one_central_in_add.holds);
  CHECK(r.consistent());
}

TEST_CASE("trivial near brace on symmetric(3) with kappa = identity collapses + to .") {
  const GroupTable s3 = symmetric(3);
  const NearBrace nb = trivial_near_brace(s3, 0);
  CHECK(nb.is_skew());
  CHECK(nb.add_group().table() == s3.table());
  CHECK_THROWS_AS(trivial_near_brace(s3, 1), PreconditionError);
}

TEST_CASE("cyclic(4) addition with Klein four multiplication is the brace a.b = a + b + 2ab") {
  const GroupTable add = cyclic(4);
  const GroupTable klein = build_standard("cyclic:2*cyclic:2");
  CHECK(validate_near_brace(add, klein).ok());
  for (ElementId a = 0; a < 4; ++a)
    for (ElementId b = 0; b < 4; ++b) CHECK(klein.op(a, b) == (a + b + 2 * a * b) % 4);
}

TEST_CASE("a mismatched pair fails with a witness") {
  const GroupTable add = cyclic(4);
  // cyclic(4) again, with g and g^2 renamed
  const GroupTable mul = GroupTable::from_table(oracle::relabel(cyclic(4).table(), {0, 2, 1, 3}));
  const Diagnostics d = validate_near_brace(add, mul);
  REQUIRE_FALSE(d.ok());
  const Failure* f = d.find("distributivity");
  REQUIRE(f);
  REQUIRE(f->witness.size() == 3);
  const auto [a, b, c] = std::tuple{f->witness[0], f->witness[1], f->witness[2]};
  const ElementId lhs = mul.op(a, add.op(b, c));
  const ElementId rhs = add.op(add.op(mul.op(a, b), add.inverse(mul.op(a, 0))), mul.op(a, c));
  CHECK(lhs != rhs);
  CHECK_FALSE(oracle::is_near_brace(add.table().rows(), mul.table().rows()));
  CHECK_THROWS_AS(validate_near_brace(cyclic(3), cyclic(4)), std::invalid_argument);
}

TEST_CASE("addition from sigma") {
  SUBCASE("identity family gives + = .") {
    SigmaFamily fam{SquareTable(2), 0};
    for (ElementId x = 0; x < 2; ++x)
      for (ElementId y = 0; y < 2; ++y) fam.sigma(x, y) = y;
    const NearBrace nb = addition_from_sigma(cyclic(2), fam);
    CHECK(nb.add_group().table() == cyclic(2).table());
    CHECK(nb.is_skew());
  }
  SUBCASE("sigma_x(y) = y.g^2 gives the kappa = g^2 trivial addition") {
    const GroupTable g = cyclic(4);
    SigmaFamily fam{SquareTable(4), 0};
    for (ElementId x = 0; x < 4; ++x)
      for (ElementId y = 0; y < 4; ++y) fam.sigma(x, y) = g.op(y, 2);
    const NearBrace nb = addition_from_sigma(g, fam);
    CHECK(nb.add_group().table() == trivial_near_brace(g, 2).add_group().table());
  }
  SUBCASE("a non-associative family is rejected") {
    const GroupTable g = cyclic(3);
    SigmaFamily fam{SquareTable(3), 0};
    for (ElementId x = 0; x < 3; ++x)
      for (ElementId y = 0; y < 3; ++y) fam.sigma(x, y) = x == 1 ? (3 - y) % 3 : y;
    CHECK_THROWS_AS(addition_from_sigma(g, fam), InvalidStructure);
  }
  SUBCASE("round trip through sigma_family_of for every enumerated near brace") {
    for (const char* spec : {"cyclic:4", "dihedral:4", "symmetric:3"}) {
      for (const NearBrace& nb : enumerate_near_braces(build_standard(spec)))
        for (ElementId z : right_distributive_set(nb)) {
          const NearBrace back = addition_from_sigma(nb.mul_group(), sigma_family_of(nb, z));
          CHECK(back.add_group().table() == nb.add_group().table());
        }
    }
  }
}

TEST_CASE("shifts move between near braces and skew braces") {
  const NearBrace nb = trivial_near_brace(cyclic(6), 3);
  const NearBrace skew = shift_to_skew(nb);
  CHECK(skew.is_skew());
  CHECK(skew.mul_group().table() == nb.mul_group().table());
  for (ElementId a = 0; a < 6; ++a)
    for (ElementId b = 0; b < 6; ++b) CHECK(skew.plus(a, b) == nb.heap(a, nb.one(), b));
  const NearBrace again = shift_by(skew, nb.zero());
  CHECK(again.add_group().table() == nb.add_group().table());
  CHECK_THROWS_AS(shift_by(nb, 0), PreconditionError);
}

TEST_CASE("structural identities hold on every enumerated near brace of order <= 6") {
  for (const std::string& spec : standard_catalogue(6)) {
    for (const NearBrace& nb : enumerate_near_braces(build_standard(spec))) {
      const StructuralReport r = structural_report(nb);
      CHECK(r.consistent());
      CHECK(r.distributivity.holds);
      CHECK(r.negation_identity.holds);
      CHECK(r.ternary_distributivity.holds);
      CHECK(r.is_singular() == nb.is_singular());
      CHECK(r.is_skew == nb.is_skew());
      if (nb.is_skew()) CHECK(nb.is_singular());
    }
  }
}

TEST_CASE("morphisms") {
  const NearBrace nb = trivial_near_brace(cyclic(4), 2);
  std::vector<ElementId> id{0, 1, 2, 3};
  CHECK(check_morphism(id, nb, nb).ok);
  // a -> a^3 is a multiplicative automorphism and fixes kappa = g^2.
  std::vector<ElementId> inv{0, 3, 2, 1};
  CHECK(check_morphism(inv, nb, nb).ok);
  std::vector<ElementId> bad{0, 2, 0, 2};
  const MorphismCheck m = check_morphism(bad, nb, nb);
  CHECK_FALSE(m.ok);
  CHECK_FALSE(m.witness.empty());
  std::vector<ElementId> short_map{0, 1};
  CHECK_THROWS_AS(check_morphism(short_map, nb, nb), std::invalid_argument);
}

TEST_CASE("property: relabelling a near brace keeps it a near brace") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto specs = standard_catalogue(6);
    const GroupTable g = build_standard(specs[rng.next() % specs.size()]);
    const auto all = enumerate_near_braces(g);
    const NearBrace& nb = all[rng.next() % all.size()];
    const auto p = oracle::random_permutation(rng, g.order());
    const SquareTable add = oracle::relabel(nb.add_group().table(), p);
    const SquareTable mul = oracle::relabel(nb.mul_group().table(), p);
    CHECK(validate_near_brace(add, mul).ok());
    CHECK(oracle::is_near_brace(add.rows(), mul.rows()));
  }
}

}
