#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "nearbrace/near_brace.hpp"

namespace nearbrace {

/// Parameters (z1, z2, xi) of the map  sigma_a(b) = a.b.z1 - a.xi + z2
/// together with the constants
///     c1 = a.z2.z1 - a.xi,   c2 = -a.xi + a.z1.z2
/// which must not depend on a.
struct ParamTriple {
  ElementId z1 = 0, z2 = 0, xi = 0;
  ElementId c1 = 0, c2 = 0;

  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
  friend auto operator<=>(const ParamTriple&, const ParamTriple&) = default;
};

/// Parameters of the inverse map: hxi = xi^-1, hz_i = z_i . xi^-1.
struct InverseParams {
  ElementId hz1 = 0, hz2 = 0, hxi = 0;
  friend bool operator==(const InverseParams&, const InverseParams&) = default;
};

/// True iff (a - b + c).h = a.h - b.h + c.h for all a, b, c.
bool is_right_distributive(const NearBrace& nb, ElementId h);

/// All right-distributive elements, ascending.
std::vector<ElementId> right_distributive_set(const NearBrace& nb);

struct Constants {
  ElementId c1 = 0, c2 = 0;
  friend bool operator==(const Constants&, const Constants&) = default;
};

/// The constant that failed, with two arguments giving different values.
struct NonConstant {
  enum class Which { c1, c2 } which = Which::c1;
  ElementId a1 = 0, a2 = 0;
  ElementId value1 = 0, value2 = 0;
};

std::variant<Constants, NonConstant> constants_for(const NearBrace& nb, ElementId z1, ElementId z2, ElementId xi);

/// z1, z2 and xi right distributive and both constants exist.
bool is_admissible(const NearBrace& nb, ElementId z1, ElementId z2, ElementId xi);

/// Full triple (with constants) or nullopt when not admissible.
std::optional<ParamTriple> make_params(const NearBrace& nb, ElementId z1, ElementId z2, ElementId xi);

/// Every admissible triple over the cube of right-distributive elements,
/// sorted lexicographically by (z1, z2, xi).
std::vector<ParamTriple> admissible_params(const NearBrace& nb);

/// Triples with right-distributive z1, z2 and constant c1, c2 whose xi is
/// NOT right distributive: they meet the weaker hypothesis (distributivity
/// asked of z1, z2 only) but not the one required here.
std::vector<ParamTriple> weak_only_params(const NearBrace& nb);

InverseParams inverse_params(const NearBrace& nb, const ParamTriple& p);

/// sigma table of a parameter triple; no admissibility check.
SquareTable sigma_table(const NearBrace& nb, ElementId z1, ElementId z2, ElementId xi);

struct CoincidenceReport {
  enum class Kind {
    unrelated,       // no coincidence lemma applies to this pair
    single_param,    // (1, z, 0.z) against (1, w, 0.w)
    swapped_params,  // (z1, z2, xi) against (z2, z1, xi)
  };
  bool tables_equal = false;
  Kind kind = Kind::unrelated;
  /// Set only when the tables coincide and a lemma applies:
  ///   single_param:   z^-1.w - 1 = w - z
  ///   swapped_params: 0.z1^-1.z2 = z2 - z1
  std::optional<bool> identity_holds;
};

CoincidenceReport sigma_coincidence_check(const NearBrace& nb, const ParamTriple& t1, const ParamTriple& t2);

}  // namespace nearbrace
