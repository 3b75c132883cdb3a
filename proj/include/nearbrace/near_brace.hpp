#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nearbrace/group.hpp"
#include "nearbrace/kernels.hpp"

namespace nearbrace {

/// A carrier with two group structures, addition (neutral 0) and
/// multiplication (neutral 1), such that
///     a.(b + c) = a.b - a.0 + a.c      for all a, b, c.
/// A near brace with 0 = 1 is a left skew brace.
class NearBrace {
public:
  /// Throws InvalidStructure if the carriers differ or distributivity fails.
  static NearBrace from_groups(GroupTable add, GroupTable mul);

  [[nodiscard]] std::size_t order() const noexcept { return mul_.order(); }
  [[nodiscard]] const GroupTable& add_group() const noexcept { return add_; }
  [[nodiscard]] const GroupTable& mul_group() const noexcept { return mul_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return mul_.labels(); }

  [[nodiscard]] ElementId zero() const noexcept { return add_.identity(); }
  [[nodiscard]] ElementId one() const noexcept { return mul_.identity(); }

  [[nodiscard]] ElementId plus(ElementId a, ElementId b) const noexcept { return add_.op(a, b); }
  [[nodiscard]] ElementId neg(ElementId a) const noexcept { return add_.inverse(a); }
  [[nodiscard]] ElementId minus(ElementId a, ElementId b) const noexcept { return add_.op(a, add_.inverse(b)); }
  /// a - b + c
  [[nodiscard]] ElementId heap(ElementId a, ElementId b, ElementId c) const noexcept {
    return plus(minus(a, b), c);
  }
  [[nodiscard]] ElementId times(ElementId a, ElementId b) const noexcept { return mul_.op(a, b); }
  [[nodiscard]] ElementId times(ElementId a, ElementId b, ElementId c) const noexcept { return times(times(a, b), c); }
  [[nodiscard]] ElementId inv(ElementId a) const noexcept { return mul_.inverse(a); }

  [[nodiscard]] bool is_skew() const noexcept { return zero() == one(); }
  /// a - a.0 = -a.0 + a = 1 for every a.
  [[nodiscard]] bool is_singular() const noexcept { return singular_; }
  [[nodiscard]] bool is_abelian() const noexcept { return add_.is_abelian(); }

  friend bool operator==(const NearBrace& a, const NearBrace& b) {
    return a.add_.table() == b.add_.table() && a.mul_.table() == b.mul_.table() && a.labels() == b.labels();
  }

private:
  NearBrace(GroupTable add, GroupTable mul);

  GroupTable add_;
  GroupTable mul_;
  bool singular_ = false;
};

/// Checks both group axioms and left near-brace distributivity over all n^3
/// triples. Throws std::invalid_argument when the carrier sizes differ.
Diagnostics validate_near_brace(const GroupTable& add, const GroupTable& mul);
Diagnostics validate_near_brace(const SquareTable& add, const SquareTable& mul);

/// a + b := a . kappa^-1 . b for a central kappa. kappa = 1 gives the
/// trivial skew brace (+ equal to .).
NearBrace trivial_near_brace(const GroupTable& g, ElementId kappa);

/// sigma(x, y) = sigma_x(y); every row must be a permutation.
struct SigmaFamily {
  SquareTable sigma;
  ElementId z = 0;
};

/// Builds  y + x := x . sigma_{x^-1}(y . z) . z^-1  and checks that it yields
/// a near brace with multiplication g. Throws InvalidStructure naming the
/// first broken axiom ("associativity", "neutral", "group", "distributivity").
NearBrace addition_from_sigma(const GroupTable& g, const SigmaFamily& fam);

/// The sigma family x, y -> x.y - x.0.z + z read back from a near brace.
SigmaFamily sigma_family_of(const NearBrace& nb, ElementId z);

/// a +1 b := a - 1 + b. The result is a skew brace with the same multiplication.
NearBrace shift_to_skew(const NearBrace& nb);

/// For a skew brace: a +' b := a - t + b, a near brace with zero t.
/// Throws PreconditionError if the input is not skew.
NearBrace shift_by(const NearBrace& skew, ElementId t);

struct IdentityCheck {
  bool holds = true;
  std::vector<ElementId> witness;
};

struct StructuralReport {
  IdentityCheck distributivity;
  bool is_skew = false;
  IdentityCheck singular;                 // a - a.0 = 1 and -a.0 + a = 1
  IdentityCheck zero_mul_zero_is_neg_one;  // 0.0 = -1
  IdentityCheck one_plus_one_is_zero_inverse;  // 1 + 1 = 0^-1
  IdentityCheck one_central_in_add;        // a + 1 = 1 + a
  IdentityCheck negation_identity;         // a.(-b) = a.0 - a.b + a.0
  IdentityCheck ternary_distributivity;    // a.(b - c + d) = a.b - a.c + a.d
  IdentityCheck zero_right_distributive;   // (a - b + c).0 = a.0 - b.0 + c.0

  [[nodiscard]] bool is_singular() const noexcept { return singular.holds; }
  /// Identities that must hold in every near brace, plus the singular ones
  /// whenever the near brace is singular.
  [[nodiscard]] bool consistent() const noexcept;
};

StructuralReport structural_report(const NearBrace& nb);

struct MorphismCheck {
  bool ok = true;
  std::string law;  // "add" or "mul" for the failing law
  std::vector<ElementId> witness;
};

/// True iff f(a+b) = f(a)+f(b) and f(a.b) = f(a).f(b) for all pairs.
/// Throws std::invalid_argument on size mismatch or out-of-range images.
MorphismCheck check_morphism(std::span<const ElementId> f, const NearBrace& from, const NearBrace& to);

}  // namespace nearbrace
