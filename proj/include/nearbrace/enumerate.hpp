#pragma once

#include <optional>
#include <vector>

#include "nearbrace/near_brace.hpp"

namespace nearbrace {

struct EnumerationOptions {
  /// Keep only the first `limit` results in canonical order.
  std::optional<std::size_t> limit;
  /// Restrict to additions whose neutral element is the multiplicative one,
  /// i.e. skew braces.
  bool skew_only = false;
  /// Permit orders above kMaxExhaustiveOrder.
  bool allow_large = false;
  kernels::Exec exec = kernels::Exec::parallel;
};

/// Every addition on the carrier of g that makes (carrier, +, g) a near brace,
/// sorted lexicographically by the flattened addition table.
///
/// The addition table is filled row by row as a Latin square. Row b of + is
/// the permutation rho_b(c) = b + c, with rho_b(0) = b. Once a row is complete
/// it is propagated through two closure rules, both equivalent to the axioms:
///   associativity   rho_x . rho_y = rho_{x+y}
///   distributivity  L_a . rho_b . L_a^-1 = rho_w with w = a.b - a.0
/// where L_a(c) = a.c. Any clash with an assigned row or a Latin column
/// prunes the branch. Every result is re-validated with validate_near_brace.
///
/// Throws PreconditionError when g.order() > 8 and allow_large is not set.
std::vector<NearBrace> enumerate_near_braces(const GroupTable& g, const EnumerationOptions& options = {});

/// Convenience: number of results without materialising labels.
std::size_t count_near_braces(const GroupTable& g, const EnumerationOptions& options = {});

}  // namespace nearbrace
