#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nearbrace/table.hpp"

namespace nearbrace {

/// A finite group stored as its Cayley table: op(i, j) = i . j.
/// Instances always satisfy the group axioms; build one with from_table()
/// (validating) or build_standard().
class GroupTable {
public:
  /// Validates the table and derives identity and inverses.
  /// Throws InvalidStructure when any axiom fails.
  static GroupTable from_table(SquareTable table, std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t order() const noexcept { return table_.order(); }
  [[nodiscard]] ElementId op(ElementId a, ElementId b) const noexcept { return table_(a, b); }
  [[nodiscard]] ElementId identity() const noexcept { return identity_; }
  [[nodiscard]] ElementId inverse(ElementId a) const noexcept { return inverse_[a]; }
  [[nodiscard]] const SquareTable& table() const noexcept { return table_; }
  [[nodiscard]] std::span<const ElementId> inverses() const noexcept { return inverse_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(ElementId a) const { return labels_.at(a); }

  [[nodiscard]] bool is_abelian() const noexcept;
  [[nodiscard]] bool is_central(ElementId a) const noexcept;
  [[nodiscard]] std::vector<ElementId> center() const;
  /// Smallest k >= 1 with a^k = identity.
  [[nodiscard]] std::size_t element_order(ElementId a) const noexcept;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.table_ == b.table_ && a.labels_ == b.labels_;
  }

private:
  GroupTable(SquareTable table, std::vector<std::string> labels, ElementId identity,
             std::vector<ElementId> inverse)
      : table_(std::move(table)), labels_(std::move(labels)), identity_(identity), inverse_(std::move(inverse)) {}

  SquareTable table_;
  std::vector<std::string> labels_;
  ElementId identity_ = 0;
  std::vector<ElementId> inverse_;
};

/// Checks Latin square, two-sided identity, inverses and associativity.
/// Each failed check carries its lexicographically first witness.
/// Throws std::invalid_argument if the matrix is not n x n with entries in [0, n).
Diagnostics validate_group(const SquareTable& table);
Diagnostics validate_group(std::size_t n, const std::vector<std::vector<ElementId>>& rows);

// ---------------------------------------------------------------------------
// Standard families

struct FamilySpec;

struct Cyclic { std::size_t n; };
struct Dihedral { std::size_t order; };  // order 2m, m >= 2
struct Symmetric { std::size_t degree; };  // degree <= 4
struct Quaternion {};
struct Product {
  std::shared_ptr<const FamilySpec> left;
  std::shared_ptr<const FamilySpec> right;
};

struct FamilySpec {
  std::variant<Cyclic, Dihedral, Symmetric, Quaternion, Product> family;
};

inline constexpr std::size_t kMaxConstructedOrder = 64;
inline constexpr std::size_t kMaxExhaustiveOrder = 8;

/// Parses "cyclic:4", "dihedral:8", "symmetric:3", "quaternion:8" and products
/// written with '*' such as "cyclic:2*cyclic:2" (left associative).
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Canonical constructions, identity at index 0:
///   cyclic(n)     g^k at index k
///   dihedral(2m)  r^k at index k, r^k s at index m + k
///   symmetric(k)  permutations in lexicographic one-line notation, (p.q)(i) = p(q(i))
///   quaternion    1, -1, i, -i, j, -j, k, -k
///   A * B         (a, b) at index a * |B| + b
/// Throws PreconditionError for unsupported families or orders above 64.
GroupTable build_standard(const FamilySpec& spec);
GroupTable build_standard(std::string_view text);

GroupTable cyclic(std::size_t n);
GroupTable dihedral(std::size_t order);
GroupTable symmetric(std::size_t degree);
GroupTable quaternion();
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// Family descriptors for every standard group of order <= max_order
/// (one representative per family and parameter, products of two cyclic
/// factors included).
std::vector<std::string> standard_catalogue(std::size_t max_order);

}  // namespace nearbrace
