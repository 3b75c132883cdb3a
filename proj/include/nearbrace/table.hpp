#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearbrace {

/// Index of an element in the canonical ordering of a finite carrier.
using ElementId = std::uint32_t;

/// Dense n x n table of element ids, row-major. Used for Cayley tables,
/// the sigma/tau tables of a braiding, and the f/g tables of a p-braiding.
class SquareTable {
public:
  SquareTable() = default;
  explicit SquareTable(std::size_t n, ElementId fill = 0) : n_(n), cells_(n * n, fill) {}
  SquareTable(std::size_t n, std::vector<ElementId> cells);

  static SquareTable from_rows(const std::vector<std::vector<ElementId>>& rows);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }

  [[nodiscard]] ElementId operator()(std::size_t i, std::size_t j) const noexcept {
    return cells_[i * n_ + j];
  }
  [[nodiscard]] ElementId& operator()(std::size_t i, std::size_t j) noexcept {
    return cells_[i * n_ + j];
  }

  [[nodiscard]] std::span<const ElementId> row(std::size_t i) const noexcept {
    return {cells_.data() + i * n_, n_};
  }
  [[nodiscard]] std::span<const ElementId> cells() const noexcept { return cells_; }

  [[nodiscard]] std::vector<std::vector<ElementId>> rows() const;

  /// True iff row i is a permutation of 0..n-1.
  [[nodiscard]] bool row_is_permutation(std::size_t i) const;
  [[nodiscard]] bool all_rows_are_permutations() const;

  friend bool operator==(const SquareTable&, const SquareTable&) = default;
  friend auto operator<=>(const SquareTable& a, const SquareTable& b) { return a.cells_ <=> b.cells_; }

private:
  std::size_t n_ = 0;
  std::vector<ElementId> cells_;
};

/// A failed check together with the (lexicographically first) witness.
struct Failure {
  std::string check;
  std::vector<ElementId> witness;
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Diagnostics {
  std::vector<Failure> failures;

  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
  [[nodiscard]] const Failure* find(std::string_view check) const noexcept;
  void add(std::string check, std::vector<ElementId> witness, std::string detail = {});
  void merge(const Diagnostics& other, std::string_view prefix);
  [[nodiscard]] std::string summary() const;
};

/// Raised when a value fails its structural invariants (construction or parse).
class InvalidStructure : public std::runtime_error {
public:
  InvalidStructure(const std::string& what, Diagnostics diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

  [[nodiscard]] const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
  Diagnostics diagnostics_;
};

/// Raised when an operation's precondition does not hold (non-central kappa,
/// inadmissible parameters, an order above an exhaustive bound, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nearbrace
