#include "nearbrace/table.hpp"

#include <sstream>

namespace nearbrace {

SquareTable::SquareTable(std::size_t n, std::vector<ElementId> cells) : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n * n) throw std::invalid_argument("table has " + std::to_string(cells_.size()) +
                                                          " cells, expected " + std::to_string(n * n));
}

SquareTable SquareTable::from_rows(const std::vector<std::vector<ElementId>>& rows) {
  const std::size_t n = rows.size();
  std::vector<ElementId> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return SquareTable(n, std::move(cells));
}

std::vector<std::vector<ElementId>> SquareTable::rows() const {
  std::vector<std::vector<ElementId>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

bool SquareTable::row_is_permutation(std::size_t i) const {
  std::vector<bool> seen(n_, false);
  for (ElementId v : row(i)) {
    if (v >= n_ || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool SquareTable::all_rows_are_permutations() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!row_is_permutation(i)) return false;
  return true;
}

const Failure* Diagnostics::find(std::string_view check) const noexcept {
  for (const auto& f : failures)
    if (f.check == check) return &f;
  return nullptr;
}

void Diagnostics::add(std::string check, std::vector<ElementId> witness, std::string detail) {
  failures.push_back({std::move(check), std::move(witness), std::move(detail)});
}

void Diagnostics::merge(const Diagnostics& other, std::string_view prefix) {
  for (const auto& f : other.failures)
    failures.push_back({std::string(prefix) + f.check, f.witness, f.detail});
}

std::string Diagnostics::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t k = 0; k < failures.size(); ++k) {
    const auto& f = failures[k];
    if (k) os << "; ";
    os << f.check;
    if (!f.witness.empty()) {
      os << " (";
      for (std::size_t i = 0; i < f.witness.size(); ++i) os << (i ? "," : "") << f.witness[i];
      os << ")";
    }
    if (!f.detail.empty()) os << ": " << f.detail;
  }
  return os.str();
}

}  // namespace nearbrace
