#include "nearbrace/enumerate.hpp"

#include <algorithm>

namespace nearbrace {

namespace {

using Perm = std::vector<ElementId>;

struct State {
  std::vector<Perm> rows;  // rows[b] empty while unassigned
  std::size_t assigned = 0;
};

class RowSearch {
public:
  RowSearch(const GroupTable& g, ElementId zero) : g_(g), n_(g.order()), zero_(zero) {}

  std::vector<SquareTable> run() {
    State s;
    s.rows.assign(n_, {});
    Perm id(n_);
    for (ElementId c = 0; c < n_; ++c) id[c] = c;
    std::vector<ElementId> queue;
    if (set_row(s, id, queue) && propagate(s, queue)) dfs(s);
    return std::move(found_);
  }

private:
  bool set_row(State& s, const Perm& p, std::vector<ElementId>& queue) const {
    const ElementId k = p[zero_];
    if (!s.rows[k].empty()) return s.rows[k] == p;
    for (const Perm& other : s.rows) {
      if (other.empty()) continue;
      for (std::size_t c = 0; c < n_; ++c)
        if (other[c] == p[c]) return false;
    }
    s.rows[k] = p;
    ++s.assigned;
    queue.push_back(k);
    return true;
  }

  bool propagate(State& s, std::vector<ElementId>& queue) const {
    Perm tmp(n_);
    while (!queue.empty()) {
      const ElementId k = queue.back();
      queue.pop_back();
      const Perm pi = s.rows[k];
      for (std::size_t j = 0; j < n_; ++j) {
        if (s.rows[j].empty()) continue;
        const Perm rho = s.rows[j];
        for (std::size_t c = 0; c < n_; ++c) tmp[c] = pi[rho[c]];
        if (!set_row(s, tmp, queue)) return false;
        for (std::size_t c = 0; c < n_; ++c) tmp[c] = rho[pi[c]];
        if (!set_row(s, tmp, queue)) return false;
      }
      for (ElementId a = 0; a < n_; ++a) {
        if (a == g_.identity()) continue;
        const ElementId ainv = g_.inverse(a);
        for (ElementId c = 0; c < n_; ++c) tmp[c] = g_.op(a, pi[g_.op(ainv, c)]);
        if (!set_row(s, tmp, queue)) return false;
      }
    }
    return true;
  }

  void dfs(const State& s) {
    if (s.assigned == n_) {
      SquareTable t(n_);
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c) t(b, c) = s.rows[b][c];
      found_.push_back(std::move(t));
      return;
    }
    ElementId k = 0;
    while (!s.rows[k].empty()) ++k;

    // Values already used in each column by assigned rows.
    std::vector<std::uint64_t> column_used(n_, 0);
    for (const Perm& r : s.rows)
      if (!r.empty())
        for (std::size_t c = 0; c < n_; ++c) column_used[c] |= std::uint64_t{1} << r[c];

    Perm p(n_, 0);
    p[zero_] = k;
    fill(s, k, p, std::uint64_t{1} << k, column_used, 0);
  }

  void fill(const State& s, ElementId k, Perm& p, std::uint64_t row_used, const std::vector<std::uint64_t>& column_used,
            std::size_t col) {
    if (col == zero_) ++col;
    if (col >= n_) {
      State next = s;
      std::vector<ElementId> queue;
      if (set_row(next, p, queue) && propagate(next, queue)) dfs(next);
      return;
    }
    for (ElementId v = 0; v < n_; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((row_used & bit) || (column_used[col] & bit)) continue;
      p[col] = v;
      fill(s, k, p, row_used | bit, column_used, col + 1);
    }
  }

  const GroupTable& g_;
  std::size_t n_;
  ElementId zero_;
  std::vector<SquareTable> found_;
};

}  // namespace

std::vector<NearBrace> enumerate_near_braces(const GroupTable& g, const EnumerationOptions& options) {
  const std::size_t n = g.order();
  if (n > kMaxExhaustiveOrder && !options.allow_large)
    throw PreconditionError("exhaustive enumeration is limited to order <= 8 (order " + std::to_string(n) + ")");
  if (n > 64) throw PreconditionError("enumeration supports order <= 64");

  std::vector<ElementId> zeros;
  if (options.skew_only) {
    zeros.push_back(g.identity());
  } else {
    for (ElementId z = 0; z < n; ++z) zeros.push_back(z);
  }

  std::vector<std::vector<SquareTable>> per_zero(zeros.size());
  const auto count = static_cast<std::ptrdiff_t>(zeros.size());
  if (options.exec == kernels::Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) per_zero[i] = RowSearch(g, zeros[i]).run();
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) per_zero[i] = RowSearch(g, zeros[i]).run();
  }

  std::vector<SquareTable> tables;
  for (auto& v : per_zero)
    for (auto& t : v) tables.push_back(std::move(t));
  std::sort(tables.begin(), tables.end());
  if (options.limit && tables.size() > *options.limit) tables.resize(*options.limit);

  std::vector<NearBrace> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(NearBrace::from_groups(GroupTable::from_table(std::move(t), g.labels()), g));
  return out;
}

std::size_t count_near_braces(const GroupTable& g, const EnumerationOptions& options) {
  return enumerate_near_braces(g, options).size();
}

}  // namespace nearbrace
