#include "nearbrace/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "nearbrace/kernels.hpp"

namespace nearbrace {

namespace {

void check_shape(const SquareTable& t) {
  const std::size_t n = t.order();
  if (n == 0) throw std::invalid_argument("group table must have at least one element");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t(i, j) >= n)
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                    std::to_string(t(i, j)) + " is outside [0," + std::to_string(n) + ")");
}

// Returns the two-sided identity, if the table has one.
std::optional<ElementId> find_identity(const SquareTable& t) {
  const std::size_t n = t.order();
  for (ElementId e = 0; e < n; ++e) {
    bool ok = true;
    for (ElementId j = 0; j < n && ok; ++j) ok = t(e, j) == j && t(j, e) == j;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

Diagnostics validate_group(const SquareTable& t) {
  check_shape(t);
  const std::size_t n = t.order();
  Diagnostics d;

  for (ElementId i = 0; i < n; ++i) {
    std::vector<int> seen(n, -1);
    bool bad = false;
    for (ElementId j = 0; j < n && !bad; ++j) {
      const ElementId v = t(i, j);
      if (seen[v] >= 0) {
        d.add("latin_row", {i, static_cast<ElementId>(seen[v]), j},
              "row " + std::to_string(i) + " is not a permutation (columns " + std::to_string(seen[v]) + " and " +
                  std::to_string(j) + " both hold " + std::to_string(v) + ")");
        bad = true;
      }
      seen[v] = static_cast<int>(j);
    }
    if (bad) break;
  }
  for (ElementId j = 0; j < n; ++j) {
    std::vector<int> seen(n, -1);
    bool bad = false;
    for (ElementId i = 0; i < n && !bad; ++i) {
      const ElementId v = t(i, j);
      if (seen[v] >= 0) {
        d.add("latin_column", {j, static_cast<ElementId>(seen[v]), i},
              "column " + std::to_string(j) + " is not a permutation");
        bad = true;
      }
      seen[v] = static_cast<int>(i);
    }
    if (bad) break;
  }

  const auto e = find_identity(t);
  if (!e) {
    d.add("identity", {}, "no two-sided identity element");
  } else {
    for (ElementId i = 0; i < n; ++i) {
      bool found = false;
      for (ElementId j = 0; j < n && !found; ++j) found = t(i, j) == *e && t(j, i) == *e;
      if (!found) {
        d.add("inverse", {i}, "element " + std::to_string(i) + " has no two-sided inverse");
        break;
      }
    }
  }

  if (auto w = kernels::associativity_failure(t, kernels::default_exec()))
    d.add("associativity", {(*w)[0], (*w)[1], (*w)[2]}, "(a.b).c != a.(b.c)");
  return d;
}

Diagnostics validate_group(std::size_t n, const std::vector<std::vector<ElementId>>& rows) {
  if (rows.size() != n) throw std::invalid_argument("expected " + std::to_string(n) + " rows");
  return validate_group(SquareTable::from_rows(rows));
}

GroupTable GroupTable::from_table(SquareTable table, std::vector<std::string> labels) {
  const std::size_t n = table.order();
  Diagnostics d = validate_group(table);
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) {
    d.add("labels", {}, "expected " + std::to_string(n) + " labels");
  } else {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) d.add("labels", {}, "labels not distinct");
  }
  if (!d.ok()) {
    std::string what = "not a group: " + d.summary();
    throw InvalidStructure(what, std::move(d));
  }

  const ElementId e = *find_identity(table);
  std::vector<ElementId> inv(n);
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = 0; j < n; ++j)
      if (table(i, j) == e) inv[i] = j;
  return GroupTable(std::move(table), std::move(labels), e, std::move(inv));
}

bool GroupTable::is_abelian() const noexcept {
  for (ElementId a = 0; a < order(); ++a)
    for (ElementId b = a + 1; b < order(); ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

bool GroupTable::is_central(ElementId a) const noexcept {
  for (ElementId b = 0; b < order(); ++b)
    if (op(a, b) != op(b, a)) return false;
  return true;
}

std::vector<ElementId> GroupTable::center() const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < order(); ++a)
    if (is_central(a)) out.push_back(a);
  return out;
}

std::size_t GroupTable::element_order(ElementId a) const noexcept {
  std::size_t k = 1;
  for (ElementId x = a; x != identity_; x = op(x, a)) ++k;
  return k;
}

// ---------------------------------------------------------------------------

GroupTable cyclic(std::size_t n) {
  if (n < 1 || n > kMaxConstructedOrder) throw PreconditionError("cyclic order must be in [1, 64]");
  SquareTable t(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = static_cast<ElementId>((i + j) % n);
    labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  return GroupTable::from_table(std::move(t), std::move(labels));
}

GroupTable dihedral(std::size_t order) {
  if (order < 4 || order % 2 != 0 || order > kMaxConstructedOrder)
    throw PreconditionError("dihedral order must be even and in [4, 64]");
  const std::size_t m = order / 2;
  // r^a s^f * r^b s^g = r^(a + (-1)^f b) s^(f+g)
  SquareTable t(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % m, f = x / m;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y % m, g = y / m;
      const std::size_t rot = f == 0 ? (a + b) % m : (a + m - b) % m;
      t(x, y) = static_cast<ElementId>(((f + g) % 2) * m + rot);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t k = 0; k < m; ++k) {
      std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
      labels.push_back(f == 0 ? (k == 0 ? "e" : r) : r + "s");
    }
  return GroupTable::from_table(std::move(t), std::move(labels));
}

GroupTable symmetric(std::size_t degree) {
  if (degree < 1 || degree > 4) throw PreconditionError("symmetric degree must be in [1, 4]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<ElementId>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  SquareTable t(n);
  std::vector<int> c(degree);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < degree; ++k) c[k] = perms[i][perms[j][k]];
      t(i, j) = index_of(c);
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += static_cast<char>('1' + v);
    labels.push_back(s);
  }
  return GroupTable::from_table(std::move(t), std::move(labels));
}

GroupTable quaternion() {
  // Index 2u + s encodes (-1)^s * unit[u], unit = 1, i, j, k.
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  SquareTable t(8);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2 + y % 2 + unit_sign[u][v]) % 2;
      t(x, y) = static_cast<ElementId>(2 * unit_product[u][v] + sign);
    }
  return GroupTable::from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxConstructedOrder) throw PreconditionError("product order exceeds 64");
  SquareTable t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t(x, y) = static_cast<ElementId>(a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb));
  // Renumber so that the identity pair sits at index 0 (it already does for
  // canonical factors; loaded factors may keep their identity elsewhere).
  const ElementId e = static_cast<ElementId>(a.identity() * nb + b.identity());
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  if (e != 0) {
    std::vector<ElementId> perm(n);  // old -> new, swapping 0 and e
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[e]);
    SquareTable r(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) r(perm[x], perm[y]) = perm[t(x, y)];
    std::swap(labels[0], labels[e]);
    t = std::move(r);
  }
  return GroupTable::from_table(std::move(t), std::move(labels));
}

// ---------------------------------------------------------------------------

namespace {

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw PreconditionError("bad size '" + std::string(s) + "' in group descriptor '" + std::string(whole) + "'");
  return v;
}

FamilySpec parse_single(std::string_view tok, std::string_view whole) {
  const auto colon = tok.find(':');
  const std::string_view name = tok.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : tok.substr(colon + 1);
  if (name == "quaternion") {
    if (!arg.empty() && parse_size(arg, whole) != 8) throw PreconditionError("quaternion group has order 8");
    return {Quaternion{}};
  }
  if (arg.empty()) throw PreconditionError("group descriptor '" + std::string(tok) + "' needs a size");
  const std::size_t v = parse_size(arg, whole);
  if (name == "cyclic") return {Cyclic{v}};
  if (name == "dihedral") return {Dihedral{v}};
  if (name == "symmetric") return {Symmetric{v}};
  throw PreconditionError("unsupported group family '" + std::string(name) + "'");
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    parts.push_back(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  FamilySpec acc = parse_single(parts[0], text);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto left = std::make_shared<const FamilySpec>(std::move(acc));
    auto right = std::make_shared<const FamilySpec>(parse_single(parts[i], text));
    acc = FamilySpec{Product{std::move(left), std::move(right)}};
  }
  return acc;
}

std::string to_string(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const Cyclic& c) const { return "cyclic:" + std::to_string(c.n); }
    std::string operator()(const Dihedral& d) const { return "dihedral:" + std::to_string(d.order); }
    std::string operator()(const Symmetric& s) const { return "symmetric:" + std::to_string(s.degree); }
    std::string operator()(const Quaternion&) const { return "quaternion:8"; }
    std::string operator()(const Product& p) const { return to_string(*p.left) + "*" + to_string(*p.right); }
  };
  return std::visit(Visitor{}, spec.family);
}

GroupTable build_standard(const FamilySpec& spec) {
  struct Visitor {
    GroupTable operator()(const Cyclic& c) const { return cyclic(c.n); }
    GroupTable operator()(const Dihedral& d) const { return dihedral(d.order); }
    GroupTable operator()(const Symmetric& s) const { return symmetric(s.degree); }
    GroupTable operator()(const Quaternion&) const { return quaternion(); }
    GroupTable operator()(const Product& p) const {
      return direct_product(build_standard(*p.left), build_standard(*p.right));
    }
  };
  return std::visit(Visitor{}, spec.family);
}

GroupTable build_standard(std::string_view text) { return build_standard(parse_family(text)); }

std::vector<std::string> standard_catalogue(std::size_t max_order) {
  // One representative per isomorphism class up to order 8.
  static const std::vector<std::pair<std::size_t, std::string>> all = {
      {1, "cyclic:1"},        {2, "cyclic:2"},
      {3, "cyclic:3"},        {4, "cyclic:4"},
      {4, "dihedral:4"},      {5, "cyclic:5"},
      {6, "cyclic:6"},        {6, "symmetric:3"},
      {7, "cyclic:7"},        {8, "cyclic:8"},
      {8, "cyclic:2*cyclic:4"}, {8, "cyclic:2*cyclic:2*cyclic:2"},
      {8, "dihedral:8"},      {8, "quaternion:8"},
  };
  std::vector<std::string> out;
  for (const auto& [n, name] : all)
    if (n <= max_order) out.push_back(name);
  return out;
}

}  // namespace nearbrace
