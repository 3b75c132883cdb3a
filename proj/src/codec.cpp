#include "nearbrace/codec.hpp"

#include <algorithm>

namespace nearbrace::codec {

namespace {

void fail(const std::string& what, std::string check, std::vector<ElementId> witness = {}, std::string detail = {}) {
  Diagnostics d;
  d.add(std::move(check), std::move(witness), detail.empty() ? what : std::move(detail));
  throw ParseError(what, std::move(d));
}

const Json& field(const Json& doc, std::string_view name) {
  const auto it = doc.find(name);
  if (it == doc.end()) fail("missing field '" + std::string(name) + "'", "field");
  return *it;
}

std::size_t order_of(const Json& doc) {
  const Json& o = field(doc, "order");
  if (!o.is_number_unsigned() || o.get<std::uint64_t>() == 0) fail("'order' must be a positive integer", "order");
  const auto n = o.get<std::uint64_t>();
  if (n > 4096) fail("'order' is unreasonably large", "order");
  return static_cast<std::size_t>(n);
}

void expect_kind(const Json& doc, std::string_view kind) {
  if (!doc.is_object()) fail("document is not an object", "kind");
  if (kind_of(doc) != kind)
    fail("expected a '" + std::string(kind) + "' document, got '" + kind_of(doc) + "'", "kind");
}

std::vector<std::string> labels_of(const Json& doc, std::size_t n) {
  const auto it = doc.find("labels");
  if (it == doc.end()) return {};
  if (!it->is_array() || it->size() != n) fail("'labels' must be an array of " + std::to_string(n) + " strings", "labels");
  std::vector<std::string> out;
  for (const Json& l : *it) {
    if (!l.is_string()) fail("'labels' must contain strings", "labels");
    out.push_back(l.get<std::string>());
  }
  return out;
}

ElementId element_of(const Json& v, std::size_t n, std::string_view name) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
    fail("'" + std::string(name) + "' must be an element index below " + std::to_string(n), std::string(name));
  return static_cast<ElementId>(v.get<std::uint64_t>());
}

GroupTable group_or_throw(SquareTable t, std::vector<std::string> labels, std::string_view what) {
  try {
    return GroupTable::from_table(std::move(t), std::move(labels));
  } catch (const InvalidStructure& e) {
    throw ParseError(std::string(what) + ": " + e.what(), e.diagnostics());
  }
}

void write(std::string& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, item] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(k).dump() + ": ";
      write(out, item, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    const bool flat = std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      out += v.dump();
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += ",\n";
      out += inner;
      write(out, v[k], indent + 2);
    }
    out += "\n" + pad + "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

Json table_to_json(const SquareTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.order(); ++i) {
    const auto r = t.row(i);
    rows.push_back(Json(std::vector<ElementId>(r.begin(), r.end())));
  }
  return rows;
}

Json to_json(const GroupTable& g) {
  Json doc;
  doc["kind"] = "group";
  doc["order"] = g.order();
  doc["labels"] = g.labels();
  doc["table"] = table_to_json(g.table());
  return doc;
}

Json to_json(const NearBrace& nb) {
  Json doc;
  doc["kind"] = "nearbrace";
  doc["order"] = nb.order();
  doc["labels"] = nb.labels();
  doc["add"] = table_to_json(nb.add_group().table());
  doc["mul"] = table_to_json(nb.mul_group().table());
  return doc;
}

Json to_json(const SigmaFamily& fam) {
  Json doc;
  doc["kind"] = "sigma";
  doc["order"] = fam.sigma.order();
  doc["z"] = fam.z;
  doc["sigma"] = table_to_json(fam.sigma);
  return doc;
}

Json to_json(const ParamTriple& p) {
  return Json{{"z1", p.z1}, {"z2", p.z2}, {"xi", p.xi}, {"c1", p.c1}, {"c2", p.c2}};
}

Json to_json(const BraidMap& m, const std::optional<SolutionSummary>& summary, const PBraidingReport* pb) {
  Json doc;
  doc["kind"] = "solution";
  doc["order"] = m.order();
  doc["sigma"] = table_to_json(m.sigma);
  doc["tau"] = table_to_json(m.tau);
  if (m.params) doc["params"] = to_json(*m.params);
  if (summary) {
    Json r;
    r["braid"] = summary->braid;
    r["nondegenerate"] = summary->nondegenerate;
    r["involutive"] = summary->involutive;
    if (summary->p_braiding) r["p_braiding"] = *summary->p_braiding;
    doc["report"] = std::move(r);
  }
  if (pb && pb->f_factors && pb->g_factors)
    doc["p_braiding"] = Json{{"f", table_to_json(pb->f_table)}, {"g", table_to_json(pb->g_table)}};
  if (m.mul) doc["mul"] = table_to_json(*m.mul);
  return doc;
}

std::string serialize(const Json& doc) {
  std::string out;
  write(out, doc, 0);
  out += '\n';
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed document: ") + e.what(), "syntax");
  }
  return {};
}

std::string kind_of(const Json& doc) {
  const auto it = doc.find("kind");
  if (it == doc.end() || !it->is_string()) return {};
  return it->get<std::string>();
}

SquareTable table_from_json(const Json& rows, std::size_t n, std::string_view name) {
  const std::string f(name);
  if (!rows.is_array() || rows.size() != n) fail("'" + f + "' must have " + std::to_string(n) + " rows", f);
  SquareTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      fail("'" + f + "' row " + std::to_string(i) + " must have " + std::to_string(n) + " entries", f,
           {static_cast<ElementId>(i)});
    for (std::size_t j = 0; j < n; ++j) {
      const Json& v = row[j];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
        fail("'" + f + "' entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range", f,
             {static_cast<ElementId>(i), static_cast<ElementId>(j)});
      t(i, j) = static_cast<ElementId>(v.get<std::uint64_t>());
    }
  }
  return t;
}

GroupTable group_from_json(const Json& doc) {
  expect_kind(doc, "group");
  const std::size_t n = order_of(doc);
  return group_or_throw(table_from_json(field(doc, "table"), n, "table"), labels_of(doc, n), "invalid group table");
}

NearBrace near_brace_from_json(const Json& doc) {
  expect_kind(doc, "nearbrace");
  const std::size_t n = order_of(doc);
  auto labels = labels_of(doc, n);
  GroupTable add = group_or_throw(table_from_json(field(doc, "add"), n, "add"), labels, "invalid addition");
  GroupTable mul = group_or_throw(table_from_json(field(doc, "mul"), n, "mul"), labels, "invalid multiplication");
  try {
    return NearBrace::from_groups(std::move(add), std::move(mul));
  } catch (const InvalidStructure& e) {
    throw ParseError(std::string("invalid near brace: ") + e.what(), e.diagnostics());
  }
}

SigmaFamily sigma_family_from_json(const Json& doc) {
  expect_kind(doc, "sigma");
  const std::size_t n = order_of(doc);
  SigmaFamily fam{table_from_json(field(doc, "sigma"), n, "sigma"), element_of(field(doc, "z"), n, "z")};
  for (std::size_t x = 0; x < n; ++x)
    if (!fam.sigma.row_is_permutation(x))
      fail("sigma row " + std::to_string(x) + " is not a permutation", "sigma", {static_cast<ElementId>(x)});
  return fam;
}

BraidMap braid_map_from_json(const Json& doc) {
  expect_kind(doc, "solution");
  const std::size_t n = order_of(doc);
  BraidMap m;
  m.sigma = table_from_json(field(doc, "sigma"), n, "sigma");
  m.tau = table_from_json(field(doc, "tau"), n, "tau");
  if (const auto it = doc.find("params"); it != doc.end()) {
    if (!it->is_object()) fail("'params' must be an object", "params");
    ParamTriple p;
    p.z1 = element_of(field(*it, "z1"), n, "z1");
    p.z2 = element_of(field(*it, "z2"), n, "z2");
    p.xi = element_of(field(*it, "xi"), n, "xi");
    p.c1 = element_of(field(*it, "c1"), n, "c1");
    p.c2 = element_of(field(*it, "c2"), n, "c2");
    m.params = p;
  }
  if (const auto it = doc.find("mul"); it != doc.end())
    m.mul = group_or_throw(table_from_json(*it, n, "mul"), {}, "invalid multiplication").table();
  return m;
}

}  // namespace nearbrace::codec
