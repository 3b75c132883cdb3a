#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "nearbrace/codec.hpp"
#include "nearbrace/enumerate.hpp"
#include "nearbrace/gaussian.hpp"
#include "nearbrace/p_braiding.hpp"

namespace nearbrace::cli {

namespace {

using codec::Json;
namespace gs = gaussian;

/// Bad request: reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input, output, format = "structured";
  std::uint64_t seed = 42;
  std::size_t max_order = kMaxExhaustiveOrder;

  std::string group;
  ElementId kappa = 0;
  std::string z1, z2, xi;
  ElementId z = 0;
  std::optional<ElementId> zero;
  std::optional<std::size_t> limit;
  bool skew_only = false;
  bool print_labels = false;
  std::size_t samples = 200;
  std::uint32_t bound = 9;
};

std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json ids(const std::vector<ElementId>& v) { return Json(v); }

class Report {
public:
  explicit Report(std::string command) {
    doc_["command"] = std::move(command);
    doc_["inputs"] = Json::object();
    doc_["verdicts"] = Json::object();
  }

  void input(const std::string& name, Json value) { doc_["inputs"][name] = std::move(value); }

  /// A verdict that decides the exit code.
  void require(const std::string& name, bool ok) {
    doc_["verdicts"][name] = ok;
    if (!ok) failed_ = true;
  }
  /// Informational value, never affects the exit code.
  void info(const std::string& name, Json value) { doc_["verdicts"][name] = std::move(value); }

  void witness(const std::string& check, Json values, const std::string& detail = {}) {
    Json w{{"check", check}, {"witness", std::move(values)}};
    if (!detail.empty()) w["detail"] = detail;
    witnesses_.push_back(std::move(w));
  }
  void witnesses(const Diagnostics& d) {
    for (const Failure& f : d.failures) witness(f.check, ids(f.witness), f.detail);
  }
  void artifact(Json doc) { artifacts_.push_back(std::move(doc)); }
  void error(const std::string& message) { doc_["error"] = message; }

  [[nodiscard]] bool failed() const noexcept { return failed_; }

  [[nodiscard]] Json finish() const {
    Json out = doc_;
    out["witnesses"] = witnesses_;
    out["artifacts"] = artifacts_;
    return out;
  }

private:
  Json doc_;
  Json witnesses_ = Json::array();
  Json artifacts_ = Json::array();
  bool failed_ = false;
};

// ---------------------------------------------------------------------------
// Input handling

class Input {
public:
  Input(const Options& o, std::istream& in, Report& report) : opts_(o), in_(in), report_(report) {}

  /// The first document of the given kind: the input itself, or the first
  /// matching artifact when the input is a run report.
  Json document(std::string_view kind) {
    load();
    if (codec::kind_of(doc_) == kind) return doc_;
    if (doc_.is_object() && doc_.contains("artifacts") && doc_["artifacts"].is_array())
      for (const Json& a : doc_["artifacts"])
        if (codec::kind_of(a) == kind) return a;
    throw codec::ParseError("input does not contain a '" + std::string(kind) + "' document");
  }

  [[nodiscard]] std::string kind() {
    load();
    if (!codec::kind_of(doc_).empty()) return codec::kind_of(doc_);
    if (doc_.is_object() && doc_.contains("artifacts") && doc_["artifacts"].is_array() && !doc_["artifacts"].empty())
      return codec::kind_of(doc_["artifacts"][0]);
    return {};
  }

private:
  void load() {
    if (loaded_) return;
    std::string text;
    std::string name = "stdin";
    if (!opts_.input.empty() && opts_.input != "-") {
      std::ifstream f(opts_.input, std::ios::binary);
      if (!f) throw UsageError("cannot open input file '" + opts_.input + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
      name = opts_.input;
    } else {
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    }
    report_.input(name, fnv1a64(text));
    doc_ = codec::parse(text);
    loaded_ = true;
  }

  const Options& opts_;
  std::istream& in_;
  Report& report_;
  Json doc_;
  bool loaded_ = false;
};

ElementId element(const std::string& text, std::size_t n, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size()) throw UsageError(std::string(flag) + " expects an element index, got '" + text + "'");
  if (v >= n) throw UsageError(std::string(flag) + " = " + text + " is out of range for order " + std::to_string(n));
  return static_cast<ElementId>(v);
}

ParamTriple triple(const Options& o, std::size_t n) {
  return {element(o.z1, n, "--z1"), element(o.z2, n, "--z2"), element(o.xi, n, "--xi")};
}

gs::QGauss literal(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    gs::QGauss v = gs::QGauss::parse(text);
    if (!gs::qoi_membership(v)) throw UsageError(std::string(flag) + " = " + text + " is not a member of Q(O(i))");
    return v;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

GroupTable group_arg(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  try {
    return build_standard(o.group);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Shared report fragments

void add_check(Report& r, const std::string& name, const Check& c) {
  r.require(name, c.holds);
  if (!c.holds) r.witness(name, ids(c.witness));
}

SolutionReport report_solution(Report& r, const BraidMap& m, const PBraidingReport** pb_out = nullptr,
                               std::optional<PBraidingReport>* pb_store = nullptr) {
  std::optional<GroupTable> g;
  if (m.mul) g = GroupTable::from_table(*m.mul);
  SolutionReport s = g ? analyze_solution(m, *g) : analyze_solution(m);
  add_check(r, "c1", s.c1);
  add_check(r, "c2", s.c2);
  add_check(r, "c3", s.c3);
  add_check(r, "composed", s.composed);
  r.require("braid_ok", s.braid_ok);
  const Check yb = yang_baxter_form(m);
  r.require("yang_baxter_form", yb.holds);
  if (!yb.holds) r.witness("yang_baxter_form", ids(yb.witness));
  r.require("nondegenerate", s.nondegenerate.holds);
  if (!s.nondegenerate.holds)
    r.witness("nondegenerate", ids(s.nondegenerate.witness),
              s.nondegenerate.witness[0] == 0 ? "sigma_x not bijective" : "tau_y not bijective");
  r.info("involutive", s.involutive.holds);
  if (g) {
    const MultiplicativityCheck mc = check_multiplicativity(m, *g);
    r.require("multiplicative", mc.ok);
    if (!mc.ok) r.witness("multiplicative", ids(mc.witness));
    if (pb_store) {
      *pb_store = check_p_braiding(m, *g);
      s.p_braiding = (*pb_store)->verdict();
      if (pb_out) *pb_out = &**pb_store;
    } else {
      s.p_braiding = check_p_braiding(m, *g).verdict();
    }
    r.info("p_braiding", *s.p_braiding);
  }
  return s;
}

Json solution_artifact(const BraidMap& m, const SolutionReport& s, const PBraidingReport* pb) {
  return codec::to_json(m, codec::SolutionSummary{s.braid_ok, s.nondegenerate.holds, s.involutive.holds, s.p_braiding},
                        pb);
}

Json structural_json(const NearBrace& nb) {
  return Json{{"order", nb.order()}, {"zero", nb.zero()}, {"one", nb.one()}, {"is_skew", nb.is_skew()},
              {"is_singular", nb.is_singular()}, {"is_abelian", nb.is_abelian()}};
}

// ---------------------------------------------------------------------------
// Subcommands

using Handler = std::function<void(const Options&, Input&, Report&)>;

void group_build(const Options& o, Input&, Report& r) {
  const GroupTable g = group_arg(o);
  r.require("valid", validate_group(g.table()).ok());
  r.info("order", g.order());
  r.info("abelian", g.is_abelian());
  if (o.print_labels) {
    Json labels = Json::object();
    for (ElementId a = 0; a < g.order(); ++a) labels[std::to_string(a)] = g.label(a);
    r.info("labels", labels);
  }
  r.artifact(codec::to_json(g));
}

void group_validate(const Options&, Input& in, Report& r) {
  const Json doc = in.document("group");
  const auto it = doc.find("order");
  if (it == doc.end() || !it->is_number_unsigned()) throw codec::ParseError("'order' must be a positive integer");
  const SquareTable t = codec::table_from_json(doc.at("table"), it->get<std::size_t>(), "table");
  const Diagnostics d = validate_group(t);
  r.require("valid", d.ok());
  r.witnesses(d);
  if (d.ok()) r.artifact(codec::to_json(GroupTable::from_table(t)));
}

void brace_validate(const Options&, Input& in, Report& r) {
  const Json doc = in.document("nearbrace");
  const auto it = doc.find("order");
  if (it == doc.end() || !it->is_number_unsigned()) throw codec::ParseError("'order' must be a positive integer");
  const std::size_t n = it->get<std::size_t>();
  const SquareTable add = codec::table_from_json(doc.at("add"), n, "add");
  const SquareTable mul = codec::table_from_json(doc.at("mul"), n, "mul");
  const Diagnostics d = validate_near_brace(add, mul);
  r.require("valid", d.ok());
  r.witnesses(d);
  if (d.ok()) {
    const NearBrace nb = codec::near_brace_from_json(doc);
    r.info("structure", structural_json(nb));
    r.artifact(codec::to_json(nb));
  }
}

void brace_trivial(const Options& o, Input& in, Report& r) {
  const GroupTable g = o.group.empty() ? codec::group_from_json(in.document("group")) : group_arg(o);
  if (o.kappa >= g.order()) throw UsageError("--kappa out of range");
  if (!g.is_central(o.kappa)) throw UsageError("--kappa " + std::to_string(o.kappa) + " is not central");
  const NearBrace nb = trivial_near_brace(g, o.kappa);
  r.require("valid", validate_near_brace(nb.add_group(), nb.mul_group()).ok());
  r.info("structure", structural_json(nb));
  r.artifact(codec::to_json(nb));
}

void brace_from_sigma(const Options& o, Input& in, Report& r) {
  const SigmaFamily fam = codec::sigma_family_from_json(in.document("sigma"));
  const GroupTable g = group_arg(o);
  if (g.order() != fam.sigma.order()) throw UsageError("sigma and group orders differ");
  try {
    const NearBrace nb = addition_from_sigma(g, fam);
    r.require("near_brace", true);
    r.info("structure", structural_json(nb));
    r.artifact(codec::to_json(nb));
  } catch (const InvalidStructure& e) {
    r.require("near_brace", false);
    r.error(e.what());
    r.witnesses(e.diagnostics());
  }
}

void brace_shift(const Options& o, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  NearBrace out = nb;
  if (o.zero) {
    if (*o.zero >= nb.order()) throw UsageError("--zero out of range");
    if (!nb.is_skew()) throw UsageError("--zero needs a skew brace as input (0 = 1)");
    out = shift_by(nb, *o.zero);
  } else {
    out = shift_to_skew(nb);
  }
  r.require("valid", validate_near_brace(out.add_group(), out.mul_group()).ok());
  r.info("structure", structural_json(out));
  r.artifact(codec::to_json(out));
}

void brace_enumerate(const Options& o, Input&, Report& r) {
  const GroupTable g = group_arg(o);
  if (g.order() > o.max_order)
    throw UsageError("order " + std::to_string(g.order()) + " exceeds --max-order " + std::to_string(o.max_order));
  EnumerationOptions eo;
  eo.limit = o.limit;
  eo.skew_only = o.skew_only;
  eo.allow_large = o.max_order > kMaxExhaustiveOrder;
  const auto all = enumerate_near_braces(g, eo);
  std::size_t skew = 0, singular = 0;
  for (const NearBrace& nb : all) {
    skew += nb.is_skew();
    singular += nb.is_singular();
    r.artifact(codec::to_json(nb));
  }
  r.info("count", all.size());
  r.info("skew", skew);
  r.info("singular", singular);
  if (!o.limit && !o.skew_only) {
    EnumerationOptions so = eo;
    so.skew_only = true;
    r.require("shift_correspondence", all.size() == g.order() * count_near_braces(g, so));
  }
}

void brace_report(const Options&, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  const StructuralReport s = structural_report(nb);
  auto check = [&](const std::string& name, const IdentityCheck& c, bool required) {
    if (required) r.require(name, c.holds);
    else r.info(name, c.holds);
    if (!c.holds && required) r.witness(name, ids(c.witness));
  };
  check("distributivity", s.distributivity, true);
  r.info("is_skew", s.is_skew);
  r.info("is_singular", s.is_singular());
  check("negation_identity", s.negation_identity, true);
  check("ternary_distributivity", s.ternary_distributivity, true);
  const bool sing = s.is_singular();
  check("zero_mul_zero_is_neg_one", s.zero_mul_zero_is_neg_one, sing);
  check("one_plus_one_is_zero_inverse", s.one_plus_one_is_zero_inverse, sing);
  check("one_central_in_add", s.one_central_in_add, sing);
  check("zero_right_distributive", s.zero_right_distributive, false);
  r.require("consistent", s.consistent());
}

void params_list(const Options&, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  Json admissible = Json::array(), weak = Json::array();
  for (const ParamTriple& p : admissible_params(nb)) admissible.push_back(codec::to_json(p));
  for (const ParamTriple& p : weak_only_params(nb)) weak.push_back(codec::to_json(p));
  r.info("right_distributive", right_distributive_set(nb));
  r.info("admissible_count", admissible.size());
  r.info("weak_only_count", weak.size());
  r.artifact(Json{{"kind", "params"}, {"order", nb.order()}, {"admissible", admissible}, {"weak_only", weak}});
}

void params_check(const Options& o, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  const ParamTriple p = triple(o, nb.order());
  r.require("z1_right_distributive", is_right_distributive(nb, p.z1));
  r.require("z2_right_distributive", is_right_distributive(nb, p.z2));
  r.require("xi_right_distributive", is_right_distributive(nb, p.xi));
  const auto c = constants_for(nb, p.z1, p.z2, p.xi);
  if (const auto* k = std::get_if<Constants>(&c)) {
    r.require("constants", true);
    r.info("c1", k->c1);
    r.info("c2", k->c2);
  } else {
    const auto& nc = std::get<NonConstant>(c);
    r.require("constants", false);
    r.witness(nc.which == NonConstant::Which::c1 ? "c1" : "c2", Json{nc.a1, nc.a2, nc.value1, nc.value2},
              "values at a1 and a2 differ");
  }
  if (const auto full = make_params(nb, p.z1, p.z2, p.xi)) r.artifact(codec::to_json(*full));
}

void require_admissible(const NearBrace& nb, const ParamTriple& p, Report& r) {
  const bool ok = is_admissible(nb, p.z1, p.z2, p.xi);
  r.require("admissible", ok);
  if (!ok) r.witness("admissible", Json{p.z1, p.z2, p.xi}, "parameters are not admissible for this near brace");
}

void solve_build(const Options& o, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  const ParamTriple p = triple(o, nb.order());
  require_admissible(nb, p, r);
  if (r.failed()) return;
  const BraidMap m = build_solution(nb, p);
  std::optional<PBraidingReport> pb;
  const PBraidingReport* pbp = nullptr;
  const SolutionReport s = report_solution(r, m, &pbp, &pb);
  r.artifact(solution_artifact(m, s, pbp));
}

void solve_analyze(const Options&, Input& in, Report& r) {
  const BraidMap m = codec::braid_map_from_json(in.document("solution"));
  report_solution(r, m);
}

void solve_invert(const Options& o, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  const ParamTriple p = triple(o, nb.order());
  require_admissible(nb, p, r);
  if (r.failed()) return;
  const BraidMap m = build_solution(nb, p), w = build_inverse(nb, p);
  const InversePairCheck ic = verify_inverse_pair(m, w);
  r.require("inverse_pair", ic.ok);
  if (!ic.ok) r.witness("inverse_identity_" + std::to_string(ic.identity), ids(ic.witness));
  const InverseParams h = inverse_params(nb, p);
  r.info("inverse_params", Json{{"hz1", h.hz1}, {"hz2", h.hz2}, {"hxi", h.hxi}});
  const SolutionReport s = analyze_solution(w);
  r.require("inverse_braid_ok", s.braid_ok);
  BraidMap out = w;
  out.params.reset();
  r.artifact(solution_artifact(out, s, nullptr));
}

void solve_gv(const Options&, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  if (!nb.is_skew()) throw UsageError("the GV solution needs a skew brace (0 = 1)");
  const BraidMap m = gv_solution(nb);
  const SolutionReport s = report_solution(r, m);
  r.artifact(solution_artifact(m, s, nullptr));
}

void solve_rump(const Options&, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  if (!nb.is_skew() || !nb.is_abelian()) throw UsageError("rump needs a brace (0 = 1 and abelian addition)");
  const RumpReport rr = rump_check(nb);
  r.require("sigma_matches", rr.sigma_matches);
  r.require("braid_ok", rr.braid_ok);
  r.require("nondegenerate", rr.nondegenerate);
  r.require("involutive", rr.involutive);
}

void solve_twist(const Options& o, Input& in, Report& r) {
  const NearBrace nb = codec::near_brace_from_json(in.document("nearbrace"));
  if (nb.order() > kMaxTwistOrder) throw UsageError("twist search is limited to order <= 5");
  if (o.z >= nb.order()) throw UsageError("--z out of range");
  const TwistResult t = twist_search(nb, o.z);
  r.info("found", t.map.has_value());
  r.info("bijective", t.bijective);
  r.info("nodes_visited", t.nodes_visited);
  if (t.map) r.info("map", *t.map);
  // A map can only exist when 0 = 1.
  r.require("no_map_unless_skew", nb.is_skew() || !t.map);
}

void pbraid_check(const Options& o, Input& in, Report& r) {
  BraidMap m;
  std::optional<NearBrace> nb;
  if (in.kind() == "nearbrace") {
    nb = codec::near_brace_from_json(in.document("nearbrace"));
    const ParamTriple p = triple(o, nb->order());
    require_admissible(*nb, p, r);
    if (r.failed()) return;
    m = build_solution(*nb, p);
  } else {
    m = codec::braid_map_from_json(in.document("solution"));
    if (!m.mul) throw UsageError("the solution document carries no 'mul' table");
  }
  const GroupTable g = GroupTable::from_table(*m.mul);
  const PBraidingReport pb = check_p_braiding(m, g);
  r.require("nondegenerate", pb.nondegenerate);
  r.require("multiplicative", pb.multiplicative_ok);
  if (!pb.multiplicative_ok) r.witness("multiplicative", ids(pb.multiplicative_witness));
  r.require("f_factors", pb.f_factors);
  if (!pb.f_factors) r.witness("f_factors", ids(pb.f_witness), "two triples share (x.y, w)");
  r.require("g_factors", pb.g_factors);
  if (!pb.g_factors) r.witness("g_factors", ids(pb.g_witness), "two triples share (x, y.w)");
  r.require("f_second_coordinate", pb.f_second_coordinate);
  r.require("g_second_coordinate", pb.g_second_coordinate);
  r.require("f_bijective", pb.f_bijective);
  r.require("g_bijective", pb.g_bijective);
  r.require("p_braiding", pb.verdict());
  const bool braid = analyze_solution(m).braid_ok;
  r.info("braid_ok", braid);
  if (pb.verdict()) r.require("p_braiding_implies_braid", braid);
  if (nb && m.params) {
    const ClosedFormFG cf = closed_form_fg(*nb, *m.params);
    r.require("closed_form_f", cf.f == pb.f_table);
    r.require("closed_form_g", cf.g == pb.g_table);
  }
  SolutionReport s;
  s.braid_ok = braid;
  s.nondegenerate.holds = pb.nondegenerate;
  s.p_braiding = pb.verdict();
  r.artifact(solution_artifact(m, s, &pb));
}

Json qoi_json(const gs::QoiBraidReport& q) {
  Json j;
  j["constancy"] = q.constancy;
  if (q.c1) j["c1"] = q.c1->to_string();
  if (q.c2) j["c2"] = q.c2->to_string();
  j["triples"] = q.triples;
  j["braid"] = q.braid;
  j["multiplicative"] = q.multiplicative;
  j["nondegenerate_local"] = q.nondegenerate_local;
  j["closure"] = q.closure;
  return j;
}

void qoi_check(const Options& o, Input&, Report& r) {
  const gs::QoiParams p{literal(o.z1, "--z1"), literal(o.z2, "--z2"), literal(o.xi, "--xi")};
  r.input("params", Json{{"z1", p.z1.to_string()}, {"z2", p.z2.to_string()}, {"xi", p.xi.to_string()}});
  r.input("seed", o.seed);
  const gs::QoiBraidReport q = gs::qoi_braid_check(p, o.seed, o.samples, gs::SigmaForm::general, o.bound);
  r.require("constancy", q.constancy);
  if (!q.constancy) {
    const auto& w = q.constancy_witness;
    r.witness(w[0], Json{{"a1", w[1]}, {"a2", w[2]}, {"value1", w[3]}, {"value2", w[4]}}, "constant differs");
    return;
  }
  r.info("c1", q.c1->to_string());
  r.info("c2", q.c2->to_string());
  r.info("triples", q.triples);
  r.require("braid", q.braid);
  r.require("multiplicative", q.multiplicative);
  r.require("nondegenerate_local", q.nondegenerate_local);
  r.require("closure", q.closure);
  r.require("inverse_identities", q.inverse_identities);
  if (!q.witness.empty()) r.witness(q.witness.front(), Json(std::vector<std::string>(q.witness.begin() + 1, q.witness.end())));
  if (gs::qoi_displayed_sigma(p, {1, 0}, {1, 0})) {
    const gs::QoiBraidReport d = gs::qoi_braid_check(p, o.seed, o.samples, gs::SigmaForm::displayed, o.bound);
    r.info("displayed_form", qoi_json(d));
  }
}

void qoi_sample(const Options& o, Input&, Report& r) {
  if (o.bound < 1) throw UsageError("--bound must be at least 1");
  Json values = Json::array();
  bool members = true;
  for (const gs::QGauss& v : gs::qoi_sample(o.seed, o.bound, o.samples)) {
    values.push_back(v.to_string());
    members = members && gs::qoi_membership(v);
  }
  r.require("membership", members);
  r.artifact(Json{{"kind", "qoi_sample"}, {"seed", o.seed}, {"bound", o.bound}, {"values", values}});
}

// ---------------------------------------------------------------------------
// Text rendering

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_table(std::ostream& os, const std::string& name, const Json& rows) {
  os << "    " << name << ":\n";
  for (const Json& row : rows) {
    os << "     ";
    for (const Json& v : row) os << ' ' << std::setw(2) << v.get<std::uint64_t>();
    os << '\n';
  }
}

void render_text(std::ostream& os, const Json& report, double millis) {
  os << "command: " << report["command"].get<std::string>() << '\n';
  for (const auto& [name, digest] : report["inputs"].items()) os << "input: " << name << ' ' << scalar(digest) << '\n';
  if (report.contains("error")) os << "error: " << report["error"].get<std::string>() << '\n';
  for (const auto& [name, v] : report["verdicts"].items()) os << name << ": " << scalar(v) << '\n';
  for (const Json& w : report["witnesses"]) {
    os << "witness " << w["check"].get<std::string>() << ' ' << w["witness"].dump();
    if (w.contains("detail")) os << "  " << w["detail"].get<std::string>();
    os << '\n';
  }
  for (const Json& a : report["artifacts"]) {
    os << "artifact " << codec::kind_of(a);
    if (a.contains("order")) os << " (order " << a["order"].dump() << ")";
    os << '\n';
    for (const char* t : {"table", "add", "mul", "sigma", "tau"})
      if (a.contains(t) && a[t].is_array()) render_table(os, t, a[t]);
    if (a.contains("values"))
      for (const Json& v : a["values"]) os << "    " << v.get<std::string>() << '\n';
  }
  os << "time: " << std::fixed << std::setprecision(1) << millis << " ms\n";
}

struct Leaf {
  std::string path;
  Handler run;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Near braces, multi-parametric Yang-Baxter solutions and p-braidings", "nearbrace"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--input", o.input, "Read the input document from FILE instead of stdin");
  app.add_option("--output", o.output, "Write the report to FILE instead of stdout");
  app.add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--max-order", o.max_order, "Largest order accepted by exhaustive commands");

  std::vector<std::pair<CLI::App*, Leaf>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    leaves.push_back({sub, Leaf{parent->get_name() + " " + name, std::move(h)}});
    return sub;
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--z1", o.z1, "Parameter z1");
    sub->add_option("--z2", o.z2, "Parameter z2");
    sub->add_option("--xi", o.xi, "Parameter xi");
  };

  CLI::App* group = app.add_subcommand("group", "Finite groups as Cayley tables");
  group->require_subcommand(1);
  auto* gb = leaf(group, "build", "Build a standard group", group_build);
  gb->add_option("--group", o.group, "Family, e.g. cyclic:4, dihedral:8, symmetric:3, quaternion, cyclic:2*cyclic:2");
  gb->add_flag("--print-labels", o.print_labels, "List element indices with their labels");
  leaf(group, "validate", "Check the group axioms of a table", group_validate);

  CLI::App* brace = app.add_subcommand("brace", "Near braces");
  brace->require_subcommand(1);
  leaf(brace, "validate", "Check a near brace document", brace_validate);
  auto* bt = leaf(brace, "trivial", "a + b = a.kappa^-1.b for a central kappa", brace_trivial);
  bt->add_option("--group", o.group, "Group family (or read a group document)");
  bt->add_option("--kappa", o.kappa, "Central element index");
  auto* bs = leaf(brace, "from-sigma", "Addition y + x = x.sigma_{x^-1}(y.z).z^-1", brace_from_sigma);
  bs->add_option("--group", o.group, "Multiplicative group family");
  auto* bsh = leaf(brace, "shift", "Shift to the skew brace a - 1 + b, or from one with --zero", brace_shift);
  bsh->add_option("--zero", o.zero, "New zero t: a - t + b (input must be skew)");
  auto* be = leaf(brace, "enumerate", "All near braces on a group of order <= 8", brace_enumerate);
  be->add_option("--group", o.group, "Group family");
  be->add_option("--limit", o.limit, "Keep the first N results");
  be->add_flag("--skew-only", o.skew_only, "Only additions with 0 = 1");
  leaf(brace, "report", "Structural identities", brace_report);

  CLI::App* par = app.add_subcommand("params", "Right-distributive elements and admissible parameters");
  par->require_subcommand(1);
  leaf(par, "list", "All admissible triples", params_list);
  params(leaf(par, "check", "Check one triple", params_check));

  CLI::App* solve = app.add_subcommand("solve", "Braid solutions");
  solve->require_subcommand(1);
  params(leaf(solve, "build", "sigma_a(b) = a.b.z1 - a.xi + z2", solve_build));
  leaf(solve, "analyze", "Braid, non-degeneracy, involutivity of a solution document", solve_analyze);
  params(leaf(solve, "invert", "Inverse map and the four inverse identities", solve_invert));
  leaf(solve, "gv", "sigma_a(b) = -a + a.b on a skew brace", solve_gv);
  leaf(solve, "rump", "p = (1,1,1) on a brace against x.y - x", solve_rump);
  leaf(solve, "twist", "Exhaustive twist map search (order <= 5)", solve_twist)
      ->add_option("--z", o.z, "Deformation element");

  CLI::App* pb = app.add_subcommand("pbraid", "p-braidings");
  pb->require_subcommand(1);
  params(leaf(pb, "check", "p-braiding conditions and f/g tables", pbraid_check));

  CLI::App* qoi = app.add_subcommand("qoi", "The near brace Q(O(i)) in exact arithmetic");
  qoi->require_subcommand(1);
  auto* qc = leaf(qoi, "check", "Constancy and sampled braid check", qoi_check);
  params(qc);
  qc->add_option("--samples", o.samples, "Number of sampled triples");
  qc->add_option("--bound", o.bound, "Numerator bound for samples");
  auto* qs = leaf(qoi, "sample", "Deterministic sample of members", qoi_sample);
  qs->add_option("--samples", o.samples, "Number of values");
  qs->add_option("--bound", o.bound, "Numerator bound");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Leaf* chosen = nullptr;
  for (const auto& [sub, l] : leaves)
    if (sub->parsed()) chosen = &l;
  if (!chosen) {
    err << "no command given\n";
    return 2;
  }

  Report report(chosen->path);
  Input input(o, in, report);
  int code = 0;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    chosen->run(o, input, report);
    code = report.failed() ? 1 : 0;
  } catch (const codec::ParseError& e) {
    report.error(e.what());
    report.witnesses(e.diagnostics());
    err << "nearbrace: " << e.what() << '\n';
    code = 2;
  } catch (const InvalidStructure& e) {
    report.error(e.what());
    report.witnesses(e.diagnostics());
    err << "nearbrace: " << e.what() << '\n';
    code = 2;
  } catch (const UsageError& e) {
    report.error(e.what());
    err << "nearbrace: " << e.what() << '\n';
    code = 2;
  } catch (const std::invalid_argument& e) {
    report.error(e.what());
    err << "nearbrace: " << e.what() << '\n';
    code = 2;
  }
  const double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  const Json doc = report.finish();
  std::ostringstream text;
  if (o.format == "text") render_text(text, doc, millis);
  else text << codec::serialize(doc);

  if (!o.output.empty() && o.output != "-") {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "nearbrace: cannot write '" << o.output << "'\n";
      return 2;
    }
    f << text.str();
  } else {
    out << text.str();
  }
  return code;
}

}  // namespace nearbrace::cli
