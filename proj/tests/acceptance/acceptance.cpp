// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "nearbrace/enumerate.hpp"
#include "nearbrace/gaussian.hpp"
#include "nearbrace/p_braiding.hpp"
#include "nearbrace/parameters.hpp"
#include "nearbrace/solutions.hpp"
#include "oracle.hpp"

using namespace nearbrace;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && s >= limit_s) o.fail("over the time limit");
  if (!o.ok) ++failures;
  std::printf("%s %d %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, s, limit_s,
              o.note.empty() ? "" : ": ", o.note.c_str());
  std::fflush(stdout);
}

std::string where(const NearBrace& nb, const ParamTriple& p) {
  return "order " + std::to_string(nb.order()) + " p = (" + std::to_string(p.z1) + "," + std::to_string(p.z2) +
         "," + std::to_string(p.xi) + ")";
}

/// Every enumerated near brace of order <= 6 with its admissible triples.
struct Case {
  NearBrace nb;
  std::vector<ParamTriple> params;
};

std::vector<Case> scan() {
  std::vector<Case> out;
  for (const std::string& spec : standard_catalogue(6))
    for (NearBrace& nb : enumerate_near_braces(build_standard(spec))) {
      auto ps = admissible_params(nb);
      out.push_back({std::move(nb), std::move(ps)});
    }
  return out;
}

/// Both sides tabulated independently of the p-braiding code:
///   s_a(s_b(c))          = a.b.c.z1.z1 - a.b.xi.z1 + c1 + z2
///   s_a(b).s_{t_b(a)}(c) = a.b.c.z1 + c2 - a.xi.z2 + z2.z2
bool identities_2_3(const NearBrace& nb, const ParamTriple& p, const BraidMap& m) {
  const std::size_t n = nb.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c) {
        const ElementId abc = nb.times(a, b, c);
        const ElementId rhs2 =
            nb.plus(nb.plus(nb.minus(nb.times(abc, p.z1, p.z1), nb.times(a, b, nb.times(p.xi, p.z1))), p.c1), p.z2);
        if (m.sigma(a, m.sigma(b, c)) != rhs2) return false;
        const ElementId lhs3 = nb.times(m.sigma(a, b), m.sigma(m.tau(b, a), c));
        const ElementId rhs3 =
            nb.plus(nb.minus(nb.plus(nb.times(abc, p.z1), p.c2), nb.times(a, p.xi, p.z2)), nb.times(p.z2, p.z2));
        if (lhs3 != rhs3) return false;
      }
  return true;
}

}  // namespace

int main() {
  report(1, "trivial near braces on groups of order <= 8", 1, [] {
    Outcome o;
    std::size_t n = 0;
    for (const std::string& spec : standard_catalogue(8)) {
      const GroupTable g = build_standard(spec);
      for (ElementId kappa : g.center()) {
        const NearBrace nb = trivial_near_brace(g, kappa);
        ++n;
        const std::string at = spec + " kappa " + std::to_string(kappa);
        if (!validate_near_brace(nb.add_group(), nb.mul_group()).ok()) o.fail(at + " not a near brace");
        if (!nb.is_singular()) o.fail(at + " not singular");
        if (nb.zero() != kappa) o.fail(at + " zero is not kappa");
        const StructuralReport r = structural_report(nb);
        if (!r.zero_mul_zero_is_neg_one.holds) o.fail(at + " 0.0 != -1");
        if (!r.one_plus_one_is_zero_inverse.holds) o.fail(at + " 1+1 != 0^-1");
        if (!r.one_central_in_add.holds) o.fail(at + " a+1 != 1+a");
        // direct evaluation, independent of the report
        const ElementId z = nb.zero(), e = nb.one();
        if (nb.times(z, z) != nb.neg(e)) o.fail(at + " direct 0.0");
        if (nb.plus(e, e) != nb.inv(z)) o.fail(at + " direct 1+1");
        for (ElementId a = 0; a < nb.order(); ++a)
          if (nb.plus(a, e) != nb.plus(e, a)) o.fail(at + " direct a+1");
      }
    }
    o.note = o.ok ? std::to_string(n) + " near braces" : o.note;
    return o;
  });

  report(2, "enumeration counts and shift correspondence", 60, [] {
    Outcome o;
    const std::size_t c2 = enumerate_near_braces(cyclic(2)).size();
    if (c2 != 2) o.fail("cyclic(2) gives " + std::to_string(c2));
    for (const std::string& spec : standard_catalogue(6)) {
      const GroupTable g = build_standard(spec);
      EnumerationOptions skew;
      skew.skew_only = true;
      const std::size_t total = count_near_braces(g), s = count_near_braces(g, skew);
      if (total != g.order() * s)
        o.fail(spec + ": " + std::to_string(total) + " != " + std::to_string(g.order()) + " x " + std::to_string(s));
    }
    return o;
  });

  const auto t_scan = std::chrono::steady_clock::now();
  const std::vector<Case> cases = scan();
  const double scan_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_scan).count();
  std::size_t solutions = 0;
  for (const Case& c : cases) solutions += c.params.size();

  report(3, "solutions of order <= 6", 300 - scan_s, [&] {
    Outcome o;
    std::size_t non_singular = 0;
    for (const Case& c : cases) {
      const GroupTable& g = c.nb.mul_group();
      for (const ParamTriple& p : c.params) {
        const BraidMap m = build_solution(c.nb, p);
        const SolutionReport r = analyze_solution(m, g);  // throws if C1-C3 and composition disagree
        if (!r.braid_ok || !r.composed.holds) o.fail(where(c.nb, p) + " braid");
        if (!oracle::braid_holds(m)) o.fail(where(c.nb, p) + " braid oracle");
        if (!r.nondegenerate.holds) o.fail(where(c.nb, p) + " degenerate");
        if (!check_multiplicativity(m, g).ok) o.fail(where(c.nb, p) + " sigma.tau != a.b");
        if (yang_baxter_form(m).holds != r.braid_ok) o.fail(where(c.nb, p) + " YBE form disagrees");
        if (!identities_2_3(c.nb, p, m)) o.fail(where(c.nb, p) + " identities (2), (3)");
      }
      if (!c.params.empty() && !c.nb.is_singular()) ++non_singular;
    }
    if (o.ok)
      o.note = std::to_string(cases.size()) + " near braces, " + std::to_string(solutions) + " solutions, " +
               std::to_string(non_singular) + " non-singular with solutions";
    return o;
  });

  report(4, "inverse pair for every solution of criterion 3", 300 - scan_s, [&] {
    Outcome o;
    for (const Case& c : cases)
      for (const ParamTriple& p : c.params) {
        const InverseParams h = inverse_params(c.nb, p);
        if (h.hxi != c.nb.inv(p.xi) || h.hz1 != c.nb.times(p.z1, h.hxi) || h.hz2 != c.nb.times(p.z2, h.hxi))
          o.fail(where(c.nb, p) + " inverse parameters");
        const InversePairCheck ic = verify_inverse_pair(build_solution(c.nb, p), build_inverse(c.nb, p));
        if (!ic.ok) o.fail(where(c.nb, p) + " identity " + std::to_string(ic.identity));
      }
    return o;
  });

  report(5, "p-braidings and closed-form f, g", 300 - scan_s, [&] {
    Outcome o;
    for (const Case& c : cases)
      for (const ParamTriple& p : c.params) {
        const BraidMap m = build_solution(c.nb, p);
        const PBraidingReport pb = check_p_braiding(m, c.nb.mul_group());
        if (!pb.verdict()) o.fail(where(c.nb, p) + " not a p-braiding");
        const ClosedFormFG cf = closed_form_fg(c.nb, p);
        if (cf.f != pb.f_table || cf.g != pb.g_table) o.fail(where(c.nb, p) + " closed form");
        if (pb.verdict() && !analyze_solution(m).braid_ok) o.fail(where(c.nb, p) + " p-braiding without braid");
      }
    return o;
  });

  report(6, "flip, conjugation and GV reductions", 1, [] {
    Outcome o;
    {
      const NearBrace b = trivial_near_brace(cyclic(4), 0);
      const BraidMap m = build_solution(b, *make_params(b, b.one(), b.one(), b.one()));
      for (ElementId x = 0; x < 4; ++x)
        for (ElementId y = 0; y < 4; ++y) {
          if (m.apply(x, y) != std::pair{y, x}) o.fail("cyclic(4) is not the flip");
          if (m.sigma(x, y) != b.minus(b.times(x, y), x)) o.fail("cyclic(4) differs from x.y - x");
        }
      const RumpReport rr = rump_check(b);
      if (!rr.sigma_matches || !rr.braid_ok || !rr.involutive || !rr.nondegenerate) o.fail("rump_check");
    }
    const NearBrace s3 = trivial_near_brace(symmetric(3), 0);
    {
      const BraidMap m = build_solution(s3, *make_params(s3, s3.one(), s3.one(), s3.one()));
      for (ElementId x = 0; x < 6; ++x)
        for (ElementId y = 0; y < 6; ++y)
          if (m.sigma(x, y) != s3.times(x, y, s3.inv(x))) o.fail("symmetric(3) is not conjugation");
      const SolutionReport r = analyze_solution(m);
      if (!r.braid_ok || !r.nondegenerate.holds || r.involutive.holds) o.fail("conjugation properties");
    }
    {
      const SolutionReport r = analyze_solution(gv_solution(s3));
      if (!r.braid_ok || r.involutive.holds) o.fail("GV on symmetric(3)");
    }
    return o;
  });

  report(7, "twist maps on near braces of order <= 4", 120, [] {
    Outcome o;
    std::size_t searched = 0;
    for (const std::string& spec : standard_catalogue(4))
      for (const NearBrace& nb : enumerate_near_braces(build_standard(spec)))
        for (ElementId z = 0; z < nb.order(); ++z) {
          const TwistResult t = twist_search(nb, z);
          ++searched;
          if (!nb.is_skew() && t.map) o.fail(spec + " z " + std::to_string(z) + ": map with 0 != 1");
          if (nb.is_skew()) {
            std::vector<ElementId> id(nb.order());
            std::iota(id.begin(), id.end(), ElementId{0});
            if (!t.map || *t.map != id) o.fail(spec + " z " + std::to_string(z) + ": identity not found");
          }
        }
    if (o.ok) o.note = std::to_string(searched) + " searches";
    return o;
  });

  report(8, "Q(O(i)) exact checks, seed 42", 30, [] {
    using namespace gaussian;
    Outcome o;
    const std::vector<QGauss> s = qoi_sample(42, 9, 2000);
    for (std::size_t k = 0; k < 1000; ++k) {
      const QGauss &a = s[2 * k], &b = s[2 * k + 1];
      if (!qoi_membership(qoi_mul(a, b)) || !qoi_membership(qoi_inv(a)) || !qoi_membership(qoi_add_i(a, b)) ||
          !qoi_membership(qoi_neg_i(a)))
        o.fail("closure fails at " + a.to_string() + ", " + b.to_string());
    }
    const QGauss i = QGauss::unit_i();
    for (const QoiParams& p : qoi_reference_params()) {
      const std::string name = "(" + p.z1.to_string() + "," + p.z2.to_string() + "," + p.xi.to_string() + ")";
      for (const QGauss& a : qoi_sample(42, 9, 100))
        if (qoi_c1(p, a) != i || qoi_c2(p, a) != i) o.fail(name + " constant at " + a.to_string());
      const QoiBraidReport r = qoi_braid_check(p, 42, 200);
      if (r.triples != 200) o.fail(name + " triple count");
      if (!r.ok()) o.fail(name + " braid check");
      if (r.c1 != i || r.c2 != i) o.fail(name + " c1, c2 != i");
    }
    return o;
  });

  report(9, "coincidence lemmas over the scan", 300 - scan_s, [&] {
    Outcome o;
    std::size_t applicable = 0;
    for (const Case& c : cases) {
      std::map<std::vector<ElementId>, std::vector<const ParamTriple*>> buckets;
      for (const ParamTriple& p : c.params) {
        const SquareTable t = sigma_table(c.nb, p.z1, p.z2, p.xi);
        std::vector<ElementId> key;
        for (ElementId a = 0; a < c.nb.order(); ++a)
          for (ElementId b = 0; b < c.nb.order(); ++b) key.push_back(t(a, b));
        buckets[key].push_back(&p);
      }
      for (const auto& [key, ps] : buckets)
        for (std::size_t u = 0; u < ps.size(); ++u)
          for (std::size_t v = u; v < ps.size(); ++v) {
            const CoincidenceReport r = sigma_coincidence_check(c.nb, *ps[u], *ps[v]);
            if (!r.tables_equal) o.fail(where(c.nb, *ps[u]) + " bucket mismatch");
            if (r.kind == CoincidenceReport::Kind::unrelated) continue;
            ++applicable;
            if (!r.identity_holds.value_or(false)) o.fail(where(c.nb, *ps[u]) + " vs " + where(c.nb, *ps[v]));
          }
    }
    if (applicable == 0) o.fail("no pair to which a lemma applies");
    if (o.ok) o.note = std::to_string(applicable) + " coinciding pairs";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
