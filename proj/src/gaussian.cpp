#include "nearbrace/gaussian.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

#include "nearbrace/sampling.hpp"

namespace nearbrace::gaussian {

namespace {

bool is_odd(const mpz_class& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

QRational parse_component(std::string_view text, std::string_view whole) {
  QRational v = QRational::parse(text);
  if (!is_odd(v.denominator()))
    throw std::invalid_argument("'" + std::string(whole) + "': component " + v.to_string() +
                                " has an even denominator");
  return v;
}

std::string magnitude_times_i(const QRational& im) {
  const QRational mag = im.sign() < 0 ? -im : im;
  return mag == QRational(1) ? "i" : mag.to_string() + "i";
}

}  // namespace

QRational::QRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

QRational operator/(const QRational& a, const QRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return QRational(mpq_class(a.v_ / b.v_));
}

QRational QRational::parse(std::string_view text) {
  const std::string s = strip(text);
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  const std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(to),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits(pos, num_end) || (slash != std::string::npos && !digits(slash + 1, s.size())))
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  const std::size_t num_begin = s[0] == '+' ? 1 : 0;
  const mpz_class num(s.substr(num_begin, num_end - num_begin), 10);
  const mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(s.substr(slash + 1), 10);
  return QRational(num, den);
}

QGauss QGauss::parse(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_component(s, text), 0};

  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  const std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  else if (im_text == "-") im_text = "-1";
  return {re_text.empty() ? QRational(0) : parse_component(re_text, text), parse_component(im_text, text)};
}

std::string QGauss::to_string() const {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + magnitude_times_i(im);
  return re.to_string() + (im.sign() < 0 ? "-" : "+") + magnitude_times_i(im);
}

bool qoi_membership(const QGauss& v) {
  const mpz_class dr = v.re.denominator(), di = v.im.denominator();
  if (!is_odd(dr) || !is_odd(di)) return false;
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), dr.get_mpz_t(), di.get_mpz_t());
  const mpz_class m = v.re.numerator() * (d / dr);
  const mpz_class n = v.im.numerator() * (d / di);
  return is_odd(m + n);
}

QGauss qoi_mul(const QGauss& a, const QGauss& b) { return a * b; }

QGauss qoi_inv(const QGauss& a) {
  if (a.is_zero()) throw std::domain_error("0 has no multiplicative inverse");
  const QRational n = a.norm();
  return {a.re / n, -a.im / n};
}

QGauss qoi_add_i(const QGauss& a, const QGauss& b) { return a - QGauss::unit_i() + b; }

QGauss qoi_neg_i(const QGauss& a) { return QGauss{0, 2} - a; }

QGauss qoi_sub_i(const QGauss& a, const QGauss& b) { return qoi_add_i(a, qoi_neg_i(b)); }

std::vector<QoiParams> qoi_reference_params() {
  const QGauss i = QGauss::unit_i();
  return {
      {i, i, {-1, 0}},
      {i, -i, {1, 0}},
      {{5, 0}, {3, 0}, {15, 0}},
  };
}

QoiSigmaTau qoi_sigma_tau(const QoiParams& p, const QGauss& a, const QGauss& b) {
  const QGauss ab = qoi_mul(a, b);
  const QGauss sigma = qoi_add_i(qoi_sub_i(qoi_mul(ab, p.z1), qoi_mul(a, p.xi)), p.z2);
  return {sigma, qoi_mul(qoi_inv(sigma), ab)};
}

std::optional<QGauss> qoi_displayed_sigma(const QoiParams& p, const QGauss& a, const QGauss& b) {
  const auto ref = qoi_reference_params();
  const QGauss abi = a * b * QGauss::unit_i();
  auto same = [&](const QoiParams& q) { return p.z1 == q.z1 && p.z2 == q.z2 && p.xi == q.xi; };
  if (same(ref[0])) return qoi_add_i(abi, a);  // a.b.i +_i a
  if (same(ref[1])) return qoi_sub_i(abi, a);  // a.b.i -_i a
  if (same(ref[2])) return qoi_add_i(qoi_sub_i(a * b * QGauss{5, 0}, QGauss{15, 0} * a), QGauss{3, 0});
  return std::nullopt;
}

QGauss qoi_c1(const QoiParams& p, const QGauss& a) { return qoi_sub_i(a * p.z2 * p.z1, a * p.xi); }

QGauss qoi_c2(const QoiParams& p, const QGauss& a) { return qoi_add_i(qoi_neg_i(a * p.xi), a * p.z1 * p.z2); }

QoiSigmaTau qoi_inverse_sigma_tau(const QoiParams& p, const QGauss& x, const QGauss& y) {
  const QGauss hxi = qoi_inv(p.xi);
  const QGauss hz1 = p.z1 * hxi, hz2 = p.z2 * hxi;
  const QGauss xy = x * y;
  const QGauss sigma = qoi_add_i(qoi_sub_i(hz2, x * hxi), xy * hz1);
  return {sigma, qoi_inv(sigma) * xy};
}

std::vector<QGauss> qoi_sample(std::uint64_t seed, std::uint32_t bound, std::size_t count) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  SplitMix64 rng(seed);
  const auto b = static_cast<std::int64_t>(bound);
  std::vector<QGauss> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::int64_t rn = rng.between(-b, b), rd = 2 * rng.between(0, b) + 1;
    const std::int64_t in = rng.between(-b, b), id = 2 * rng.between(0, b) + 1;
    QGauss v{QRational(mpz_class(static_cast<long>(rn)), mpz_class(static_cast<long>(rd))),
             QRational(mpz_class(static_cast<long>(in)), mpz_class(static_cast<long>(id)))};
    if (qoi_membership(v)) out.push_back(std::move(v));
  }
  return out;
}

QoiBraidReport qoi_braid_check(const QoiParams& p, std::uint64_t seed, std::size_t count, SigmaForm form,
                               std::uint32_t bound) {
  QoiBraidReport r;
  const std::vector<QGauss> sample = qoi_sample(seed, bound, 3 * count);

  // Constancy first: a = 1, a = 3, then the sample.
  std::vector<QGauss> probes{{1, 0}, {3, 0}};
  probes.insert(probes.end(), sample.begin(), sample.begin() + static_cast<std::ptrdiff_t>(count));
  r.constancy = true;
  const QGauss c1 = qoi_c1(p, probes[0]), c2 = qoi_c2(p, probes[0]);
  for (const QGauss& a : probes) {
    const QGauss v1 = qoi_c1(p, a), v2 = qoi_c2(p, a);
    if (!(v1 == c1)) {
      r.constancy = false;
      r.constancy_witness = {"c1", probes[0].to_string(), a.to_string(), c1.to_string(), v1.to_string()};
      break;
    }
    if (!(v2 == c2)) {
      r.constancy = false;
      r.constancy_witness = {"c2", probes[0].to_string(), a.to_string(), c2.to_string(), v2.to_string()};
      break;
    }
  }
  if (!r.constancy) return r;
  r.c1 = c1;
  r.c2 = c2;

  using Pair = std::pair<QGauss, QGauss>;
  std::function<Pair(const QGauss&, const QGauss&)> rmap;
  if (form == SigmaForm::general) {
    rmap = [&](const QGauss& x, const QGauss& y) {
      auto st = qoi_sigma_tau(p, x, y);
      return Pair{std::move(st.sigma), std::move(st.tau)};
    };
  } else {
    if (!qoi_displayed_sigma(p, {1, 0}, {1, 0}))
      throw std::invalid_argument("no displayed form is recorded for these parameters");
    rmap = [&](const QGauss& x, const QGauss& y) {
      QGauss s = *qoi_displayed_sigma(p, x, y);
      QGauss t = qoi_inv(s) * x * y;
      return Pair{std::move(s), std::move(t)};
    };
  }

  r.closure = r.braid = r.multiplicative = r.inverse_identities = true;
  auto note = [&](bool& flag, std::vector<std::string> w) {
    if (flag && r.witness.empty()) r.witness = std::move(w);
    flag = false;
  };
  auto members = [&](std::initializer_list<const QGauss*> vs, const std::string& what) {
    for (const QGauss* v : vs)
      if (!qoi_membership(*v)) note(r.closure, {what, v->to_string()});
  };

  for (std::size_t k = 0; k < count; ++k) {
    const QGauss &x = sample[3 * k], &y = sample[3 * k + 1], &w = sample[3 * k + 2];
    ++r.triples;

    // (r x id)(id x r)(r x id) against (id x r)(r x id)(id x r)
    auto [a1, b1] = rmap(x, y);
    auto [b2, c2l] = rmap(b1, w);
    auto [a3, b3] = rmap(a1, b2);
    auto [q1, w1] = rmap(y, w);
    auto [x2, q2] = rmap(x, q1);
    auto [q3, w3] = rmap(q2, w1);
    members({&a1, &b1, &b2, &c2l, &a3, &b3, &q1, &w1, &x2, &q2, &q3, &w3}, "braid intermediate");
    if (!(a3 == x2 && b3 == q3 && c2l == w3))
      note(r.braid, {"braid", x.to_string(), y.to_string(), w.to_string(), a3.to_string(), b3.to_string(),
                     c2l.to_string(), x2.to_string(), q3.to_string(), w3.to_string()});

    auto [s, t] = rmap(x, y);
    if (!(s * t == x * y)) note(r.multiplicative, {"sigma.tau", x.to_string(), y.to_string()});

    if (form == SigmaForm::general) {
      const auto back = qoi_inverse_sigma_tau(p, s, t);
      if (!(back.sigma == x)) note(r.inverse_identities, {"inverse identity 1", x.to_string(), y.to_string()});
      if (!(back.tau == y)) note(r.inverse_identities, {"inverse identity 2", x.to_string(), y.to_string()});
      const auto hat = qoi_inverse_sigma_tau(p, x, y);
      members({&hat.sigma, &hat.tau}, "inverse map value");
      auto [u, v] = rmap(hat.sigma, hat.tau);
      if (!(u == x)) note(r.inverse_identities, {"inverse identity 3", x.to_string(), y.to_string()});
      if (!(v == y)) note(r.inverse_identities, {"inverse identity 4", x.to_string(), y.to_string()});
    }
  }

  // Local non-degeneracy: sigma_a and tau_a injective on the sampled points.
  r.nondegenerate_local = true;
  if (!sample.empty()) {
    const QGauss& a = sample.front();
    std::set<std::string> seen_sigma, seen_tau, seen_arg;
    for (const QGauss& b : sample) {
      if (!seen_arg.insert(b.to_string()).second) continue;
      const std::string s = rmap(a, b).first.to_string();
      const std::string t = rmap(b, a).second.to_string();
      if (!seen_sigma.insert(s).second || !seen_tau.insert(t).second) {
        note(r.nondegenerate_local, {"not injective", a.to_string(), b.to_string()});
        break;
      }
    }
  }
  return r;
}

}  // namespace nearbrace::gaussian
