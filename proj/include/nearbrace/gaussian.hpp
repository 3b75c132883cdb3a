#pragma once

// Exact model of the infinite near brace Q(O(i)):
//   carrier   m/(2p+1) + n/(2q+1) i  with m + n odd
//   addition  a +_i b = a - i + b      (neutral i, negation 2i - a)
//   product   ordinary complex multiplication
//
// Membership is read off over the least common denominator D of the two
// reduced components, written M/D + N/D i: both denominators odd and M + N
// odd. Rescaling by an odd factor k multiplies M + N by k, which keeps its
// parity, so the test does not depend on the chosen representation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nearbrace::gaussian {

/// Reduced rational with arbitrary-precision numerator and positive denominator.
class QRational {
public:
  QRational() = default;
  QRational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  QRational(const mpz_class& num, const mpz_class& den);
  explicit QRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// "p" or "p/q" with optional sign.
  static QRational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] const mpq_class& value() const noexcept { return v_; }
  [[nodiscard]] std::string to_string() const { return v_.get_str(); }

  friend QRational operator+(const QRational& a, const QRational& b) { return QRational(mpq_class(a.v_ + b.v_)); }
  friend QRational operator-(const QRational& a, const QRational& b) { return QRational(mpq_class(a.v_ - b.v_)); }
  friend QRational operator*(const QRational& a, const QRational& b) { return QRational(mpq_class(a.v_ * b.v_)); }
  friend QRational operator/(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a) { return QRational(mpq_class(-a.v_)); }
  friend bool operator==(const QRational& a, const QRational& b) { return a.v_ == b.v_; }
  friend bool operator<(const QRational& a, const QRational& b) { return a.v_ < b.v_; }

private:
  mpq_class v_;
};

/// Gaussian rational re + im i.
struct QGauss {
  QRational re;
  QRational im;

  static QGauss unit_i() { return {0, 1}; }

  /// Complex literals: "i", "-i", "1", "-1", "15", "2/3+4/5i", "-2/3i", "1-i".
  /// Components are validated for odd reduced denominators.
  static QGauss parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] QGauss conj() const { return {re, -im}; }
  [[nodiscard]] QRational norm() const { return re * re + im * im; }
  [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend QGauss operator+(const QGauss& a, const QGauss& b) { return {a.re + b.re, a.im + b.im}; }
  friend QGauss operator-(const QGauss& a, const QGauss& b) { return {a.re - b.re, a.im - b.im}; }
  friend QGauss operator-(const QGauss& a) { return {-a.re, -a.im}; }
  friend QGauss operator*(const QGauss& a, const QGauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const QGauss& a, const QGauss& b) { return a.re == b.re && a.im == b.im; }
};

bool qoi_membership(const QGauss& v);

// Multiplicative group.
QGauss qoi_mul(const QGauss& a, const QGauss& b);
/// Throws std::domain_error for 0 (never a member).
QGauss qoi_inv(const QGauss& a);

// Additive group (neutral i).
QGauss qoi_add_i(const QGauss& a, const QGauss& b);
QGauss qoi_neg_i(const QGauss& a);
/// a -_i b = a +_i (-_i b) = a - b + i
QGauss qoi_sub_i(const QGauss& a, const QGauss& b);

struct QoiParams {
  QGauss z1, z2, xi;
};

/// The three parameter sets worked out for Q(O(i)).
std::vector<QoiParams> qoi_reference_params();

struct QoiSigmaTau {
  QGauss sigma, tau;
};

/// sigma = a.b.z1 -_i a.xi +_i z2,  tau = sigma^-1 . a . b.
QoiSigmaTau qoi_sigma_tau(const QoiParams& p, const QGauss& a, const QGauss& b);

/// Simplified display forms for the reference sets (1) and (2), which differ
/// from the expansion of the general formula by 2i; set (3) agrees with it.
/// nullopt for parameters that are not a reference set.
std::optional<QGauss> qoi_displayed_sigma(const QoiParams& p, const QGauss& a, const QGauss& b);

/// c1(a) = a.z2.z1 -_i a.xi,  c2(a) = -_i a.xi +_i a.z1.z2.
QGauss qoi_c1(const QoiParams& p, const QGauss& a);
QGauss qoi_c2(const QoiParams& p, const QGauss& a);

/// Inverse map with hxi = xi^-1, hz_k = z_k.xi^-1:
///   sigma^ = hz2 -_i x.hxi +_i x.y.hz1,  tau^ = sigma^^-1 . x . y.
QoiSigmaTau qoi_inverse_sigma_tau(const QoiParams& p, const QGauss& x, const QGauss& y);

/// Deterministic members: numerators in [-bound, bound], odd denominators in
/// [1, 2 bound + 1], drawn from SplitMix64(seed) and filtered by membership.
std::vector<QGauss> qoi_sample(std::uint64_t seed, std::uint32_t bound, std::size_t count);

enum class SigmaForm { general, displayed };

struct QoiBraidReport {
  bool constancy = false;
  std::optional<QGauss> c1, c2;
  std::vector<std::string> constancy_witness;  // "c1" or "c2", a1, a2, value1, value2

  std::size_t triples = 0;
  bool braid = false;
  bool multiplicative = false;      // sigma.tau = a.b
  bool nondegenerate_local = false;  // sigma_a, tau_a injective on the sample
  bool closure = false;              // every intermediate is a member
  bool inverse_identities = false;   // the four identities of the inverse pair
  std::vector<std::string> witness;  // first failure, exact strings

  [[nodiscard]] bool ok() const noexcept {
    return constancy && braid && multiplicative && nondegenerate_local && closure && inverse_identities;
  }
};

/// Samples `count` triples (and pairs) and evaluates everything exactly.
/// Constancy of c1, c2 is tested first on a = 1, a = 3 and sampled members;
/// if it fails no braid evaluation is attempted.
QoiBraidReport qoi_braid_check(const QoiParams& p, std::uint64_t seed, std::size_t count,
                               SigmaForm form = SigmaForm::general, std::uint32_t bound = 9);

}  // namespace nearbrace::gaussian
