#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// An element of conductor N is stored by its coordinates in the power basis
// 1, zeta_N, ..., zeta_N^(phi(N)-1), reduced modulo the cyclotomic polynomial
// Phi_N. That representation is unique, so equality is coordinate equality.
// Conductor 1 is the rational field and mixes freely with every conductor;
// any other pair of distinct conductors must be lifted explicitly.

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "cstkit/error.hpp"
#include "cstkit/rational.hpp"

namespace cstkit {

namespace detail {

inline std::atomic<int>& conductor_cap_storage() {
  static std::atomic<int> cap{360};
  return cap;
}

using IntPoly = std::vector<std::int64_t>;  // low degree first

// Exact quotient of integer polynomials with monic divisor.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

inline IntPoly cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

/// Per-conductor tables. Instances live for the whole program.
struct CycloField {
  int conductor = 1;
  int degree = 1;  // phi(conductor)
  IntPoly modulus;  // Phi_N, monic
  // powers[k] = zeta_N^k reduced mod Phi_N, for k in [0, N).
  std::vector<std::vector<std::int64_t>> powers;

  explicit CycloField(int n) : conductor(n) {
    modulus = cyclotomic_polynomial(n);
    degree = static_cast<int>(modulus.size()) - 1;
    powers.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(degree), 0));
    std::vector<std::int64_t> cur(static_cast<std::size_t>(degree), 0);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
      powers[static_cast<std::size_t>(k)] = cur;
      // multiply by x, then reduce x^degree
      std::int64_t top = cur[static_cast<std::size_t>(degree - 1)];
      for (int i = degree - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < degree; ++i) cur[static_cast<std::size_t>(i)] -= top * modulus[static_cast<std::size_t>(i)];
    }
  }
};

inline const CycloField& cyclo_field(int n) {
  if (n < 1) fail(ErrorKind::InvalidParameter, "conductor must be positive, got " + std::to_string(n));
  if (n > conductor_cap_storage().load())
    fail(ErrorKind::ConductorTooLarge,
         "conductor " + std::to_string(n) + " exceeds cap " + std::to_string(conductor_cap_storage().load()));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[n];
  if (!slot) slot = std::make_unique<CycloField>(n);
  return *slot;
}

}  // namespace detail

inline int conductor_cap() { return detail::conductor_cap_storage().load(); }
inline void set_conductor_cap(int cap) {
  if (cap < 1) fail(ErrorKind::InvalidParameter, "conductor cap must be positive");
  detail::conductor_cap_storage().store(cap);
}

inline int euler_phi(int n) { return detail::cyclo_field(n).degree; }

class Cyclotomic {
 public:
  Cyclotomic() : field_(&detail::cyclo_field(1)), c_(1) {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& q) : field_(&detail::cyclo_field(1)), c_{q} { c_[0].canonicalize(); }  // NOLINT

  static Cyclotomic zero(int conductor) {
    Cyclotomic x;
    x.field_ = &detail::cyclo_field(conductor);
    x.c_.assign(static_cast<std::size_t>(x.field_->degree), Rational(0));
    return x;
  }

  static Cyclotomic rational(const Rational& q, int conductor) {
    Cyclotomic x = zero(conductor);
    x.c_[0] = q;
    x.c_[0].canonicalize();
    return x;
  }

  /// zeta_N^k, with k taken modulo N.
  static Cyclotomic zeta_power(int conductor, long long k) {
    Cyclotomic x = zero(conductor);
    const long long n = conductor;
    const auto& pw = x.field_->powers[static_cast<std::size_t>(((k % n) + n) % n)];
    for (std::size_t i = 0; i < pw.size(); ++i) x.c_[i] = static_cast<long>(pw[i]);
    return x;
  }

  /// Coordinates in the power basis; length phi(N).
  static Cyclotomic from_coefficients(int conductor, std::vector<Rational> coeffs) {
    Cyclotomic x = zero(conductor);
    if (coeffs.size() > x.c_.size()) {
      // reduce higher powers of zeta
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) x += coeffs[k] * zeta_power(conductor, static_cast<long long>(k));
      return x;
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      x.c_[k] = coeffs[k];
      x.c_[k].canonicalize();
    }
    return x;
  }

  int conductor() const { return field_->conductor; }
  int degree() const { return field_->degree; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }
  /// The rational value; only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  /// Same element written in Q(zeta_M); requires N | M.
  Cyclotomic lift(int m) const {
    const int n = conductor();
    if (m <= 0 || m % n != 0)
      fail(ErrorKind::ConductorMismatch, std::to_string(n) + " does not divide " + std::to_string(m));
    if (m == n) return *this;
    Cyclotomic out = zero(m);
    const int step = m / n;
    const auto& field = *out.field_;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const auto& pw = field.powers[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(m)];
      for (std::size_t i = 0; i < pw.size(); ++i)
        if (pw[i] != 0) out.c_[i] += c_[k] * static_cast<long>(pw[i]);
    }
    return out;
  }

  /// Image under zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    if (is_rational()) return *this;
    Cyclotomic out = zero(conductor());
    const int n = conductor();
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const auto& pw = field_->powers[(static_cast<std::size_t>(n) - k) % static_cast<std::size_t>(n)];
      for (std::size_t i = 0; i < pw.size(); ++i)
        if (pw[i] != 0) out.c_[i] += c_[k] * static_cast<long>(pw[i]);
    }
    return out;
  }

  std::complex<double> approx() const {
    std::complex<double> z{0.0, 0.0};
    const double n = conductor();
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
      z += c_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
  }

  Cyclotomic inverse() const;

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    if (align(o)) {
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else {
      c_[0] += o.c_[0];
    }
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    if (align(o)) {
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    } else {
      c_[0] -= o.c_[0];
    }
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) {
    *this = *this / o;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_rational()) return a.scaled(b.c_[0], b.conductor());
    if (a.is_rational()) return b.scaled(a.c_[0], a.conductor());
    if (a.conductor() != b.conductor()) mismatch(a, b);
    const auto& field = *a.field_;
    const std::size_t deg = static_cast<std::size_t>(field.degree);
    std::vector<Rational> tmp(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j)
        if (b.c_[j] != 0) tmp[i + j] += a.c_[i] * b.c_[j];
    }
    Cyclotomic out = zero(field.conductor);
    for (std::size_t i = 0; i < deg; ++i) out.c_[i] = std::move(tmp[i]);
    const std::size_t n = static_cast<std::size_t>(field.conductor);
    for (std::size_t k = deg; k < tmp.size(); ++k) {
      if (tmp[k] == 0) continue;
      const auto& pw = field.powers[k % n];
      for (std::size_t i = 0; i < deg; ++i)
        if (pw[i] != 0) out.c_[i] += tmp[k] * static_cast<long>(pw[i]);
    }
    return out;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero cyclotomic");
    if (b.is_rational()) return a.scaled(1 / b.c_[0], b.conductor());
    if (!a.is_rational() && a.conductor() != b.conductor()) mismatch(a, b);
    return a * b.inverse();
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() == b.conductor()) return a.c_ == b.c_;
    const int m = std::lcm(a.conductor(), b.conductor());
    return a.lift(m).c_ == b.lift(m).c_;
  }

  std::string to_string() const;

 private:
  // Brings *this to the conductor of o when *this is rational. Returns false when o is
  // rational and *this is not (only the constant coordinate needs updating).
  bool align(const Cyclotomic& o) {
    if (conductor() == o.conductor()) return true;
    if (o.conductor() == 1) return false;
    if (conductor() == 1) {
      Rational r = c_[0];
      *this = rational(r, o.conductor());
      return true;
    }
    mismatch(*this, o);
  }

  Cyclotomic scaled(const Rational& q, int other_conductor) const {
    Cyclotomic out = *this;
    if (other_conductor != 1 && conductor() == 1) out = rational(c_[0], other_conductor);
    if (q == 0) {
      for (auto& x : out.c_) x = 0;
    } else if (q != 1) {
      for (auto& x : out.c_)
        if (x != 0) x *= q;
    }
    return out;
  }

  [[noreturn]] static void mismatch(const Cyclotomic& a, const Cyclotomic& b) {
    fail(ErrorKind::ConductorMismatch,
         "conductors " + std::to_string(a.conductor()) + " and " + std::to_string(b.conductor()));
  }

  const detail::CycloField* field_;
  std::vector<Rational> c_;
};

inline Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return rational(1 / c_[0], conductor());
  // Solve (multiplication-by-this) x = 1 over Q.
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (std::size_t k = 0; k < d; ++k) {
    Cyclotomic col = *this * zeta_power(conductor(), static_cast<long long>(k));
    for (std::size_t i = 0; i < d; ++i) m[i][k] = col.c_[i];
  }
  m[0][d] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) fail(ErrorKind::InternalInconsistency, "singular multiplication matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j <= d; ++j) m[col][j] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j <= d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  Cyclotomic out = zero(conductor());
  for (std::size_t i = 0; i < d; ++i) out.c_[i] = m[i][d];
  return out;
}

/// Renders as `c0 + c1*z(N)^1 + ...`; a rational prints as itself.
inline std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    const bool neg = q < 0;
    const Rational mag = neg ? Rational(-q) : q;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z(" + std::to_string(conductor()) + ")^" + std::to_string(k);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

/// A primitive k-th root of unity inside Q(zeta_N): zeta_N^(N/k).
inline Cyclotomic cyc_root_of_unity(int k, int conductor) {
  if (k <= 0 || conductor <= 0 || conductor % k != 0)
    fail(ErrorKind::ConductorMismatch, std::to_string(k) + " does not divide " + std::to_string(conductor));
  return Cyclotomic::zeta_power(conductor, conductor / k);
}

/// Lifts both operands to the lcm of their conductors.
inline std::pair<Cyclotomic, Cyclotomic> unify(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = std::lcm(a.conductor(), b.conductor());
  return {a.lift(m), b.lift(m)};
}

}  // namespace cstkit
