#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "cstkit/error.hpp"

namespace cstkit {

inline constexpr std::size_t kMaxVars = 18;

/// Exponent vector z^I. Ordered graded-lexicographically with z1 > z2 > ... > zn.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::span<const int> exponents) {
    if (exponents.size() > kMaxVars) fail(ErrorKind::ArityMismatch, "too many variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
  }
  Monomial(std::initializer_list<int> exponents) : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial variable(std::size_t i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](std::size_t i) const { return e_[i]; }
  int degree() const { return deg_; }

  void set(std::size_t i, int value) {
    if (i >= kMaxVars) fail(ErrorKind::ArityMismatch, "variable index out of range");
    if (value < 0 || value > 255) fail(ErrorKind::InvalidParameter, "exponent out of range: " + std::to_string(value));
    deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + value);
    e_[i] = static_cast<std::uint8_t>(value);
  }

  std::vector<int> exponents(std::size_t nvars) const {
    std::vector<int> v(nvars);
    for (std::size_t i = 0; i < nvars; ++i) v[i] = e_[i];
    return v;
  }

  /// Highest variable index with nonzero exponent plus one.
  std::size_t support_size() const {
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (e_[i]) return i + 1;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const int v = a.e_[i] + b.e_[i];
      if (v > 255) fail(ErrorKind::InvalidParameter, "exponent overflow");
      m.e_[i] = static_cast<std::uint8_t>(v);
    }
    m.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
    return m;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  /// other / *this, assuming divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = static_cast<std::uint8_t>(other.e_[i] - e_[i]);
    m.deg_ = static_cast<std::uint16_t>(other.deg_ - deg_);
    return m;
  }

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
    const int c = std::memcmp(a.e_.data(), b.e_.data(), kMaxVars);
    return c <=> 0;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
};

/// All monomials in nvars variables of total degree exactly k, in ascending graded-lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int k) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(nvars, 0);
  // enumerate compositions of k into nvars parts
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

/// Monomials of total degree <= k, ascending graded-lex.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, int k) {
  std::vector<Monomial> out;
  for (int d = 0; d <= k; ++d) {
    auto part = monomials_of_degree(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cstkit
