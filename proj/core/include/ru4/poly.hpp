#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ru4/ring.hpp"

namespace ru4 {

/**
 * F2: the binary field.
 */
class F2 {
 public:
  constexpr F2() noexcept : v_(0) {}
  constexpr F2(int v) noexcept : v_(static_cast<uint8_t>(v & 1)) {}

  constexpr int value() const noexcept { return v_; }
  constexpr bool is_zero() const noexcept { return v_ == 0; }
  constexpr bool is_unit() const noexcept { return v_ == 1; }

  static constexpr F2 zero() noexcept { return F2(0); }
  static constexpr F2 one() noexcept { return F2(1); }

  constexpr F2 operator+(F2 o) const noexcept { return F2(v_ ^ o.v_); }
  constexpr F2 operator-(F2 o) const noexcept { return F2(v_ ^ o.v_); }
  constexpr F2 operator*(F2 o) const noexcept { return F2(v_ & o.v_); }
  constexpr F2 operator-() const noexcept { return *this; }
  constexpr bool operator==(const F2&) const noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, F2 x) {
    return os << int(x.v_);
  }

 private:
  uint8_t v_;
};

template <typename T>
concept CoefficientRing = requires(T a, T b) {
  { T() } -> std::same_as<T>;
  { T::zero() } -> std::same_as<T>;
  { T::one() } -> std::same_as<T>;
  { a + b } -> std::same_as<T>;
  { a - b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { -a } -> std::same_as<T>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
};

/**
 * Dense polynomial with ascending coefficients over F2, Z4 or R.
 *
 * Normalized form never stores trailing zeros; the zero polynomial has an
 * empty coefficient vector and degree() == kNegInfDegree.
 */
template <CoefficientRing T>
class Poly {
 public:
  static constexpr int kNegInfDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly({T::one()}); }
  static Poly x() { return Poly({T::zero(), T::one()}); }
  // x^k
  static Poly monomial(int k, T coeff = T::one()) {
    std::vector<T> c(size_t(k) + 1, T::zero());
    c.back() = coeff;
    return Poly(std::move(c));
  }
  // x^n - 1
  static Poly xn_minus_1(int n) {
    std::vector<T> c(size_t(n) + 1, T::zero());
    c[0] = -T::one();
    c.back() = T::one();
    return Poly(std::move(c));
  }

  int degree() const noexcept { return int(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == T::one(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  // Coefficient of x^i, zero beyond the stored degree.
  T coeff(size_t i) const noexcept { return i < c_.size() ? c_[i] : T::zero(); }
  T leading() const noexcept { return c_.empty() ? T::zero() : c_.back(); }

  bool operator==(const Poly&) const = default;

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T::zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T::zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<T> r(c_);
    for (T& v : r) v = -v;
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<T> r(c_.size() + o.c_.size() - 1, T::zero());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly operator*(T s) const {
    std::vector<T> r(c_);
    for (T& v : r) v = v * s;
    return Poly(std::move(r));
  }

  // Substitute -x for x.
  Poly negate_variable() const {
    std::vector<T> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly(std::move(r));
  }

  /**
   * Exact long division by a monic divisor. Throws std::invalid_argument
   * on a non-monic divisor.
   */
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (!d.is_monic())
      throw std::invalid_argument("Poly::divmod: divisor must be monic");
    std::vector<T> rem(c_);
    const int dd = d.degree();
    if (int(rem.size()) - 1 < dd) return {Poly(), *this};
    std::vector<T> quo(rem.size() - size_t(dd), T::zero());
    for (int i = int(rem.size()) - 1; i >= dd; --i) {
      const T q = rem[size_t(i)];
      if (q.is_zero()) continue;
      quo[size_t(i - dd)] = q;
      for (int j = 0; j <= dd; ++j)
        rem[size_t(i - dd + j)] = rem[size_t(i - dd + j)] - q * d.c_[size_t(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  bool divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }

  // Reduce mod x^n - 1 by folding coefficient i onto i mod n.
  Poly mod_xn_minus_1(int n) const {
    std::vector<T> r(size_t(n), T::zero());
    for (size_t i = 0; i < c_.size(); ++i) {
      const size_t k = i % size_t(n);
      r[k] = r[k] + c_[i];
    }
    return Poly(std::move(r));
  }

  // Coefficients padded with zeros to exactly n entries.
  std::vector<T> padded(int n) const {
    std::vector<T> r(c_);
    r.resize(size_t(n), T::zero());
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return to_token(T::zero());
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += to_token(c_[i]);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
  }

 private:
  static std::string to_token(F2 v) { return std::to_string(v.value()); }
  static std::string to_token(Z4 v) { return std::to_string(v.value()); }
  static std::string to_token(RElem v) { return v.to_string(); }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

using PolyF2 = Poly<F2>;
using PolyZ4 = Poly<Z4>;
using PolyR = Poly<RElem>;

// ---- conversions between coefficient rings ----

inline PolyF2 reduce_mod2(const PolyZ4& p) {
  std::vector<F2> c;
  c.reserve(p.coeffs().size());
  for (Z4 v : p.coeffs()) c.emplace_back(v.value());
  return PolyF2(std::move(c));
}

inline PolyZ4 lift_01(const PolyF2& p) {
  std::vector<Z4> c;
  c.reserve(p.coeffs().size());
  for (F2 v : p.coeffs()) c.emplace_back(v.value());
  return PolyZ4(std::move(c));
}

// a-part embedding Z4[x] -> R[x].
inline PolyR to_r(const PolyZ4& p) {
  std::vector<RElem> c;
  c.reserve(p.coeffs().size());
  for (Z4 v : p.coeffs()) c.emplace_back(v, Z4(0));
  return PolyR(std::move(c));
}

// u * p, landing in the b-part.
inline PolyR times_u(const PolyZ4& p) {
  std::vector<RElem> c;
  c.reserve(p.coeffs().size());
  for (Z4 v : p.coeffs()) c.emplace_back(Z4(0), v);
  return PolyR(std::move(c));
}

// Coefficient-wise image mod u (the a-part).
inline PolyZ4 residue_mod_u(const PolyR& p) {
  std::vector<Z4> c;
  c.reserve(p.coeffs().size());
  for (RElem v : p.coeffs()) c.push_back(v.a());
  return PolyZ4(std::move(c));
}

// ---- parsing (CLI/JSON text forms) ----

PolyZ4 parse_poly_z4(const std::string& text);
PolyR parse_poly_r(const std::string& text);
// Polynomials separated by ';'.
std::vector<PolyR> parse_generator_list(const std::string& text);

}  // namespace ru4
