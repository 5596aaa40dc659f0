#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ru4 {

/**
 * Z4: a residue mod 4.
 */
class Z4 {
 public:
  constexpr Z4() noexcept : v_(0) {}
  constexpr Z4(int v) noexcept : v_(static_cast<uint8_t>(((v % 4) + 4) % 4)) {}

  constexpr int value() const noexcept { return v_; }
  constexpr bool is_zero() const noexcept { return v_ == 0; }
  constexpr bool is_unit() const noexcept { return (v_ & 1) != 0; }

  static constexpr Z4 zero() noexcept { return Z4(0); }
  static constexpr Z4 one() noexcept { return Z4(1); }

  constexpr Z4 operator+(Z4 o) const noexcept { return Z4((v_ + o.v_) & 3); }
  constexpr Z4 operator-(Z4 o) const noexcept { return Z4((v_ - o.v_) & 3); }
  constexpr Z4 operator*(Z4 o) const noexcept { return Z4((v_ * o.v_) & 3); }
  constexpr Z4 operator-() const noexcept { return Z4((4 - v_) & 3); }
  constexpr bool operator==(const Z4&) const noexcept = default;

  // 1 and 3 are self-inverse; 0 and 2 have none.
  constexpr std::optional<Z4> inverse() const noexcept {
    if (!is_unit()) return std::nullopt;
    return *this;
  }

  // min(v, 4-v): 0,1,2,1 for 0,1,2,3.
  constexpr int lee_weight() const noexcept { return v_ < 2 ? v_ : 4 - v_; }

  friend std::ostream& operator<<(std::ostream& os, Z4 x) {
    return os << int(x.v_);
  }

 private:
  uint8_t v_;
};

/**
 * RElem: an element a + ub of R = Z4 + uZ4 with u^2 = 0.
 *
 * Stored packed as a | b<<2 so that the 16x16 multiplication table can be
 * indexed directly in the enumeration kernels.
 */
class RElem {
 public:
  constexpr RElem() noexcept : code_(0) {}
  constexpr RElem(Z4 a, Z4 b) noexcept
      : code_(static_cast<uint8_t>(a.value() | (b.value() << 2))) {}
  constexpr RElem(int a) noexcept : RElem(Z4(a), Z4(0)) {}

  static constexpr RElem from_code(uint8_t code) noexcept {
    RElem x;
    x.code_ = code & 0xF;
    return x;
  }
  static constexpr RElem u() noexcept { return RElem(Z4(0), Z4(1)); }
  static constexpr RElem zero() noexcept { return RElem(); }
  static constexpr RElem one() noexcept { return RElem(1); }

  constexpr Z4 a() const noexcept { return Z4(code_ & 3); }
  constexpr Z4 b() const noexcept { return Z4(code_ >> 2); }
  constexpr uint8_t code() const noexcept { return code_; }

  constexpr bool is_zero() const noexcept { return code_ == 0; }

  constexpr RElem operator+(RElem o) const noexcept {
    return RElem(a() + o.a(), b() + o.b());
  }
  constexpr RElem operator-(RElem o) const noexcept {
    return RElem(a() - o.a(), b() - o.b());
  }
  constexpr RElem operator-() const noexcept { return RElem(-a(), -b()); }
  // (a+ub)(c+ud) = ac + u(ad+bc) since u^2 = 0.
  constexpr RElem operator*(RElem o) const noexcept {
    return RElem(a() * o.a(), a() * o.b() + b() * o.a());
  }
  constexpr bool operator==(const RElem&) const noexcept = default;

  // a+ub is a unit iff a is a unit mod 4 (R is local).
  constexpr bool is_unit() const noexcept { return a().is_unit(); }

  // Inverse of a unit: a^-1 - u b a^-2. nullopt on the 8 non-units.
  constexpr std::optional<RElem> try_inverse() const noexcept {
    if (!is_unit()) return std::nullopt;
    const Z4 ai = a();  // self-inverse
    return RElem(ai, -(b() * ai * ai));
  }

  // w_L(a+ub) = w_L(b) + w_L(a+b), the Lee weight of (b, a+b) in Z4^2.
  constexpr int lee_weight() const noexcept {
    return b().lee_weight() + (a() + b()).lee_weight();
  }

  // Textual form "a:b"; bit-exact, locale-independent.
  std::string to_string() const {
    return std::to_string(a().value()) + ":" + std::to_string(b().value());
  }
  static RElem parse(const std::string& token);

  friend std::ostream& operator<<(std::ostream& os, RElem x) {
    return os << x.to_string();
  }

 private:
  uint8_t code_;
};

inline RElem RElem::parse(const std::string& token) {
  const auto colon = token.find(':');
  auto digit = [&](size_t at, size_t len) {
    const std::string part = token.substr(at, len);
    if (part.size() != 1 || part[0] < '0' || part[0] > '3')
      throw std::invalid_argument("RElem::parse: bad token '" + token +
                                  "' (want a:b with a,b in 0..3)");
    return part[0] - '0';
  };
  if (colon == std::string::npos)
    return RElem(Z4(digit(0, token.size())), Z4(0));
  return RElem(Z4(digit(0, colon)), Z4(digit(colon + 1, std::string::npos)));
}

inline constexpr std::array<RElem, 16> all_r_elements() noexcept {
  std::array<RElem, 16> out{};
  for (int c = 0; c < 16; ++c) out[c] = RElem::from_code(uint8_t(c));
  return out;
}

// The 16x16 multiplication table, indexed by packed codes.
inline constexpr std::array<std::array<uint8_t, 16>, 16> r_mul_table() noexcept {
  std::array<std::array<uint8_t, 16>, 16> t{};
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y)
      t[x][y] = (RElem::from_code(uint8_t(x)) * RElem::from_code(uint8_t(y))).code();
  return t;
}

inline constexpr auto kRMul = r_mul_table();

/**
 * The seven ideals of R: the six proper ones plus <1> = R itself, which
 * the CRT enumeration needs as an admissible per-factor choice.
 */
enum class IdealLabel : uint8_t {
  Zero,      // {0}
  One,       // <1> = R
  Two,       // <2>
  U,         // <u>
  TwoU,      // <2u>
  TwoPlusU,  // <2+u>
  TwoAndU,   // <2,u>, the unique maximal ideal
};

inline constexpr std::array<IdealLabel, 7> kAllIdealLabels{
    IdealLabel::Zero,     IdealLabel::One,  IdealLabel::Two,
    IdealLabel::U,        IdealLabel::TwoU, IdealLabel::TwoPlusU,
    IdealLabel::TwoAndU};

std::vector<RElem> ideal_generators(IdealLabel label);

// Element set, computed by closing the generators under + and R-multiples
// rather than hardcoded, so the tests can cross-check the listed subsets.
const std::vector<RElem>& ideal_elements(IdealLabel label);

bool ideal_contains(IdealLabel label, RElem x);

const char* ideal_label_name(IdealLabel label);
IdealLabel parse_ideal_label(const std::string& name);

}  // namespace ru4
