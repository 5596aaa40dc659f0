#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ru4/ring.hpp"

namespace ru4 {

/**
 * The 2-adic table behind the classical Z4 Gray map: c = alpha(c) + 2beta(c)
 * and alpha + beta + gamma = 0 mod 2.
 *
 *   c : 0 1 2 3
 *   a : 0 1 0 1
 *   b : 0 0 1 1
 *   g : 0 1 1 0
 */
struct GrayTable {
  static constexpr std::array<uint8_t, 4> alpha{0, 1, 0, 1};
  static constexpr std::array<uint8_t, 4> beta{0, 0, 1, 1};
  static constexpr std::array<uint8_t, 4> gamma{0, 1, 1, 0};
};

// psi(c) = (beta(c), gamma(c)): 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0).
constexpr std::array<uint8_t, 2> psi(Z4 c) noexcept {
  return {GrayTable::beta[size_t(c.value())],
          GrayTable::gamma[size_t(c.value())]};
}

// phi(a+ub) = (b, a+b).
constexpr std::array<Z4, 2> phi_r_to_z4pair(RElem x) noexcept {
  return {x.b(), x.a() + x.b()};
}

/**
 * A fixed-length bit word; bit 0 is coordinate 0. Text form is an
 * unseparated 0/1 string with the leftmost character being bit 0.
 */
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(int nbits)
      : nbits_(nbits), w_(size_t((nbits + 63) / 64), 0) {}

  int size() const noexcept { return nbits_; }
  bool bit(int i) const noexcept {
    return (w_[size_t(i) >> 6] >> (size_t(i) & 63)) & 1;
  }
  void set_bit(int i, bool v) noexcept {
    const uint64_t mask = uint64_t(1) << (size_t(i) & 63);
    if (v)
      w_[size_t(i) >> 6] |= mask;
    else
      w_[size_t(i) >> 6] &= ~mask;
  }

  int hamming_weight() const noexcept;
  BinaryWord operator^(const BinaryWord& o) const;
  bool operator==(const BinaryWord&) const = default;
  bool operator<(const BinaryWord& o) const {
    return nbits_ != o.nbits_ ? nbits_ < o.nbits_ : w_ < o.w_;
  }

  const std::vector<uint64_t>& words() const noexcept { return w_; }

  std::string to_string() const;
  static BinaryWord from_string(const std::string& bits);

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

// Phi(a+ub) = (beta(b), gamma(b), beta(a+b), gamma(a+b)).
BinaryWord Phi(RElem x);

// Blockwise extension of Phi to R^n; output length 4n.
BinaryWord Phi_vec(std::span<const RElem> v);

// Inverse of the extension; Phi is a bijection of R onto all 16 4-bit
// words, so every word of length divisible by 4 decodes.
std::vector<RElem> Phi_vec_inverse(const BinaryWord& w);

// Cyclic shift: (c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2}).
std::vector<RElem> sigma(std::span<const RElem> v);

// 4-quasi-cyclic shift of a binary word: rotation by 4 positions in the
// same direction as sigma. Length must be a positive multiple of 4.
BinaryWord nu(const BinaryWord& w);

int lee_weight_vec(std::span<const RElem> v);
int hamming_weight(const BinaryWord& w);
int hamming_distance(const BinaryWord& w1, const BinaryWord& w2);

}  // namespace ru4
