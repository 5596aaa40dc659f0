#pragma once

// Internal bit-packed enumeration kernel for codeword scans. A codeword of
// length n over R is held in phi-coordinates: 2n Z4 digits (b_i, a_i+b_i),
// two bits per digit, so that the Lee weight is the plain Z4 Lee weight of
// the digit string and the Gray image is a per-byte table expansion with
// the same bit layout. Supports n <= 31 (62 digits, two 64-bit words).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ru4/errors.hpp"
#include "ru4/z4linalg.hpp"

namespace ru4::detail {

inline constexpr uint64_t kLaneLo = 0x5555555555555555ull;
inline constexpr uint64_t kLaneHi = 0xaaaaaaaaaaaaaaaaull;

struct PackedVec {
  std::array<uint64_t, 2> w{0, 0};

  bool is_zero() const noexcept { return (w[0] | w[1]) == 0; }
  bool operator==(const PackedVec&) const noexcept = default;
};

// Lane-wise addition mod 4 of 2-bit digits.
inline PackedVec padd(const PackedVec& x, const PackedVec& y) noexcept {
  PackedVec r;
  for (size_t k = 0; k < 2; ++k)
    r.w[k] = ((x.w[k] & kLaneLo) + (y.w[k] & kLaneLo)) ^
             ((x.w[k] ^ y.w[k]) & kLaneHi);
  return r;
}

// Sum of min(d, 4-d) over the four 2-bit digits of each byte pair; indexed
// by 16-bit chunks.
inline const uint8_t* lee16_table() {
  static const std::array<uint8_t, 65536> table = [] {
    std::array<uint8_t, 65536> t{};
    for (uint32_t v = 0; v < 65536; ++v) {
      int w = 0;
      for (int d = 0; d < 8; ++d) {
        const uint32_t digit = (v >> (2 * d)) & 3;
        w += digit < 2 ? int(digit) : int(4 - digit);
      }
      t[v] = uint8_t(w);
    }
    return t;
  }();
  return table.data();
}

inline int packed_lee_weight(const PackedVec& v, const uint8_t* lee16) noexcept {
  int w = 0;
  for (size_t k = 0; k < 2; ++k) {
    uint64_t x = v.w[k];
    w += lee16[x & 0xFFFF];
    w += lee16[(x >> 16) & 0xFFFF];
    w += lee16[(x >> 32) & 0xFFFF];
    w += lee16[(x >> 48) & 0xFFFF];
  }
  return w;
}

// psi on each 2-bit digit: 0,1,2,3 -> 00,10,11,01 (bit0 = beta, bit1 =
// gamma), applied byte-wise. The output bit layout equals the Gray-image
// bit order, and popcount equals the Lee weight.
inline const uint8_t* psi_byte_table() {
  static const std::array<uint8_t, 256> table = [] {
    constexpr std::array<uint8_t, 4> lane{0, 2, 3, 1};
    std::array<uint8_t, 256> t{};
    for (uint32_t v = 0; v < 256; ++v) {
      uint8_t o = 0;
      for (int d = 0; d < 4; ++d)
        o = uint8_t(o | (lane[(v >> (2 * d)) & 3] << (2 * d)));
      t[v] = o;
    }
    return t;
  }();
  return table.data();
}

inline PackedVec psi_expand(const PackedVec& v) noexcept {
  const uint8_t* t = psi_byte_table();
  PackedVec r;
  for (size_t k = 0; k < 2; ++k) {
    uint64_t x = v.w[k];
    uint64_t o = 0;
    for (int byte = 0; byte < 8; ++byte)
      o |= uint64_t(t[(x >> (8 * byte)) & 0xFF]) << (8 * byte);
    r.w[k] = o;
  }
  return r;
}

/**
 * A code basis packed for enumeration: rows in phi-coordinates plus the
 * mixed-radix digit layout matching for_each_module_element (row 0
 * fastest, base 4 for unit rows, base 2 for two-torsion rows).
 */
struct PackedCode {
  int n = 0;
  int log2size = 0;
  std::vector<PackedVec> rows;
  std::vector<uint8_t> radix;

  uint64_t total() const noexcept { return uint64_t(1) << log2size; }

  // sf must be the standard form of the Z4^(2n) embedding (a|b).
  static PackedCode build(const StandardForm& sf, int n) {
    if (n > 31)
      throw TooLargeError("packed kernel supports lengths up to 31, got n=" +
                          std::to_string(n));
    PackedCode pc;
    pc.n = n;
    pc.log2size = sf.log2_size();
    for (size_t r = 0; r < sf.reduced.rows; ++r) {
      PackedVec v;
      for (int i = 0; i < n; ++i) {
        const uint64_t b = sf.reduced.at(r, size_t(n + i));
        const uint64_t ab = (sf.reduced.at(r, size_t(i)) + b) & 3;
        const int d0 = 2 * i, d1 = 2 * i + 1;
        v.w[size_t(d0 >> 5)] |= b << (2 * (d0 & 31));
        v.w[size_t(d1 >> 5)] |= ab << (2 * (d1 & 31));
      }
      pc.rows.push_back(v);
      pc.radix.push_back(sf.pivot_kinds[r] == PivotKind::Unit ? 4 : 2);
    }
    return pc;
  }

  std::vector<uint8_t> digits_of(uint64_t idx) const {
    std::vector<uint8_t> d(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
      d[i] = uint8_t(idx % radix[i]);
      idx /= radix[i];
    }
    return d;
  }

  PackedVec at_index(uint64_t idx) const {
    const std::vector<uint8_t> d = digits_of(idx);
    PackedVec v;
    for (size_t i = 0; i < rows.size(); ++i)
      for (uint8_t k = 0; k < d[i]; ++k) v = padd(v, rows[i]);
    return v;
  }

  // Calls fn(idx, word) for idx in [lo, hi). Digit rollover is the
  // addition itself: four adds of a unit row or two of a two-torsion row
  // cancel mod 4, so each step is a handful of word ops.
  template <typename F>
  void scan(uint64_t lo, uint64_t hi, F&& fn) const {
    if (lo >= hi) return;
    std::vector<uint8_t> digit = digits_of(lo);
    PackedVec v = at_index(lo);
    for (uint64_t idx = lo;;) {
      fn(idx, v);
      if (++idx == hi) break;
      for (size_t i = 0;; ++i) {
        v = padd(v, rows[i]);
        if (++digit[i] < radix[i]) break;
        digit[i] = 0;
      }
    }
  }
};

// Minimum Lee weight over nonzero codewords; log2size must be >= 1.
int min_lee_weight_scan(const PackedCode& pc, int workers);

}  // namespace ru4::detail
