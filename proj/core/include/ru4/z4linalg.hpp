#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ru4/errors.hpp"

namespace ru4 {

using VecZ4 = std::vector<uint8_t>;  // entries 0..3

struct MatZ4 {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<uint8_t> data;  // row-major

  MatZ4() = default;
  MatZ4(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0) {}

  uint8_t& at(size_t r, size_t c) noexcept { return data[r * cols + c]; }
  uint8_t at(size_t r, size_t c) const noexcept { return data[r * cols + c]; }

  std::span<const uint8_t> row(size_t r) const noexcept {
    return {data.data() + r * cols, cols};
  }
  void append_row(std::span<const uint8_t> v) {
    data.insert(data.end(), v.begin(), v.end());
    ++rows;
  }
  bool operator==(const MatZ4&) const = default;
};

enum class PivotKind : uint8_t { Unit, Two };

/**
 * Row-reduced generator matrix of a Z4-module: k1 rows with a unit pivot
 * (scaled to 1) followed by k2 two-torsion rows with pivot entry 2. The
 * row space equals the input's and the module has exactly 4^k1 * 2^k2
 * elements. Pivoting is deterministic: the leftmost column holding a unit
 * in any unprocessed row, and only when no unit remains anywhere, the
 * leftmost column holding a 2.
 */
struct StandardForm {
  MatZ4 reduced;
  size_t k1 = 0;
  size_t k2 = 0;
  std::vector<size_t> pivot_cols;        // aligned with reduced rows
  std::vector<PivotKind> pivot_kinds;

  int log2_size() const noexcept { return int(2 * k1 + k2); }
  uint64_t size() const noexcept { return uint64_t(1) << log2_size(); }
};

StandardForm standard_form(const MatZ4& m);

// log2 of the module size, 2*k1 + k2.
inline int module_log2_size(const StandardForm& sf) { return sf.log2_size(); }

bool in_row_space(const StandardForm& sf, std::span<const uint8_t> v);

/**
 * Generator rows for the submodule {v in rowspace(m) : v[0..split) = 0},
 * returned as full-width rows. Used to carve torsion codes out of the
 * Z4^(2n) embedding.
 */
MatZ4 zero_prefix_kernel(const MatZ4& m, size_t split);

/**
 * Visits every row-space element exactly once, in mixed-radix counter
 * order over the pivot-row coefficients (base 4 for unit rows, base 2 for
 * two-torsion rows, row 0 fastest). Throws TooLargeError when the module
 * has more than 2^max_bits elements.
 */
void for_each_module_element(const StandardForm& sf, int max_bits,
                             const std::function<void(const VecZ4&)>& fn);

/**
 * Minimal number of R-module generators of the span, by Nakayama over the
 * local ring: log2|C| - log2|mC| with mC spanned by {2c, u c}. u_action
 * must implement multiplication by u in the caller's embedding. Throws
 * NotClosedError when the span is not invariant under u.
 */
int nakayama_generator_count(
    const MatZ4& gens, const std::function<VecZ4(std::span<const uint8_t>)>& u_action);

// JSON array-of-row-arrays rendering for debugging dumps.
std::string debug_json(const MatZ4& m);

}  // namespace ru4
