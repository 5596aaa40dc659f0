#include "ru4/z4linalg.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ru4 {

namespace {

bool vec_is_zero(const VecZ4& v) {
  return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

// v -= s * r (mod 4)
void sub_scaled(VecZ4& v, const VecZ4& r, uint8_t s) {
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = uint8_t((v[i] + 4 * s - s * r[i]) & 3);
}

VecZ4 doubled(const VecZ4& r) {
  VecZ4 d(r.size());
  for (size_t i = 0; i < r.size(); ++i) d[i] = uint8_t((2 * r[i]) & 3);
  return d;
}

struct Eliminated {
  std::vector<VecZ4> rows;
  std::vector<size_t> pivot_cols;
  std::vector<PivotKind> kinds;
  std::vector<size_t> groups;  // group index that fixed each row
};

// Gaussian elimination over Z4 with grouped column priority: within each
// column group, exhaust unit pivots first, then two-pivots. When a
// two-pivot row is not two-torsion, its double is fed back so later
// groups still see the full span.
Eliminated eliminate(std::vector<VecZ4> remaining,
                     std::span<const std::pair<size_t, size_t>> groups) {
  Eliminated out;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const auto [lo, hi] = groups[gi];
    // unit pass
    for (;;) {
      size_t pc = hi, pr = 0;
      for (size_t r = 0; r < remaining.size() && pc > lo; ++r)
        for (size_t c = lo; c < pc; ++c)
          if (remaining[r][c] & 1) {
            pc = c;
            pr = r;
            break;
          }
      if (pc == hi) break;
      VecZ4 row = std::move(remaining[pr]);
      remaining.erase(remaining.begin() + long(pr));
      if (row[pc] == 3)
        for (uint8_t& x : row) x = uint8_t((3 * x) & 3);  // scale to pivot 1
      for (VecZ4& f : out.rows)
        if (f[pc]) sub_scaled(f, row, f[pc]);
      for (VecZ4& s : remaining)
        if (s[pc]) sub_scaled(s, row, s[pc]);
      out.rows.push_back(std::move(row));
      out.pivot_cols.push_back(pc);
      out.kinds.push_back(PivotKind::Unit);
      out.groups.push_back(gi);
    }
    // two pass; remaining rows now have entries in {0,2} on this group's
    // columns
    for (;;) {
      size_t pc = hi, pr = 0;
      for (size_t r = 0; r < remaining.size() && pc > lo; ++r)
        for (size_t c = lo; c < pc; ++c)
          if (remaining[r][c] == 2) {
            pc = c;
            pr = r;
            break;
          }
      if (pc == hi) break;
      VecZ4 row = std::move(remaining[pr]);
      remaining.erase(remaining.begin() + long(pr));
      VecZ4 twice = doubled(row);
      if (!vec_is_zero(twice)) remaining.push_back(std::move(twice));
      for (VecZ4& f : out.rows)
        if (f[pc] >= 2) sub_scaled(f, row, 1);
      for (VecZ4& s : remaining)
        if (s[pc] == 2) sub_scaled(s, row, 1);
      out.rows.push_back(std::move(row));
      out.pivot_cols.push_back(pc);
      out.kinds.push_back(PivotKind::Two);
      out.groups.push_back(gi);
    }
  }
  for (const VecZ4& s : remaining) {
    (void)s;
    assert(vec_is_zero(s));
  }
  return out;
}

std::vector<VecZ4> rows_of(const MatZ4& m) {
  std::vector<VecZ4> rows;
  rows.reserve(m.rows);
  for (size_t r = 0; r < m.rows; ++r)
    rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

}  // namespace

StandardForm standard_form(const MatZ4& m) {
  const std::pair<size_t, size_t> whole{0, m.cols};
  Eliminated e = eliminate(rows_of(m), {&whole, 1});
  StandardForm sf;
  sf.reduced = MatZ4(0, m.cols);
  for (size_t i = 0; i < e.rows.size(); ++i) {
    sf.reduced.append_row(e.rows[i]);
    sf.pivot_cols.push_back(e.pivot_cols[i]);
    sf.pivot_kinds.push_back(e.kinds[i]);
    if (e.kinds[i] == PivotKind::Unit)
      ++sf.k1;
    else
      ++sf.k2;
  }
  return sf;
}

MatZ4 zero_prefix_kernel(const MatZ4& m, size_t split) {
  const std::array<std::pair<size_t, size_t>, 2> groups{
      std::pair<size_t, size_t>{0, split},
      std::pair<size_t, size_t>{split, m.cols}};
  Eliminated e = eliminate(rows_of(m), groups);
  MatZ4 out(0, m.cols);
  for (size_t i = 0; i < e.rows.size(); ++i)
    if (e.groups[i] == 1) out.append_row(e.rows[i]);
  return out;
}

bool in_row_space(const StandardForm& sf, std::span<const uint8_t> v) {
  if (v.size() != sf.reduced.cols)
    throw std::invalid_argument("in_row_space: width mismatch");
  VecZ4 w(v.begin(), v.end());
  for (size_t i = 0; i < sf.reduced.rows; ++i) {
    const size_t pc = sf.pivot_cols[i];
    const VecZ4 row(sf.reduced.row(i).begin(), sf.reduced.row(i).end());
    if (sf.pivot_kinds[i] == PivotKind::Unit) {
      if (w[pc]) sub_scaled(w, row, w[pc]);
    } else {
      if (w[pc] & 1) return false;
      if (w[pc] == 2) sub_scaled(w, row, 1);
    }
  }
  return vec_is_zero(w);
}

void for_each_module_element(const StandardForm& sf, int max_bits,
                             const std::function<void(const VecZ4&)>& fn) {
  if (sf.log2_size() > max_bits)
    throw TooLargeError("for_each_module_element: module has 2^" +
                        std::to_string(sf.log2_size()) +
                        " elements, cap is 2^" + std::to_string(max_bits));
  const size_t nrows = sf.reduced.rows;
  std::vector<uint8_t> digit(nrows, 0);
  std::vector<uint8_t> radix(nrows);
  for (size_t i = 0; i < nrows; ++i)
    radix[i] = sf.pivot_kinds[i] == PivotKind::Unit ? 4 : 2;
  VecZ4 v(sf.reduced.cols, 0);
  const uint64_t total = sf.size();
  for (uint64_t idx = 0;; ++idx) {
    fn(v);
    if (idx + 1 == total) break;
    for (size_t i = 0;; ++i) {
      // adding a row wraps the vector on digit rollover by itself: four
      // additions of a unit row or two of a two-torsion row vanish mod 4
      const VecZ4 row(sf.reduced.row(i).begin(), sf.reduced.row(i).end());
      for (size_t k = 0; k < v.size(); ++k) v[k] = uint8_t((v[k] + row[k]) & 3);
      if (++digit[i] < radix[i]) break;
      digit[i] = 0;
    }
  }
}

std::string debug_json(const MatZ4& m) {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < m.rows; ++r) {
    os << (r ? ",[" : "[");
    for (size_t c = 0; c < m.cols; ++c) os << (c ? "," : "") << int(m.at(r, c));
    os << "]";
  }
  os << "]";
  return os.str();
}

int nakayama_generator_count(
    const MatZ4& gens,
    const std::function<VecZ4(std::span<const uint8_t>)>& u_action) {
  StandardForm full = standard_form(gens);
  // closure check: the span must carry the maximal-ideal action back into
  // itself; 2v is automatic, u needs the supplied map
  for (size_t r = 0; r < gens.rows; ++r) {
    const VecZ4 mapped = u_action(gens.row(r));
    if (!in_row_space(full, mapped))
      throw NotClosedError("nakayama_generator_count: span not closed under u");
  }
  MatZ4 m_sub(0, gens.cols);
  for (size_t r = 0; r < gens.rows; ++r) {
    VecZ4 two(gens.row(r).begin(), gens.row(r).end());
    for (uint8_t& x : two) x = uint8_t((2 * x) & 3);
    m_sub.append_row(two);
    m_sub.append_row(u_action(gens.row(r)));
  }
  return full.log2_size() - standard_form(m_sub).log2_size();
}

}  // namespace ru4
