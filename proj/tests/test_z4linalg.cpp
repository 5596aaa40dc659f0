#include "doctest.h"
#include "ru4/z4linalg.hpp"

#include <set>

#include "oracles.hpp"
#include "ru4/poly.hpp"

using namespace ru4;

namespace {

MatZ4 mat_of(size_t cols, std::initializer_list<std::initializer_list<int>> rows) {
  MatZ4 m(0, cols);
  for (const auto& row : rows) {
    VecZ4 r;
    for (int v : row) r.push_back(uint8_t(v & 3));
    m.append_row(r);
  }
  return m;
}

std::set<VecZ4> all_elements(const StandardForm& sf, int max_bits = 24) {
  std::set<VecZ4> out;
  for_each_module_element(sf, max_bits, [&](const VecZ4& v) { out.insert(v); });
  return out;
}

std::vector<oracle::Word> mat_rows(const MatZ4& m) {
  std::vector<oracle::Word> rows;
  for (size_t r = 0; r < m.rows; ++r)
    rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

// <u> and <2,u> inside R^1, embedded as Z4^2 rows (a|b)
const MatZ4 kIdealU = mat_of(2, {{0, 1}});
const MatZ4 kIdealTwoAndU = mat_of(2, {{2, 0}, {0, 1}});

VecZ4 u_action_r1(std::span<const uint8_t> v) {
  return VecZ4{0, v[0]};  // (a|b) -> (0|a)
}

}  // namespace

TEST_CASE("standard form shapes") {
  SUBCASE("identity") {
    const StandardForm sf = standard_form(mat_of(2, {{1, 0}, {0, 1}}));
    CHECK(sf.k1 == 2);
    CHECK(sf.k2 == 0);
    CHECK(sf.size() == 16);
  }
  SUBCASE("single two-torsion row") {
    const StandardForm sf = standard_form(mat_of(1, {{2}}));
    CHECK(sf.k1 == 0);
    CHECK(sf.k2 == 1);
    CHECK(sf.size() == 2);
    CHECK(all_elements(sf) == std::set<VecZ4>{{0}, {2}});
  }
  SUBCASE("zero matrix") {
    const StandardForm sf = standard_form(mat_of(3, {{0, 0, 0}}));
    CHECK(sf.k1 == 0);
    CHECK(sf.k2 == 0);
    CHECK(sf.size() == 1);
  }
  SUBCASE("scalar full ring") {
    const StandardForm sf = standard_form(mat_of(1, {{3}}));
    CHECK(sf.k1 == 1);
    CHECK(all_elements(sf) == std::set<VecZ4>{{0}, {1}, {2}, {3}});
  }
  SUBCASE("unit rows come first, scaled to pivot 1") {
    const StandardForm sf = standard_form(mat_of(2, {{2, 0}, {0, 3}}));
    REQUIRE(sf.reduced.rows == 2);
    CHECK(sf.pivot_kinds[0] == PivotKind::Unit);
    CHECK(sf.pivot_kinds[1] == PivotKind::Two);
    CHECK(sf.reduced.at(0, 1) == 1);
  }
}

TEST_CASE("module size matches brute-force closure: <2,3u> at n=3") {
  const PolyR two({RElem(Z4(2), Z4(0))});
  const PolyR threeu({RElem(Z4(0), Z4(3))});
  const auto rows = oracle::ideal_orbit_rows(3, {two, threeu});
  MatZ4 m(0, 6);
  for (const auto& r : rows) m.append_row(r);

  const StandardForm sf = standard_form(m);
  CHECK(sf.log2_size() == 9);  // 512 words

  const auto closure = oracle::additive_closure(rows, 6);
  CHECK(closure.size() == 512);
  CHECK(all_elements(sf) == std::set<VecZ4>(closure.begin(), closure.end()));

  // log2 of the whole space as a sanity bound: R^3 embeds as Z4^6
  const StandardForm whole = standard_form(
      mat_of(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                 {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));
  CHECK(whole.log2_size() == 12);
}

TEST_CASE("random matrices: row space preserved, size equals closure") {
  oracle::Rng rng;
  for (int trial = 0; trial < 120; ++trial) {
    MatZ4 m(0, 6);
    for (int r = 0; r < 3; ++r) {
      VecZ4 row(6);
      for (auto& x : row) x = uint8_t(rng.below(4));
      m.append_row(row);
    }
    const StandardForm sf = standard_form(m);
    const auto closure = oracle::additive_closure(mat_rows(m), 6);
    // additive closure of the rows is no smaller than the Z4 span here
    // because scalar multiples are repeated additions
    CHECK(closure.size() == sf.size());
    for (size_t r = 0; r < m.rows; ++r) CHECK(in_row_space(sf, m.row(r)));

    // enumerate yields exactly that many distinct vectors
    const auto elems = all_elements(sf);
    CHECK(elems.size() == sf.size());
    CHECK(elems == std::set<VecZ4>(closure.begin(), closure.end()));
  }
}

TEST_CASE("zero-prefix kernel carves out the split-off rows") {
  // row (2,1) over Z4^2: the span has order 4 and its zero-prefix part is
  // {(0,0),(0,2)}
  const MatZ4 m = mat_of(2, {{2, 1}});
  CHECK(standard_form(m).log2_size() == 2);
  const MatZ4 kernel = zero_prefix_kernel(m, 1);
  const StandardForm ksf = standard_form(kernel);
  CHECK(ksf.log2_size() == 1);
  CHECK(in_row_space(ksf, VecZ4{0, 2}));
  for (size_t r = 0; r < kernel.rows; ++r) CHECK(kernel.at(r, 0) == 0);

  // exhaustive cross-check on random 3x6 matrices: kernel = elements with
  // zero first half, computed by filtering the closure
  oracle::Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    MatZ4 mm(0, 6);
    for (int r = 0; r < 3; ++r) {
      VecZ4 row(6);
      for (auto& x : row) x = uint8_t(rng.below(4));
      mm.append_row(row);
    }
    const MatZ4 ker = zero_prefix_kernel(mm, 3);
    std::set<VecZ4> expected;
    for (const auto& v : oracle::additive_closure(mat_rows(mm), 6))
      if (v[0] == 0 && v[1] == 0 && v[2] == 0) expected.insert(v);
    const auto got = all_elements(standard_form(ker));
    CHECK(got == expected);
  }
}

TEST_CASE("membership testing") {
  const StandardForm sf = standard_form(mat_of(3, {{1, 2, 0}, {0, 2, 2}}));
  CHECK(in_row_space(sf, VecZ4{1, 2, 0}));
  CHECK(in_row_space(sf, VecZ4{0, 2, 2}));
  CHECK(in_row_space(sf, VecZ4{1, 0, 2}));   // sum
  CHECK(!in_row_space(sf, VecZ4{0, 1, 0}));
  CHECK_THROWS_AS(in_row_space(sf, VecZ4{1, 0}), std::invalid_argument);
}

TEST_CASE("debug dump is a JSON array of row arrays") {
  CHECK(debug_json(mat_of(3, {{1, 2, 0}, {0, 2, 2}})) ==
        "[[1,2,0],[0,2,2]]");
  CHECK(debug_json(MatZ4(0, 3)) == "[]");
}

TEST_CASE("enumeration cap") {
  const StandardForm sf = standard_form(mat_of(2, {{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(for_each_module_element(sf, 3, [](const VecZ4&) {}),
                  TooLargeError);
}

TEST_CASE("nakayama generator counts over R^1") {
  SUBCASE("zero module") {
    CHECK(nakayama_generator_count(MatZ4(0, 2), u_action_r1) == 0);
  }
  SUBCASE("<u> needs one generator") {
    CHECK(nakayama_generator_count(kIdealU, u_action_r1) == 1);
  }
  SUBCASE("<2,u> needs two") {
    CHECK(nakayama_generator_count(kIdealTwoAndU, u_action_r1) == 2);
  }
  SUBCASE("matches brute-force minimal generating subsets for all 7 ideals") {
    for (IdealLabel label : kAllIdealLabels) {
      const auto elements = ideal_elements(label);
      // embed the whole ideal, one row per element
      MatZ4 gens(0, 2);
      for (RElem x : elements)
        gens.append_row(
            VecZ4{uint8_t(x.a().value()), uint8_t(x.b().value())});
      const int got = nakayama_generator_count(gens, u_action_r1);

      // oracle: smallest subset of elements whose R-multiples close to the
      // ideal under addition
      int best = 0;
      if (elements.size() > 1) {
        best = int(elements.size());
        const size_t count = elements.size();
        for (uint32_t mask = 1; mask < (1u << count); ++mask) {
          int bits = 0;
          for (uint32_t m2 = mask; m2; m2 >>= 1) bits += int(m2 & 1);
          if (bits >= best) continue;
          std::vector<oracle::Word> rows;
          for (size_t i = 0; i < count; ++i)
            if (mask & (1u << i))
              for (RElem r : all_r_elements()) {
                const RElem m = r * elements[i];
                rows.push_back(
                    {uint8_t(m.a().value()), uint8_t(m.b().value())});
              }
          if (oracle::additive_closure(rows, 2).size() == elements.size())
            best = bits;
        }
      }
      CHECK(got == best);
      CHECK(got <= int(gens.rows));
    }
  }
  SUBCASE("span not closed under u is rejected") {
    CHECK_THROWS_AS(
        nakayama_generator_count(mat_of(2, {{1, 0}}), u_action_r1),
        NotClosedError);
  }
}
