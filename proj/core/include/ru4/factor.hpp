#pragma once

#include <vector>

#include "ru4/poly.hpp"

namespace ru4 {

/**
 * Binary-field factors of x^n - 1, their Z4 lifts, and the CRT idempotents
 * attached to the lifts. Factors are sorted ascending by degree, then by
 * coefficient bits read as an integer, so indices are stable across runs.
 */
struct FactorizationResult {
  int n = 0;
  std::vector<PolyF2> f2_factors;
  std::vector<PolyZ4> z4_lifts;
  std::vector<PolyZ4> idempotents;

  size_t factor_count() const noexcept { return f2_factors.size(); }
};

PolyF2 gcd_f2(PolyF2 f, PolyF2 g);
bool coprime_f2(const PolyF2& f, const PolyF2& g);

// Extended euclid: returns (g, s, t) with s*f + t*g2 = gcd, gcd monic.
struct ExtGcdF2 {
  PolyF2 gcd, s, t;
};
ExtGcdF2 ext_gcd_f2(const PolyF2& f, const PolyF2& g);

// gcd(f, x^(2^i) - x mod f) == 1 for 1 <= i <= deg(f)/2. Valid as an
// irreducibility test for nonconstant divisors of a squarefree polynomial.
bool is_irreducible_f2(const PolyF2& f);

/**
 * Monic irreducible factors of x^n - 1 over the binary field, n odd.
 * Distinct-degree splitting by gcd with x^(2^d) - x, then equal-degree
 * splitting by trace polynomials. Throws std::invalid_argument for even n
 * (repeated factors would break the coprimality Hensel lifting needs).
 */
std::vector<PolyF2> factor_xn_minus_1_f2(int n);

/**
 * Hensel lift of a monic binary divisor of x^n - 1 to Z4 by the Graeffe
 * trick: with h the 0/1 lift, +-h(x)h(-x) = g(x^2) and the sign is chosen
 * to make g monic. Both postconditions (reduction mod 2, exact division
 * of x^n - 1 over Z4) are verified; failure throws std::logic_error.
 */
PolyZ4 graeffe_hensel_lift(const PolyF2& g2, int n);

/**
 * Orthogonal idempotents e_i for pairwise-coprime monic lifts with
 * product x^n - 1: e_i = 1 mod lift_i, e_i = 0 mod lift_j (j != i),
 * e_i^2 = e_i and sum e_i = 1, everything mod x^n - 1.
 */
std::vector<PolyZ4> crt_idempotents(const std::vector<PolyZ4>& lifts, int n);

// Factor, lift, and build idempotents in one pass.
FactorizationResult factor_xn_minus_1(int n);

// Inverse of a mod g over Z4 (g monic, a invertible mod <2, g>), obtained
// from the binary inverse by one Newton step. Throws std::invalid_argument
// when a and g are not coprime.
PolyZ4 inverse_mod_z4(const PolyZ4& a, const PolyZ4& g);

}  // namespace ru4
