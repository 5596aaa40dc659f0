#include "ru4/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ru4 {

namespace {

// Coefficient bits as an integer; the tie-break for the stable factor order.
uint64_t coeff_bits(const PolyF2& p) {
  uint64_t v = 0;
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i].is_unit()) v |= (uint64_t(1) << i);
  return v;
}

bool factor_order(const PolyF2& a, const PolyF2& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return coeff_bits(a) < coeff_bits(b);
}

PolyF2 pow2k_x_mod(const PolyF2& f, int k) {
  // x^(2^k) mod f by repeated squaring.
  PolyF2 s = PolyF2::x().divmod(f).second;
  for (int i = 0; i < k; ++i) s = (s * s).divmod(f).second;
  return s;
}

struct SplitRng {
  uint64_t state = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

PolyF2 random_poly_below(SplitRng& rng, int degree_bound) {
  std::vector<F2> c(size_t(degree_bound), F2::zero());
  for (int i = 0; i < degree_bound; ++i) c[size_t(i)] = F2(int(rng.next() & 1));
  return PolyF2(std::move(c));
}

// Equal-degree splitting of a squarefree product of irreducibles of
// degree d, by gcd with trace polynomials h + h^2 + ... + h^(2^(d-1)).
void split_equal_degree(const PolyF2& f, int d, SplitRng& rng,
                        std::vector<PolyF2>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PolyF2 h = random_poly_below(rng, f.degree());
    if (h.is_zero()) continue;
    PolyF2 trace = h;
    PolyF2 power = h;
    for (int i = 1; i < d; ++i) {
      power = (power * power).divmod(f).second;
      trace = trace + power;
    }
    if (trace.is_zero()) continue;
    PolyF2 g = gcd_f2(f, trace);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_equal_degree(g, d, rng, out);
      split_equal_degree(f.divmod(g).first, d, rng, out);
      return;
    }
  }
  throw std::logic_error("split_equal_degree: no splitter found");
}

}  // namespace

PolyF2 gcd_f2(PolyF2 f, PolyF2 g) {
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd_f2: gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    PolyF2 r = f.divmod(g).second;  // F2 polynomials are monic when nonzero
    f = g;
    g = r;
  }
  return f;
}

bool coprime_f2(const PolyF2& f, const PolyF2& g) {
  return gcd_f2(f, g) == PolyF2::one();
}

ExtGcdF2 ext_gcd_f2(const PolyF2& f, const PolyF2& g) {
  PolyF2 r0 = f, r1 = g;
  PolyF2 s0 = PolyF2::one(), s1 = PolyF2::zero();
  PolyF2 t0 = PolyF2::zero(), t1 = PolyF2::one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    PolyF2 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    PolyF2 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return {r0, s0, t0};
}

bool is_irreducible_f2(const PolyF2& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  for (int i = 1; i <= f.degree() / 2; ++i) {
    PolyF2 probe = pow2k_x_mod(f, i) - PolyF2::x().divmod(f).second;
    if (!probe.is_zero() && gcd_f2(f, probe).degree() > 0) return false;
  }
  return true;
}

std::vector<PolyF2> factor_xn_minus_1_f2(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument(
        "factor_xn_minus_1_f2: length must be odd and positive, got " +
        std::to_string(n));
  PolyF2 remaining = PolyF2::xn_minus_1(n);
  std::vector<PolyF2> factors;
  SplitRng rng;
  for (int d = 1; remaining.degree() > 0; ++d) {
    if (remaining.degree() < 2 * d) {
      factors.push_back(remaining);  // remainder is itself irreducible
      break;
    }
    PolyF2 probe = pow2k_x_mod(remaining, d) -
                   PolyF2::x().divmod(remaining).second;
    PolyF2 product =
        probe.is_zero() ? remaining : gcd_f2(remaining, probe);
    if (product.degree() > 0) {
      split_equal_degree(product, d, rng, factors);
      remaining = remaining.divmod(product).first;
    }
  }
  std::sort(factors.begin(), factors.end(), factor_order);

  // x^n - 1 is squarefree for odd n; anything else is an internal bug.
  PolyF2 check = PolyF2::one();
  for (const PolyF2& f : factors) {
    if (!is_irreducible_f2(f))
      throw std::logic_error("factor_xn_minus_1_f2: reducible factor");
    check = check * f;
  }
  if (check != PolyF2::xn_minus_1(n))
    throw std::logic_error("factor_xn_minus_1_f2: product check failed");
  return factors;
}

PolyZ4 graeffe_hensel_lift(const PolyF2& g2, int n) {
  if (!g2.is_monic())
    throw std::invalid_argument("graeffe_hensel_lift: factor must be monic");
  if (!PolyF2::xn_minus_1(n).divisible_by(g2))
    throw std::invalid_argument(
        "graeffe_hensel_lift: polynomial does not divide x^n-1 mod 2");

  const PolyZ4 h = lift_01(g2);
  const PolyZ4 squared = h * h.negate_variable();  // = G(x^2)
  std::vector<Z4> even(size_t(g2.degree()) + 1, Z4(0));
  for (size_t i = 0; i < even.size(); ++i) even[i] = squared.coeff(2 * i);
  PolyZ4 g(std::move(even));
  if (!g.is_monic()) g = g * Z4(3);  // leading coefficient is +-1

  if (reduce_mod2(g) != g2)
    throw std::logic_error("graeffe_hensel_lift: reduction mod 2 mismatch");
  if (!PolyZ4::xn_minus_1(n).divisible_by(g))
    throw std::logic_error("graeffe_hensel_lift: lift does not divide x^n-1");
  return g;
}

PolyZ4 inverse_mod_z4(const PolyZ4& a, const PolyZ4& g) {
  const PolyF2 a2 = reduce_mod2(a.divmod(g).second);
  const PolyF2 g2 = reduce_mod2(g);
  ExtGcdF2 e = ext_gcd_f2(a2, g2);
  if (e.gcd != PolyF2::one())
    throw std::invalid_argument("inverse_mod_z4: arguments are not coprime");
  // Newton step lifts the mod-2 inverse to mod 4: t <- t(2 - a t).
  PolyZ4 t = lift_01(e.s);
  t = (t * (PolyZ4({Z4(2)}) - (a * t).divmod(g).second)).divmod(g).second;
  if ((a * t).divmod(g).second != PolyZ4::one())
    throw std::logic_error("inverse_mod_z4: verification failed");
  return t;
}

std::vector<PolyZ4> crt_idempotents(const std::vector<PolyZ4>& lifts, int n) {
  const PolyZ4 modulus = PolyZ4::xn_minus_1(n);
  PolyZ4 product = PolyZ4::one();
  for (const PolyZ4& g : lifts) product = product * g;
  if (product != modulus)
    throw std::invalid_argument(
        "crt_idempotents: lifts do not multiply to x^n-1");

  std::vector<PolyZ4> out;
  out.reserve(lifts.size());
  PolyZ4 sum = PolyZ4::zero();
  for (const PolyZ4& g : lifts) {
    const PolyZ4 cofactor = modulus.divmod(g).first;
    const PolyZ4 t = inverse_mod_z4(cofactor, g);  // throws when not coprime
    PolyZ4 e = (cofactor * t).mod_xn_minus_1(n);
    if ((e * e).mod_xn_minus_1(n) != e)
      throw std::logic_error("crt_idempotents: e^2 != e");
    if (!(e - PolyZ4::one()).divisible_by(g))
      throw std::logic_error("crt_idempotents: e != 1 mod own factor");
    sum = (sum + e).mod_xn_minus_1(n);
    out.push_back(std::move(e));
  }
  if (sum != PolyZ4::one())
    throw std::logic_error("crt_idempotents: idempotents do not sum to 1");
  return out;
}

FactorizationResult factor_xn_minus_1(int n) {
  FactorizationResult r;
  r.n = n;
  r.f2_factors = factor_xn_minus_1_f2(n);
  r.z4_lifts.reserve(r.f2_factors.size());
  for (const PolyF2& f : r.f2_factors)
    r.z4_lifts.push_back(graeffe_hensel_lift(f, n));
  r.idempotents = crt_idempotents(r.z4_lifts, n);
  return r;
}

}  // namespace ru4
