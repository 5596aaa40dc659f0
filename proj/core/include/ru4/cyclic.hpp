#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ru4/factor.hpp"
#include "ru4/poly.hpp"
#include "ru4/ring.hpp"
#include "ru4/z4linalg.hpp"

namespace ru4 {

inline constexpr uint64_t kDefaultMaxCodes = 117649;  // 7^6
inline constexpr int kDefaultMaxEnumBits = 26;

/**
 * One ideal choice per Hensel-lifted factor of x^n - 1; picks out one of
 * the 7^m cyclic codes of odd length n over R.
 */
struct CRTProfile {
  int n = 0;
  std::vector<IdealLabel> labels;

  bool operator==(const CRTProfile&) const = default;
};

/**
 * Generators in the two-generator shape <f1 + 2 f2 + 2u f14, u f3 + 2u f4>
 * with f2 | f1 | x^n - 1 and f4 | f3 | x^n - 1 over Z4. An extra
 * u f13 cross term is accepted and reduced away when the ideal does not
 * change without it.
 */
struct CanonicalGens {
  PolyZ4 f1, f2, f14, f3, f4;
  std::optional<PolyZ4> f13;
};

// (a-part coordinates | b-part coordinates) in Z4^(2n).
VecZ4 embed_word(std::span<const RElem> w, int n);
std::vector<RElem> unembed_word(std::span<const uint8_t> v, int n);
// Multiplication by u in the embedding: (a|b) -> (0|a).
VecZ4 embedded_u_action(std::span<const uint8_t> v, int n);

/**
 * A cyclic code of odd length n over R, an ideal of R[x]/<x^n-1>. The
 * Z4-module basis of its Z4^(2n) embedding is computed on construction
 * and backs sizes, membership, enumeration, and distance scans.
 */
class Z4CyclicCode;

class CyclicCode {
 public:
  static CyclicCode from_generators(int n, std::vector<PolyR> gens);
  static CyclicCode from_crt_profile(const CRTProfile& profile,
                                     const FactorizationResult& fact);
  static CyclicCode from_canonical(int n, const CanonicalGens& c);

  int n() const noexcept { return n_; }
  const std::vector<PolyR>& generators() const noexcept { return gens_; }
  const StandardForm& z4_basis() const noexcept { return basis_; }
  const std::optional<CRTProfile>& profile() const noexcept { return profile_; }
  int log2_size() const noexcept { return basis_.log2_size(); }

  bool contains(std::span<const RElem> word) const;
  // Equality as codeword sets, via sizes plus basis membership.
  bool equals(const CyclicCode& o) const;
  // sigma-invariance of every basis row; true for any ideal.
  bool is_cyclic_closed() const;

  Z4CyclicCode residue_code() const;
  Z4CyclicCode torsion_code() const;

  /**
   * Smallest Lee weight over nonzero codewords, equal to the minimum Lee
   * distance. nullopt for the zero code. Runs the packed enumeration
   * kernel; throws TooLargeError above max_bits. Results are identical
   * for any worker count.
   */
  std::optional<int> min_lee_weight(int max_bits = kDefaultMaxEnumBits,
                                    int workers = 1) const;

  // Minimal R-module generator count (residue-field dimension of C/mC).
  int nakayama_count() const;

  // Was a supplied f13 term dropped because <.., u f3 + 2u f4> absorbs it?
  bool f13_reduced() const noexcept { return f13_reduced_; }

  // Materialized codewords in enumeration order; test-scale only.
  std::vector<std::vector<RElem>> codewords(int max_bits = 22) const;

 private:
  CyclicCode(int n, std::vector<PolyR> gens, StandardForm basis)
      : n_(n), gens_(std::move(gens)), basis_(std::move(basis)) {}

  int n_ = 0;
  std::vector<PolyR> gens_;
  StandardForm basis_;
  std::optional<CRTProfile> profile_;
  bool f13_reduced_ = false;
};

/**
 * A cyclic code over Z4 (residue or torsion code of a CyclicCode),
 * carried as the standard form of its Z4^n generator matrix.
 */
class Z4CyclicCode {
 public:
  Z4CyclicCode(int n, StandardForm basis) : n_(n), basis_(std::move(basis)) {}

  int n() const noexcept { return n_; }
  const StandardForm& basis() const noexcept { return basis_; }
  int log2_size() const noexcept { return basis_.log2_size(); }

  bool contains(std::span<const uint8_t> v) const;
  bool equals(const Z4CyclicCode& o) const;
  bool is_shift_closed() const;

 private:
  int n_;
  StandardForm basis_;
};

/**
 * The 3^m principal pairs (f, 2g): every Z4 cyclic code of odd length is
 * <f + 2g> for exactly one pair of monic divisors with g | f | x^n - 1.
 * Built once per factorization and used to recover canonical generators.
 */
class Z4PairTable {
 public:
  explicit Z4PairTable(const FactorizationResult& fact);

  struct Entry {
    PolyZ4 f, g;
    Z4CyclicCode code;
  };

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const Entry* find(const Z4CyclicCode& code) const;

 private:
  std::vector<Entry> entries_;
};

// The tables' "ranks" value: n - deg(f3) of the torsion generator.
int paper_rank_from_f3(int n, const PolyZ4& f3);

// n - deg(f3) with f3 recovered from the torsion code; nullopt when no
// principal pair matches (does not happen for ideals).
std::optional<int> paper_rank(const CyclicCode& code, const Z4PairTable& table);

uint64_t cyclic_code_count(int n);  // 7^m

/**
 * Visits all 7^m cyclic codes in mixed-radix profile order (factor 0's
 * label changes fastest; label order Zero, One, Two, U, TwoU, TwoPlusU,
 * TwoAndU). Throws TooLargeError when 7^m exceeds max_codes.
 */
void for_each_cyclic_code(
    const FactorizationResult& fact,
    const std::function<void(const CRTProfile&, const CyclicCode&)>& fn,
    uint64_t max_codes = kDefaultMaxCodes);

}  // namespace ru4
