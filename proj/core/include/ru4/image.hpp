#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ru4/cyclic.hpp"
#include "ru4/gray.hpp"

namespace ru4 {

inline constexpr int kDefaultMaxImageLog2 = 22;  // materialization cap
inline constexpr int kPairwiseCheckLog2 = 12;    // exact pairwise d cross-check
inline constexpr int kSampledChecks = 10000;

struct Caps {
  int max_enum_bits = kDefaultMaxEnumBits;
  int max_image_log2 = kDefaultMaxImageLog2;
  int workers = 1;
};

/**
 * Parameters of the Gray image of a code: length 4n, the same log2 size as
 * the source (Phi is injective), minimum Hamming distance equal to the
 * source's minimum Lee weight, and the set-level closure flags. The image
 * of this ring's Gray map need not be linear, so is_linear_set is measured,
 * never assumed. `sampled` marks flags estimated from random members
 * because the set was too large to materialize.
 */
struct BinaryParams {
  int length = 0;
  int log2_size = 0;
  std::optional<int> min_distance;  // nullopt for the one-word image
  std::optional<bool> is_linear_set;
  std::optional<bool> is_qc4;
  bool sampled = false;
};

/**
 * An explicit set of Gray-image words, stored sorted for membership
 * queries. Produced by gray_image for codes within the materialization
 * cap.
 */
class BinaryCodeSet {
 public:
  using Packed = std::array<uint64_t, 2>;

  int length() const noexcept { return length_; }
  uint64_t size() const noexcept { return words_.size(); }

  bool contains(const BinaryWord& w) const;
  bool contains_packed(const Packed& w) const;
  BinaryWord word_at(uint64_t i) const;  // sorted order
  const std::vector<Packed>& packed_words() const noexcept { return words_; }

  static Packed pack(const BinaryWord& w);
  BinaryWord unpack(const Packed& p) const;

  // Arbitrary explicit set (deduplicated); words must share one length
  // that is a multiple of 4 and at most 128.
  static BinaryCodeSet from_words(const std::vector<BinaryWord>& words);

 private:
  friend BinaryCodeSet gray_image(const CyclicCode&, int, int);
  int length_ = 0;
  std::vector<Packed> words_;  // sorted
};

/**
 * Materialized Gray image of a code. Throws TooLargeError when the code
 * has more than 2^max_log2 words; parameter computation does not need the
 * materialized set (see params).
 */
BinaryCodeSet gray_image(const CyclicCode& code,
                         int max_log2 = kDefaultMaxImageLog2, int workers = 1);

// True iff nu maps the set onto itself.
bool is_qc4_invariant(const BinaryCodeSet& b);

// True iff the set is closed under bitwise addition (checked via the
// F2 rank of its words).
bool is_linear_set(const BinaryCodeSet& b);

/**
 * Image parameters. The minimum distance comes from the Lee-weight scan of
 * the source code (valid with no linearity assumption because the source
 * is an additive group and Phi is an isometry); it is cross-checked
 * against exact pairwise Hamming distances for images of at most 2^12
 * words. Above the materialization cap the closure flags are sampled.
 */
BinaryParams params(const CyclicCode& code, const Caps& caps = {});

/**
 * One row of the enumeration/search reports.
 */
struct CodeSummary {
  int n = 0;
  std::vector<std::string> generators;
  std::optional<std::vector<IdealLabel>> crt_profile;
  int log2_size = 0;
  std::optional<int> paper_rank_value;  // nullopt prints as n/a
  int nakayama = 0;
  std::optional<int> d_lee;
  bool d_budget_exceeded = false;  // distance skipped, cap too small
  std::optional<std::pair<PolyZ4, PolyZ4>> residue_pair;  // (f1, f2)
  std::optional<std::pair<PolyZ4, PolyZ4>> torsion_pair;  // (f3, f4)
  BinaryParams image;
};

// Sampled qc4/linearity flags for codes too large to materialize; each
// probe routes an image word back through Phi^-1 and asks the source code
// for membership.
void sampled_closure_flags(const CyclicCode& code, BinaryParams& out);

/**
 * Full report row. With partial_ok, a code whose distance scan would
 * exceed caps.max_enum_bits gets d_budget_exceeded set and sampled
 * closure flags instead of a TooLargeError.
 */
CodeSummary summarize(const CyclicCode& code, const Z4PairTable& table,
                      const Caps& caps = {}, bool partial_ok = false);

/**
 * Every cyclic code of length n, ranked by image minimum distance then
 * size (no single figure of merit is canonical, so the full table is
 * kept and the ranking is explicit). rows holds all 7^m
 * summaries in ranked order with the zero code last; pareto indexes the
 * first row of each non-dominated (distance, size) pair.
 */
struct SearchResult {
  int n = 0;
  int top_k = 0;
  std::vector<CodeSummary> rows;
  std::vector<size_t> pareto;
};

SearchResult search_best(int n, int top_k, const Caps& caps = {});

}  // namespace ru4
