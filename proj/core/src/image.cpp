#include "ru4/image.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "packed_kernel.hpp"

namespace ru4 {

namespace {

using Packed = BinaryCodeSet::Packed;

bool packed_less(const Packed& a, const Packed& b) {
  return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
}

// Left-rotate by 4 within nbits (a multiple of 4): the packed analogue of
// nu, since bit p of the input lands at bit p+4 of the output.
Packed rot4(const Packed& w, int nbits) {
  Packed r{0, 0};
  if (nbits <= 64) {
    const uint64_t mask =
        nbits == 64 ? ~uint64_t(0) : (uint64_t(1) << nbits) - 1;
    r[0] = ((w[0] << 4) | (w[0] >> (nbits - 4))) & mask;
    return r;
  }
  const int hi_bits = nbits - 64;
  const uint64_t hi_mask =
      hi_bits == 64 ? ~uint64_t(0) : (uint64_t(1) << hi_bits) - 1;
  r[0] = (w[0] << 4) | ((w[1] >> (hi_bits - 4)) & 0xF);
  r[1] = ((w[1] << 4) | (w[0] >> 60)) & hi_mask;
  return r;
}

int packed_popcount(const Packed& w) {
  return std::popcount(w[0]) + std::popcount(w[1]);
}

struct SampleRng {
  uint64_t state = 0x243f6a8885a308d3ull;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

}  // namespace

Packed BinaryCodeSet::pack(const BinaryWord& w) {
  Packed p{0, 0};
  const auto& words = w.words();
  for (size_t i = 0; i < words.size() && i < 2; ++i) p[i] = words[i];
  return p;
}

BinaryWord BinaryCodeSet::unpack(const Packed& p) const {
  BinaryWord w(length_);
  for (int i = 0; i < length_; ++i)
    if ((p[size_t(i >> 6)] >> (i & 63)) & 1) w.set_bit(i, true);
  return w;
}

bool BinaryCodeSet::contains(const BinaryWord& w) const {
  if (w.size() != length_) return false;
  return contains_packed(pack(w));
}

bool BinaryCodeSet::contains_packed(const Packed& w) const {
  return std::binary_search(words_.begin(), words_.end(), w, packed_less);
}

BinaryWord BinaryCodeSet::word_at(uint64_t i) const {
  return unpack(words_.at(size_t(i)));
}

BinaryCodeSet gray_image(const CyclicCode& code, int max_log2, int workers) {
  if (code.log2_size() > max_log2)
    throw TooLargeError("gray_image: code has 2^" +
                        std::to_string(code.log2_size()) +
                        " words, materialization cap is 2^" +
                        std::to_string(max_log2));
  const auto pc = detail::PackedCode::build(code.z4_basis(), code.n());
  const uint64_t total = pc.total();
  BinaryCodeSet set;
  set.length_ = 4 * code.n();
  set.words_.assign(size_t(total), Packed{0, 0});

  workers = std::max(1, workers);
  const uint64_t nchunks = std::min<uint64_t>(uint64_t(workers), total);
  std::vector<std::thread> pool;
  const uint64_t chunk = total / nchunks;
  for (uint64_t c = 0; c < nchunks; ++c) {
    const uint64_t lo = c * chunk;
    const uint64_t hi = (c + 1 == nchunks) ? total : lo + chunk;
    pool.emplace_back([&, lo, hi] {
      pc.scan(lo, hi, [&](uint64_t idx, const detail::PackedVec& v) {
        const detail::PackedVec img = detail::psi_expand(v);
        set.words_[size_t(idx)] = Packed{img.w[0], img.w[1]};
      });
    });
  }
  for (auto& t : pool) t.join();
  std::sort(set.words_.begin(), set.words_.end(), packed_less);
  return set;
}

bool is_qc4_invariant(const BinaryCodeSet& b) {
  for (const Packed& w : b.packed_words())
    if (!b.contains_packed(rot4(w, b.length()))) return false;
  return true;
}

bool is_linear_set(const BinaryCodeSet& b) {
  // F2 rank of the word set: the set always lies inside its own span, and
  // |span| = 2^rank, so closure under xor is exactly rank == log2|B|.
  std::vector<Packed> basis;
  int rank = 0;
  auto msb = [](const Packed& w) {
    return w[1] ? 63 + int(std::bit_width(w[1])) : int(std::bit_width(w[0])) - 1;
  };
  for (Packed cur : b.packed_words()) {
    while (cur[0] | cur[1]) {
      const int h = msb(cur);
      Packed* slot = nullptr;
      for (Packed& base : basis)
        if (msb(base) == h) {
          slot = &base;
          break;
        }
      if (slot == nullptr) {
        basis.push_back(cur);
        ++rank;
        break;
      }
      cur[0] ^= (*slot)[0];
      cur[1] ^= (*slot)[1];
    }
  }
  return (uint64_t(1) << rank) == b.size();
}

BinaryCodeSet BinaryCodeSet::from_words(const std::vector<BinaryWord>& words) {
  if (words.empty())
    throw std::invalid_argument("BinaryCodeSet::from_words: empty set");
  BinaryCodeSet set;
  set.length_ = words.front().size();
  if (set.length_ < 4 || set.length_ % 4 != 0 || set.length_ > 128)
    throw std::invalid_argument(
        "BinaryCodeSet::from_words: length must be a multiple of 4, <= 128");
  for (const BinaryWord& w : words) {
    if (w.size() != set.length_)
      throw std::invalid_argument("BinaryCodeSet::from_words: ragged lengths");
    set.words_.push_back(pack(w));
  }
  std::sort(set.words_.begin(), set.words_.end(), packed_less);
  set.words_.erase(std::unique(set.words_.begin(), set.words_.end()),
                   set.words_.end());
  return set;
}

void sampled_closure_flags(const CyclicCode& code, BinaryParams& out) {
  const auto pc = detail::PackedCode::build(code.z4_basis(), code.n());
  const uint64_t total = pc.total();
  SampleRng rng;
  const int n = code.n();
  auto word_of = [&](uint64_t idx) {
    const detail::PackedVec img = detail::psi_expand(pc.at_index(idx));
    BinaryWord w(4 * n);
    for (int i = 0; i < 4 * n; ++i)
      if ((img.w[size_t(i >> 6)] >> (i & 63)) & 1) w.set_bit(i, true);
    return w;
  };
  bool qc4 = true, linear = true;
  for (int probe = 0; probe < kSampledChecks && (qc4 || linear); ++probe) {
    const BinaryWord w1 = word_of(rng.next() % total);
    const BinaryWord w2 = word_of(rng.next() % total);
    if (qc4 && !code.contains(Phi_vec_inverse(nu(w1)))) qc4 = false;
    if (linear && !code.contains(Phi_vec_inverse(w1 ^ w2))) linear = false;
  }
  out.is_qc4 = qc4;
  out.is_linear_set = linear;
  out.sampled = true;
}

BinaryParams params(const CyclicCode& code, const Caps& caps) {
  BinaryParams p;
  p.length = 4 * code.n();
  p.log2_size = code.log2_size();
  p.min_distance = code.min_lee_weight(caps.max_enum_bits, caps.workers);

  if (code.log2_size() <= caps.max_image_log2) {
    const BinaryCodeSet set = gray_image(code, caps.max_image_log2, caps.workers);
    p.is_qc4 = is_qc4_invariant(set);
    p.is_linear_set = is_linear_set(set);
    if (code.log2_size() >= 1 && code.log2_size() <= kPairwiseCheckLog2) {
      int best = INT32_MAX;
      const auto& words = set.packed_words();
      for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
          const int d = packed_popcount(
              {words[i][0] ^ words[j][0], words[i][1] ^ words[j][1]});
          if (d < best) best = d;
        }
      if (!p.min_distance.has_value() || best != *p.min_distance)
        throw std::logic_error(
            "params: pairwise Hamming distance disagrees with the Lee scan");
    }
  } else {
    sampled_closure_flags(code, p);
  }
  return p;
}

CodeSummary summarize(const CyclicCode& code, const Z4PairTable& table,
                      const Caps& caps, bool partial_ok) {
  CodeSummary s;
  s.n = code.n();
  for (const PolyR& g : code.generators()) s.generators.push_back(g.to_string());
  if (code.profile().has_value()) s.crt_profile = code.profile()->labels;
  s.log2_size = code.log2_size();
  s.nakayama = code.nakayama_count();
  if (const auto* res = table.find(code.residue_code()))
    s.residue_pair = std::make_pair(res->f, res->g);
  if (const auto* tor = table.find(code.torsion_code())) {
    s.torsion_pair = std::make_pair(tor->f, tor->g);
    s.paper_rank_value = paper_rank_from_f3(code.n(), tor->f);
  }
  if (partial_ok && code.log2_size() > caps.max_enum_bits) {
    s.image.length = 4 * code.n();
    s.image.log2_size = code.log2_size();
    sampled_closure_flags(code, s.image);
    s.d_budget_exceeded = true;
  } else {
    s.image = params(code, caps);
    s.d_lee = s.image.min_distance;
  }
  return s;
}

SearchResult search_best(int n, int top_k, const Caps& caps) {
  const FactorizationResult fact = factor_xn_minus_1(n);
  const Z4PairTable table(fact);
  SearchResult result;
  result.n = n;
  result.top_k = top_k;
  for_each_cyclic_code(fact, [&](const CRTProfile&, const CyclicCode& code) {
    result.rows.push_back(summarize(code, table, caps));
  });

  // rank: distance first, then size; the zero code (no distance) sinks to
  // the bottom; ties keep profile enumeration order
  std::vector<size_t> order(result.rows.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const int da = result.rows[a].d_lee.value_or(-1);
    const int db = result.rows[b].d_lee.value_or(-1);
    if (da != db) return da > db;
    return result.rows[a].log2_size > result.rows[b].log2_size;
  });
  std::vector<CodeSummary> ranked;
  ranked.reserve(order.size());
  for (size_t i : order) ranked.push_back(std::move(result.rows[i]));
  result.rows = std::move(ranked);

  // front: first representative of each non-dominated (distance, size) pair
  int best_size = -1;
  for (size_t i = 0; i < result.rows.size(); ++i) {
    if (!result.rows[i].d_lee.has_value()) continue;
    if (result.rows[i].log2_size > best_size) {
      result.pareto.push_back(i);
      best_size = result.rows[i].log2_size;
    }
  }
  return result;
}

}  // namespace ru4
