#include "ru4/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "packed_kernel.hpp"
#include "ru4/gray.hpp"

namespace ru4 {

namespace detail {

int min_lee_weight_scan(const PackedCode& pc, int workers) {
  const uint8_t* lee16 = lee16_table();
  const uint64_t total = pc.total();
  workers = std::max(1, workers);
  const uint64_t span = total - 1;
  const uint64_t nchunks = std::min<uint64_t>(uint64_t(workers), span);

  auto scan_min = [&](uint64_t lo, uint64_t hi) {
    int best = INT32_MAX;
    pc.scan(lo, hi, [&](uint64_t, const PackedVec& v) {
      const int w = packed_lee_weight(v, lee16);
      if (w < best) best = w;
    });
    return best;
  };

  if (nchunks <= 1) return scan_min(1, total);

  std::vector<int> mins(size_t(nchunks), INT32_MAX);
  std::vector<std::thread> pool;
  const uint64_t chunk = span / nchunks;
  for (uint64_t c = 0; c < nchunks; ++c) {
    const uint64_t lo = 1 + c * chunk;
    const uint64_t hi = (c + 1 == nchunks) ? total : lo + chunk;
    pool.emplace_back([&, lo, hi, c] { mins[size_t(c)] = scan_min(lo, hi); });
  }
  for (auto& t : pool) t.join();
  return *std::min_element(mins.begin(), mins.end());
}

}  // namespace detail

VecZ4 embed_word(std::span<const RElem> w, int n) {
  if (int(w.size()) != n)
    throw std::invalid_argument("embed_word: length mismatch");
  VecZ4 v(size_t(2 * n));
  for (int i = 0; i < n; ++i) {
    v[size_t(i)] = uint8_t(w[size_t(i)].a().value());
    v[size_t(n + i)] = uint8_t(w[size_t(i)].b().value());
  }
  return v;
}

std::vector<RElem> unembed_word(std::span<const uint8_t> v, int n) {
  std::vector<RElem> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    w[size_t(i)] = RElem(Z4(v[size_t(i)]), Z4(v[size_t(n + i)]));
  return w;
}

VecZ4 embedded_u_action(std::span<const uint8_t> v, int n) {
  VecZ4 out(size_t(2 * n), 0);
  for (int i = 0; i < n; ++i) out[size_t(n + i)] = v[size_t(i)];
  return out;
}

namespace {

void require_odd(int n, const char* who) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument(std::string(who) +
                                ": length must be odd and positive, got " +
                                std::to_string(n));
}

// Cyclic rotation of padded coefficients: p * x^k mod x^n - 1.
std::vector<RElem> rotated(const std::vector<RElem>& padded, int k) {
  const int n = int(padded.size());
  std::vector<RElem> out(padded.size());
  for (int i = 0; i < n; ++i) out[size_t((i + k) % n)] = padded[size_t(i)];
  return out;
}

}  // namespace

CyclicCode CyclicCode::from_generators(int n, std::vector<PolyR> gens) {
  require_odd(n, "CyclicCode::from_generators");
  MatZ4 m(0, size_t(2 * n));
  for (const PolyR& g : gens) {
    const PolyR reduced = g.mod_xn_minus_1(n);
    if (reduced.is_zero()) continue;
    for (const PolyR& base : {reduced, reduced * RElem::u()}) {
      if (base.is_zero()) continue;
      const std::vector<RElem> padded = base.padded(n);
      for (int k = 0; k < n; ++k)
        m.append_row(embed_word(rotated(padded, k), n));
    }
  }
  return CyclicCode(n, std::move(gens), standard_form(m));
}

CyclicCode CyclicCode::from_crt_profile(const CRTProfile& profile,
                                        const FactorizationResult& fact) {
  require_odd(profile.n, "CyclicCode::from_crt_profile");
  if (profile.n != fact.n)
    throw std::invalid_argument("from_crt_profile: length mismatch with factorization");
  if (profile.labels.size() != fact.factor_count())
    throw std::invalid_argument(
        "from_crt_profile: profile has " + std::to_string(profile.labels.size()) +
        " labels for " + std::to_string(fact.factor_count()) + " factors");
  std::vector<PolyR> gens;
  for (size_t i = 0; i < profile.labels.size(); ++i) {
    const PolyR e = to_r(fact.idempotents[i]);
    for (RElem g : ideal_generators(profile.labels[i]))
      gens.push_back((e * PolyR({g})).mod_xn_minus_1(profile.n));
  }
  CyclicCode code = from_generators(profile.n, std::move(gens));
  code.profile_ = profile;
  return code;
}

CyclicCode CyclicCode::from_canonical(int n, const CanonicalGens& c) {
  require_odd(n, "CyclicCode::from_canonical");
  const PolyZ4 modulus = PolyZ4::xn_minus_1(n);
  // the zero residue is entered as x^n - 1 so the divisibility chains stay
  // uniform
  auto normalize = [&](const PolyZ4& f) { return f.is_zero() ? modulus : f; };
  const PolyZ4 f1 = normalize(c.f1), f2 = normalize(c.f2);
  const PolyZ4 f3 = normalize(c.f3), f4 = normalize(c.f4);
  auto check_chain = [&](const PolyZ4& lower, const PolyZ4& upper) {
    if (!lower.is_monic() || !upper.is_monic())
      throw std::invalid_argument("from_canonical: generators must be monic");
    if (!upper.divisible_by(lower) || !modulus.divisible_by(upper))
      throw std::invalid_argument(
          "from_canonical: divisibility chain f_even | f_odd | x^n-1 violated");
  };
  check_chain(f2, f1);
  check_chain(f4, f3);
  const PolyR first = (to_r(f1) + to_r(f2 * Z4(2)) + times_u(c.f14 * Z4(2)))
                          .mod_xn_minus_1(n);
  const PolyR second = (times_u(f3) + times_u(f4 * Z4(2))).mod_xn_minus_1(n);
  if (!c.f13.has_value() || c.f13->is_zero())
    return from_generators(n, {first, second});

  const PolyR first_with = (first + times_u(*c.f13)).mod_xn_minus_1(n);
  CyclicCode with = from_generators(n, {first_with, second});
  CyclicCode without = from_generators(n, {first, second});
  if (with.equals(without)) {
    without.f13_reduced_ = true;
    return without;
  }
  return with;
}

bool CyclicCode::contains(std::span<const RElem> word) const {
  return in_row_space(basis_, embed_word(word, n_));
}

bool CyclicCode::equals(const CyclicCode& o) const {
  if (n_ != o.n_ || log2_size() != o.log2_size()) return false;
  for (size_t r = 0; r < basis_.reduced.rows; ++r)
    if (!in_row_space(o.basis_, basis_.reduced.row(r))) return false;
  return true;
}

bool CyclicCode::is_cyclic_closed() const {
  for (size_t r = 0; r < basis_.reduced.rows; ++r) {
    const std::vector<RElem> w = unembed_word(basis_.reduced.row(r), n_);
    if (!contains(sigma(w))) return false;
  }
  return true;
}

Z4CyclicCode CyclicCode::residue_code() const {
  MatZ4 m(0, size_t(n_));
  for (size_t r = 0; r < basis_.reduced.rows; ++r)
    m.append_row(basis_.reduced.row(r).subspan(0, size_t(n_)));
  return Z4CyclicCode(n_, standard_form(m));
}

Z4CyclicCode CyclicCode::torsion_code() const {
  const MatZ4 kernel = zero_prefix_kernel(basis_.reduced, size_t(n_));
  MatZ4 m(0, size_t(n_));
  for (size_t r = 0; r < kernel.rows; ++r)
    m.append_row(kernel.row(r).subspan(size_t(n_), size_t(n_)));
  return Z4CyclicCode(n_, standard_form(m));
}

std::optional<int> CyclicCode::min_lee_weight(int max_bits, int workers) const {
  if (log2_size() == 0) return std::nullopt;
  if (log2_size() > max_bits)
    throw TooLargeError("min_lee_weight: code has 2^" +
                        std::to_string(log2_size()) + " words, cap is 2^" +
                        std::to_string(max_bits) +
                        " (raise with --max-enum-bits or RU4_MAX_ENUM_BITS)");
  return detail::min_lee_weight_scan(detail::PackedCode::build(basis_, n_),
                                     workers);
}

int CyclicCode::nakayama_count() const {
  const int n = n_;
  return nakayama_generator_count(
      basis_.reduced,
      [n](std::span<const uint8_t> v) { return embedded_u_action(v, n); });
}

std::vector<std::vector<RElem>> CyclicCode::codewords(int max_bits) const {
  std::vector<std::vector<RElem>> out;
  out.reserve(size_t(1) << std::min(max_bits, log2_size()));
  for_each_module_element(basis_, max_bits, [&](const VecZ4& v) {
    out.push_back(unembed_word(v, n_));
  });
  return out;
}

bool Z4CyclicCode::contains(std::span<const uint8_t> v) const {
  return in_row_space(basis_, v);
}

bool Z4CyclicCode::equals(const Z4CyclicCode& o) const {
  if (n_ != o.n_ || log2_size() != o.log2_size()) return false;
  for (size_t r = 0; r < basis_.reduced.rows; ++r)
    if (!in_row_space(o.basis_, basis_.reduced.row(r))) return false;
  return true;
}

bool Z4CyclicCode::is_shift_closed() const {
  for (size_t r = 0; r < basis_.reduced.rows; ++r) {
    const auto row = basis_.reduced.row(r);
    VecZ4 shifted(row.size());
    for (size_t i = 0; i < row.size(); ++i)
      shifted[(i + 1) % row.size()] = row[i];
    if (!in_row_space(basis_, shifted)) return false;
  }
  return true;
}

Z4PairTable::Z4PairTable(const FactorizationResult& fact) {
  const int n = fact.n;
  const size_t m = fact.factor_count();
  for (uint32_t s1 = 0; s1 < (1u << m); ++s1) {
    PolyZ4 f = PolyZ4::one();
    for (size_t i = 0; i < m; ++i)
      if (s1 & (1u << i)) f = f * fact.z4_lifts[i];
    // submasks of s1, ascending
    uint32_t s2 = 0;
    for (;;) {
      PolyZ4 g = PolyZ4::one();
      for (size_t i = 0; i < m; ++i)
        if (s2 & (1u << i)) g = g * fact.z4_lifts[i];
      const PolyZ4 gen = (f + g * Z4(2)).mod_xn_minus_1(n);
      MatZ4 rows(0, size_t(n));
      const std::vector<Z4> padded = gen.padded(n);
      for (int k = 0; k < n; ++k) {
        VecZ4 row(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
          row[size_t((i + k) % n)] = uint8_t(padded[size_t(i)].value());
        rows.append_row(row);
      }
      entries_.push_back(Entry{f, g, Z4CyclicCode(n, standard_form(rows))});
      if (s2 == s1) break;
      s2 = (s2 - s1) & s1;  // next submask
    }
  }
}

const Z4PairTable::Entry* Z4PairTable::find(const Z4CyclicCode& code) const {
  for (const Entry& e : entries_)
    if (e.code.equals(code)) return &e;
  return nullptr;
}

int paper_rank_from_f3(int n, const PolyZ4& f3) { return n - f3.degree(); }

std::optional<int> paper_rank(const CyclicCode& code, const Z4PairTable& table) {
  const Z4PairTable::Entry* e = table.find(code.torsion_code());
  if (e == nullptr) return std::nullopt;
  return paper_rank_from_f3(code.n(), e->f);
}

uint64_t cyclic_code_count(int n) {
  const size_t m = factor_xn_minus_1_f2(n).size();
  uint64_t total = 1;
  for (size_t i = 0; i < m; ++i) total *= 7;
  return total;
}

void for_each_cyclic_code(
    const FactorizationResult& fact,
    const std::function<void(const CRTProfile&, const CyclicCode&)>& fn,
    uint64_t max_codes) {
  const size_t m = fact.factor_count();
  uint64_t total = 1;
  for (size_t i = 0; i < m; ++i) {
    total *= 7;
    if (total > max_codes)
      throw TooLargeError("for_each_cyclic_code: 7^" + std::to_string(m) +
                          " codes exceeds the budget of " +
                          std::to_string(max_codes));
  }
  CRTProfile profile;
  profile.n = fact.n;
  profile.labels.assign(m, IdealLabel::Zero);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t rest = idx;
    for (size_t i = 0; i < m; ++i) {
      profile.labels[i] = kAllIdealLabels[rest % 7];
      rest /= 7;
    }
    fn(profile, CyclicCode::from_crt_profile(profile, fact));
  }
}

}  // namespace ru4
