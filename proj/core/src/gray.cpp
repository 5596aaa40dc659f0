#include "ru4/gray.hpp"

#include <bit>
#include <stdexcept>

namespace ru4 {

int BinaryWord::hamming_weight() const noexcept {
  int w = 0;
  for (uint64_t x : w_) w += std::popcount(x);
  return w;
}

BinaryWord BinaryWord::operator^(const BinaryWord& o) const {
  if (nbits_ != o.nbits_)
    throw std::invalid_argument("BinaryWord: xor of different lengths");
  BinaryWord r(nbits_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] ^ o.w_[i];
  return r;
}

std::string BinaryWord::to_string() const {
  std::string s(size_t(nbits_), '0');
  for (int i = 0; i < nbits_; ++i)
    if (bit(i)) s[size_t(i)] = '1';
  return s;
}

BinaryWord BinaryWord::from_string(const std::string& bits) {
  BinaryWord w(int(bits.size()));
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw std::invalid_argument("BinaryWord::from_string: bad character");
    w.set_bit(int(i), bits[i] == '1');
  }
  return w;
}

BinaryWord Phi(RElem x) {
  BinaryWord w(4);
  const auto [z0, z1] = phi_r_to_z4pair(x);
  const auto p0 = psi(z0);
  const auto p1 = psi(z1);
  w.set_bit(0, p0[0]);
  w.set_bit(1, p0[1]);
  w.set_bit(2, p1[0]);
  w.set_bit(3, p1[1]);
  return w;
}

BinaryWord Phi_vec(std::span<const RElem> v) {
  BinaryWord w(int(4 * v.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    const auto [z0, z1] = phi_r_to_z4pair(v[i]);
    const auto p0 = psi(z0);
    const auto p1 = psi(z1);
    w.set_bit(int(4 * i + 0), p0[0]);
    w.set_bit(int(4 * i + 1), p0[1]);
    w.set_bit(int(4 * i + 2), p1[0]);
    w.set_bit(int(4 * i + 3), p1[1]);
  }
  return w;
}

namespace {

// psi^-1 on a 2-bit lane (beta | gamma<<1): 0->0, 2->1, 3->2, 1->3.
constexpr std::array<uint8_t, 4> kPsiInv{0, 3, 1, 2};

}  // namespace

std::vector<RElem> Phi_vec_inverse(const BinaryWord& w) {
  if (w.size() % 4 != 0)
    throw std::invalid_argument("Phi_vec_inverse: length must be 4n");
  std::vector<RElem> v(size_t(w.size() / 4));
  for (size_t i = 0; i < v.size(); ++i) {
    const int lane0 = int(w.bit(int(4 * i))) | (int(w.bit(int(4 * i + 1))) << 1);
    const int lane1 =
        int(w.bit(int(4 * i + 2))) | (int(w.bit(int(4 * i + 3))) << 1);
    const Z4 b(kPsiInv[size_t(lane0)]);
    const Z4 ab(kPsiInv[size_t(lane1)]);
    v[i] = RElem(ab - b, b);
  }
  return v;
}

std::vector<RElem> sigma(std::span<const RElem> v) {
  std::vector<RElem> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[(i + v.size() - 1) % v.size()];
  return out;
}

BinaryWord nu(const BinaryWord& w) {
  if (w.size() < 4 || w.size() % 4 != 0)
    throw std::invalid_argument("nu: length must be a positive multiple of 4");
  BinaryWord out(w.size());
  for (int j = 0; j < w.size(); ++j)
    out.set_bit(j, w.bit((j + w.size() - 4) % w.size()));
  return out;
}

int lee_weight_vec(std::span<const RElem> v) {
  int w = 0;
  for (RElem x : v) w += x.lee_weight();
  return w;
}

int hamming_weight(const BinaryWord& w) { return w.hamming_weight(); }

int hamming_distance(const BinaryWord& w1, const BinaryWord& w2) {
  if (w1.size() != w2.size())
    throw std::invalid_argument("hamming_distance: length mismatch");
  return (w1 ^ w2).hamming_weight();
}

}  // namespace ru4
