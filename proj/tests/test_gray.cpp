#include "doctest.h"
#include "ru4/gray.hpp"

#include <set>

#include "oracles.hpp"

using namespace ru4;

namespace {

RElem r(int a, int b) { return RElem(Z4(a), Z4(b)); }

std::vector<RElem> decode_vec(uint32_t code, size_t n) {
  std::vector<RElem> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = RElem::from_code((code >> (4 * i)) & 0xF);
  return v;
}

}  // namespace

TEST_CASE("the 2-adic table matches the published rows") {
  // (c, alpha, beta, gamma): (0,0,0,0) (1,1,0,1) (2,0,1,1) (3,1,1,0)
  const int want[4][3] = {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
  for (int c = 0; c < 4; ++c) {
    CHECK(GrayTable::alpha[size_t(c)] == want[c][0]);
    CHECK(GrayTable::beta[size_t(c)] == want[c][1]);
    CHECK(GrayTable::gamma[size_t(c)] == want[c][2]);
    CHECK(GrayTable::alpha[size_t(c)] + 2 * GrayTable::beta[size_t(c)] == c);
    CHECK((GrayTable::alpha[size_t(c)] + GrayTable::beta[size_t(c)] +
           GrayTable::gamma[size_t(c)]) % 2 == 0);
  }
}

TEST_CASE("psi, phi and Phi on single elements") {
  CHECK(psi(Z4(0)) == std::array<uint8_t, 2>{0, 0});
  CHECK(psi(Z4(1)) == std::array<uint8_t, 2>{0, 1});
  CHECK(psi(Z4(2)) == std::array<uint8_t, 2>{1, 1});
  CHECK(psi(Z4(3)) == std::array<uint8_t, 2>{1, 0});

  CHECK(phi_r_to_z4pair(r(0, 0)) == std::array<Z4, 2>{Z4(0), Z4(0)});
  CHECK(phi_r_to_z4pair(r(1, 1)) == std::array<Z4, 2>{Z4(1), Z4(2)});
  CHECK(phi_r_to_z4pair(r(2, 0)) == std::array<Z4, 2>{Z4(0), Z4(2)});

  CHECK(Phi(r(0, 0)).to_string() == "0000");
  CHECK(Phi(RElem::u()).to_string() == "0101");
  CHECK(Phi(r(2, 0)).to_string() == "0011");

  for (RElem x : all_r_elements())
    CHECK(hamming_weight(Phi(x)) == x.lee_weight());
}

TEST_CASE("Phi is an isometry: all 256 pairs") {
  for (RElem x : all_r_elements())
    for (RElem y : all_r_elements())
      CHECK(hamming_distance(Phi(x), Phi(y)) == (x - y).lee_weight());
}

TEST_CASE("Phi is a bijection onto the 16 4-bit words") {
  std::set<std::string> images;
  for (RElem x : all_r_elements()) images.insert(Phi(x).to_string());
  CHECK(images.size() == 16);
}

TEST_CASE("Phi_vec round-trips") {
  const std::vector<RElem> zeros(3);
  CHECK(Phi_vec(zeros).to_string() == "000000000000");

  std::vector<RElem> e(5);
  e[0] = RElem::u();
  CHECK(Phi_vec(e).to_string() == "01010000000000000000");

  // exhaustive n=2 sweep: 256 R^2 vectors, inverse recovers each
  for (uint32_t code = 0; code < 256; ++code) {
    const std::vector<RElem> v = decode_vec(code, 2);
    CHECK(Phi_vec_inverse(Phi_vec(v)) == v);
  }
  CHECK_THROWS_AS(Phi_vec_inverse(BinaryWord(6)), std::invalid_argument);
}

TEST_CASE("sigma and nu rotate the stated way") {
  const std::vector<RElem> v{r(1, 0), RElem::u(), r(2, 0)};
  CHECK(sigma(v) == std::vector<RElem>{r(2, 0), r(1, 0), RElem::u()});

  BinaryWord w(8);
  w.set_bit(0, true);  // 10000000
  CHECK(nu(w).to_string() == "00001000");
  // (b0..b7) -> (b4..b7, b0..b3)
  BinaryWord b(8);
  for (int i : {0, 2, 5}) b.set_bit(i, true);
  const BinaryWord nb = nu(b);
  for (int i = 0; i < 8; ++i) CHECK(nb.bit((i + 4) % 8) == b.bit(i));
  CHECK_THROWS_AS(nu(BinaryWord(6)), std::invalid_argument);
}

TEST_CASE("shift commutation Phi(sigma(v)) = nu(Phi(v))") {
  const std::vector<RElem> v{r(1, 1), r(2, 0), r(0, 3)};
  CHECK(Phi_vec(sigma(v)) == nu(Phi_vec(v)));

  // exhaustive at n=2 (all 256 vectors; the acceptance suite runs the
  // full 65,536-vector sweep at n=2 twice over via pairs)
  for (uint32_t code = 0; code < 256; ++code) {
    const std::vector<RElem> u2 = decode_vec(code, 2);
    CHECK(Phi_vec(sigma(u2)) == nu(Phi_vec(u2)));
  }

  // pseudo-random vectors at n=7
  oracle::Rng rng;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<RElem> w(7);
    for (auto& x : w) x = RElem::from_code(uint8_t(rng.below(16)));
    CHECK(Phi_vec(sigma(w)) == nu(Phi_vec(w)));
  }
}

TEST_CASE("Phi is not additive: recorded counterexample") {
  const BinaryWord one = Phi(r(1, 0));
  const BinaryWord two = Phi(r(2, 0));
  CHECK((one ^ one).to_string() == "0000");
  CHECK(two.to_string() == "0011");
  CHECK((one ^ one) != two);  // Phi(1)+Phi(1) != Phi(1+1)
}

TEST_CASE("vector weights and distances") {
  const std::vector<RElem> v{r(0, 2), r(0, 0)};
  CHECK(lee_weight_vec(v) == 4);
  const BinaryWord w = Phi_vec(v);
  CHECK(hamming_distance(w, w) == 0);
  CHECK_THROWS_AS(hamming_distance(BinaryWord(4), BinaryWord(8)),
                  std::invalid_argument);
  CHECK(BinaryWord::from_string("0101").bit(1));
  CHECK_THROWS_AS(BinaryWord::from_string("01x1"), std::invalid_argument);
}
