//------------------------------------------------------------------------------
//
//   Copyright 2026 The sealbid authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sealbid/bn254/pairing.hpp"
#include "sealbid/crypto/drbg.hpp"

using namespace sealbid::bn254;
using sealbid::crypto::Drbg;

TEST_CASE("fp arithmetic basics") {
  Fp two = Fp::from_u64(2);
  Fp three = Fp::from_u64(3);
  CHECK(two + three == Fp::from_u64(5));
  CHECK(three - two == Fp::one());
  CHECK(two * three == Fp::from_u64(6));
  CHECK((-Fp::one()) + Fp::one() == Fp::zero());
  CHECK(Fp::from_u64(1234567).inverse() * Fp::from_u64(1234567) == Fp::one());
}

TEST_CASE("fp field laws on random elements") {
  Drbg rng(7);
  for (int i = 0; i < 200; ++i) {
    auto draw = [&rng] {
      auto b = rng.bytes(48);
      return Fp::from_bytes_reduce(b);
    };
    Fp a = draw(), b = draw(), c = draw();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Fp::one());
  }
}

TEST_CASE("fp byte round trip is canonical") {
  Drbg rng(8);
  for (int i = 0; i < 50; ++i) {
    auto bytes = rng.bytes(48);
    Fp a = Fp::from_bytes_reduce(bytes);
    std::uint8_t buf[32];
    a.to_bytes(buf);
    Fp back;
    REQUIRE(Fp::from_bytes(buf, back));
    CHECK(back == a);
  }
  // over-order input rejected
  std::uint8_t all_ff[32];
  std::memset(all_ff, 0xff, 32);
  Fp out;
  CHECK_FALSE(Fp::from_bytes(all_ff, out));
}

TEST_CASE("fr matches known order relation") {
  // r - 1 == -1 in Fr
  std::uint8_t buf[32];
  (-Fr::one()).to_bytes(buf);
  Fr back;
  REQUIRE(Fr::from_bytes(buf, back));
  CHECK(back + Fr::one() == Fr::zero());
}

TEST_CASE("fp sqrt") {
  Drbg rng(9);
  int square_count = 0;
  for (int i = 0; i < 50; ++i) {
    auto b = rng.bytes(48);
    Fp a = Fp::from_bytes_reduce(b);
    Fp s = a * a;
    Fp root;
    REQUIRE(fp_sqrt(s, root));
    CHECK(root * root == s);
    Fp maybe;
    if (fp_sqrt(a, maybe)) {
      ++square_count;
      CHECK(maybe * maybe == a);
    }
  }
  CHECK(square_count > 5);   // roughly half expected
  CHECK(square_count < 45);
}

TEST_CASE("fp2 laws and sqrt") {
  Drbg rng(10);
  auto draw = [&rng] {
    auto b0 = rng.bytes(48);
    auto b1 = rng.bytes(48);
    return Fp2{Fp::from_bytes_reduce(b0), Fp::from_bytes_reduce(b1)};
  };
  for (int i = 0; i < 100; ++i) {
    Fp2 a = draw(), b = draw();
    CHECK((a * b) * a.inverse() == b * (a * a.inverse()));
    CHECK(a.square() == a * a);
    Fp2 root;
    REQUIRE(fp2_sqrt(a.square(), root));
    CHECK(root.square() == a.square());
  }
  CHECK(Fp2::xi() * Fp2::xi().inverse() == Fp2::one());
}

TEST_CASE("fp12 laws") {
  Drbg rng(11);
  auto draw2 = [&rng] {
    auto b0 = rng.bytes(48);
    auto b1 = rng.bytes(48);
    return Fp2{Fp::from_bytes_reduce(b0), Fp::from_bytes_reduce(b1)};
  };
  auto draw12 = [&] {
    return Fp12{{draw2(), draw2(), draw2()}, {draw2(), draw2(), draw2()}};
  };
  for (int i = 0; i < 20; ++i) {
    Fp12 a = draw12(), b = draw12();
    CHECK(a * a.inverse() == Fp12::one());
    CHECK(a.square() == a * a);
    CHECK((a * b) * b.inverse() == a);
  }
  // frobenius applied 12 times is the identity
  Fp12 a = draw12();
  Fp12 f = a;
  for (int i = 0; i < 12; ++i) f = f.frobenius();
  CHECK(f == a);
}

TEST_CASE("g1 group structure") {
  G1 g = G1::generator();
  CHECK(g.on_curve());
  CHECK(G1(g + g) == G1(g.dbl()));
  CHECK(Fr::from_u64(3) * g == G1(g.dbl() + g));
  // order r annihilates the generator
  G1 rg = (-Fr::one()) * g;
  CHECK(G1(rg + g).is_infinity());
}

TEST_CASE("g2 group structure") {
  G2 g = G2::generator();
  CHECK(g.on_curve());
  CHECK(g.in_subgroup());
  G2 rg = (-Fr::one()) * g;
  CHECK(G2(rg + g).is_infinity());
}

TEST_CASE("g1 serialization round trip") {
  Drbg rng(12);
  G1 g = G1::generator();
  for (int i = 0; i < 20; ++i) {
    G1 p = G1(rng.scalar() * g);
    auto bytes = p.to_bytes();
    REQUIRE(bytes.size() == 32);
    auto back = G1::from_bytes(bytes);
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  auto inf_bytes = G1().to_bytes();
  auto inf = G1::from_bytes(inf_bytes);
  REQUIRE(inf.has_value());
  CHECK(inf->is_infinity());
}

TEST_CASE("g2 serialization round trip") {
  Drbg rng(13);
  G2 g = G2::generator();
  for (int i = 0; i < 8; ++i) {
    G2 p = G2(rng.scalar() * g);
    auto bytes = p.to_bytes();
    REQUIRE(bytes.size() == 64);
    auto back = G2::from_bytes(bytes);
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
}

TEST_CASE("g2 decoding rejects points outside the prime-order subgroup") {
  // The twist curve has a large cofactor, so most on-curve x coordinates give
  // points outside the r-subgroup; all of them must fail to decode.
  Drbg rng(19);
  int tried = 0, on_curve = 0;
  while (on_curve < 4 && tried < 200) {
    ++tried;
    auto b0 = rng.bytes(48);
    auto b1 = rng.bytes(48);
    Fp2 x{Fp::from_bytes_reduce(b0), Fp::from_bytes_reduce(b1)};
    Fp2 y;
    if (!fp2_sqrt(x.square() * x + G2::b(), y)) continue;
    ++on_curve;
    JacobianPoint<Fp2> raw{x, y, Fp2::one()};
    G2 q(raw);
    REQUIRE(q.on_curve());
    if (q.in_subgroup()) continue;  // astronomically unlikely

    std::vector<std::uint8_t> bytes(64, 0);
    x.c1.to_bytes(bytes.data());
    x.c0.to_bytes(bytes.data() + 32);
    if (y.is_lexicographically_largest()) bytes[0] |= 0x80;
    CHECK_FALSE(G2::from_bytes(bytes).has_value());
  }
  CHECK(on_curve >= 4);
}

TEST_CASE("g1 decoding rejects x without a curve point and non-canonical field bytes") {
  Drbg rng(20);
  int rejected = 0, accepted = 0;
  for (int i = 0; i < 40; ++i) {
    auto bytes = rng.bytes(32);
    bytes[0] &= 0x3f;
    auto p = G1::from_bytes(bytes);
    if (p.has_value()) {
      ++accepted;
      CHECK(p->on_curve());
    } else {
      ++rejected;
    }
  }
  CHECK(rejected > 0);  // about half of all x values have no point
  CHECK(accepted > 0);
}

TEST_CASE("pairing is non-degenerate and bilinear") {
  G1 g1 = G1::generator();
  G2 g2 = G2::generator();
  Fp12 e = pairing(g1, g2);
  CHECK(e != Fp12::one());

  Drbg rng(14);
  Fr a = rng.scalar();
  Fr b = rng.scalar();
  Fp12 lhs = pairing(a * g1, b * g2);

  // e(aP, bQ) == e(P, Q)^(ab)
  Fr ab = a * b;
  std::uint8_t buf[32];
  ab.to_bytes(buf);
  u64 limbs[4];
  for (int i = 0; i < 4; ++i) {
    u64 v = 0;
    for (int j = 0; j < 8; ++j) v = (v << 8) | buf[i * 8 + j];
    limbs[3 - i] = v;
  }
  Fp12 rhs = e.pow(std::span<const u64>(limbs, 4));
  CHECK(lhs == rhs);
}

TEST_CASE("pairing is additive in the first argument") {
  Drbg rng(15);
  G1 g1 = G1::generator();
  G2 g2 = G2::generator();
  G1 p1 = G1(rng.scalar() * g1);
  G1 p2 = G1(rng.scalar() * g1);
  Fp12 lhs = pairing(G1(p1 + p2), g2);
  Fp12 rhs = pairing(p1, g2) * pairing(p2, g2);
  CHECK(lhs == rhs);
}

TEST_CASE("pairing product check") {
  Drbg rng(16);
  G1 g1 = G1::generator();
  G2 g2 = G2::generator();
  Fr a = rng.scalar();
  // e(a*g1, g2) == e(g1, a*g2)
  CHECK(pairing_check(a * g1, g2, g1, a * g2));
  CHECK_FALSE(pairing_check(a * g1, g2, g1, (a + Fr::one()) * g2));
}

TEST_CASE("pairing with infinity is one") {
  CHECK(pairing(G1(), G2::generator()) == Fp12::one());
  CHECK(pairing(G1::generator(), G2()) == Fp12::one());
}
