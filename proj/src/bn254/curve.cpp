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

#include "sealbid/bn254/curve.hpp"

namespace sealbid::bn254 {

namespace {

constexpr u64 P_PLUS_1_OVER_4[4] = {0x4f082305b61f3f52ull, 0x65e05aa45a1c72a3ull,
                                    0x6e14116da0605617ull, 0x0c19139cb84c680aull};
constexpr u64 P_MINUS_1_OVER_2[4] = {0x9e10460b6c3e7ea3ull, 0xcbc0b548b438e546ull,
                                     0xdc2822db40c0ac2eull, 0x183227397098d014ull};

constexpr std::uint8_t FLAG_Y_LARGE = 0x80;
constexpr std::uint8_t FLAG_INFINITY = 0x40;

bool fp_is_square(const Fp& a) {
  if (a.is_zero()) return true;
  return a.pow(std::span<const u64>(P_MINUS_1_OVER_2, 4)) == Fp::one();
}

}  // namespace

bool fp_sqrt(const Fp& a, Fp& out) {
  if (a.is_zero()) {
    out = Fp::zero();
    return true;
  }
  Fp r = a.pow(std::span<const u64>(P_PLUS_1_OVER_4, 4));
  if (r * r != a) return false;
  out = r;
  return true;
}

bool fp2_sqrt(const Fp2& a, Fp2& out) {
  if (a.is_zero()) {
    out = Fp2::zero();
    return true;
  }
  if (a.c1.is_zero()) {
    Fp r;
    if (fp_sqrt(a.c0, r)) {
      out = {r, Fp::zero()};
    } else {
      // a.c0 is a non-residue, so -a.c0 is square and sqrt = sqrt(-c0) * u
      if (!fp_sqrt(-a.c0, r)) return false;
      out = {Fp::zero(), r};
    }
    return true;
  }
  // Complex method: norm = c0^2 + c1^2 must be square in Fp.
  Fp alpha;
  if (!fp_sqrt(a.norm(), alpha)) return false;
  Fp two_inv = Fp::from_u64(2).inverse();
  Fp delta = (a.c0 + alpha) * two_inv;
  if (!fp_is_square(delta)) delta = (a.c0 - alpha) * two_inv;
  Fp x0;
  if (!fp_sqrt(delta, x0)) return false;
  if (x0.is_zero()) return false;
  Fp x1 = a.c1 * two_inv * x0.inverse();
  Fp2 cand{x0, x1};
  if (cand.square() != a) return false;
  out = cand;
  return true;
}

G1 G1::generator() {
  JacobianPoint<Fp> g{Fp::one(), Fp::from_u64(2), Fp::one()};
  return G1(g);
}

Fp2 G2::b() {
  return Fp2{Fp::from_u64(3), Fp::zero()} * Fp2::xi().inverse();
}

G2 G2::generator() {
  auto limb4 = [](u64 a, u64 b, u64 c, u64 d) {
    std::uint8_t bytes[32];
    u64 limbs[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i) {
      u64 v = limbs[3 - i];
      for (int j = 0; j < 8; ++j) bytes[i * 8 + j] = static_cast<std::uint8_t>(v >> (56 - 8 * j));
    }
    Fp out;
    bool ok = Fp::from_bytes(bytes, out);
    (void)ok;
    return out;
  };
  Fp2 x{limb4(0x46debd5cd992f6edull, 0x674322d4f75edaddull, 0x426a00665e5c4479ull,
              0x1800deef121f1e76ull),
        limb4(0x97e485b7aef312c2ull, 0xf1aa493335a9e712ull, 0x7260bfb731fb5d25ull,
              0x198e9393920d483aull)};
  Fp2 y{limb4(0x4ce6cc0166fa7daaull, 0xe3d1e7690c43d37bull, 0x4aab71808dcb408full,
              0x12c85ea5db8c6debull),
        limb4(0x55acdadcd122975bull, 0xbc4b313370b38ef3ull, 0xec9e99ad690c3395ull,
              0x090689d0585ff075ull)};
  JacobianPoint<Fp2> g{x, y, Fp2::one()};
  return G2(g);
}

bool G1::on_curve() const {
  if (is_infinity()) return true;
  Fp ax, ay;
  to_affine(ax, ay);
  return ay.square() == ax.square() * ax + b();
}

bool G2::on_curve() const {
  if (is_infinity()) return true;
  Fp2 ax, ay;
  to_affine(ax, ay);
  return ay.square() == ax.square() * ax + b();
}

bool G2::in_subgroup() const {
  if (is_infinity()) return true;
  Fr order_minus_1 = -Fr::one();
  // r*Q == 0  <=>  (r-1)*Q == -Q
  return scalar_mul(order_minus_1) == JacobianPoint<Fp2>(-*this);
}

std::vector<std::uint8_t> G1::to_bytes() const {
  std::vector<std::uint8_t> out(32, 0);
  if (is_infinity()) {
    out[0] = FLAG_INFINITY;
    return out;
  }
  Fp ax, ay;
  to_affine(ax, ay);
  ax.to_bytes(out.data());
  if (ay.is_lexicographically_largest()) out[0] |= FLAG_Y_LARGE;
  return out;
}

std::optional<G1> G1::from_bytes(std::span<const std::uint8_t> in) {
  if (in.size() != 32) return std::nullopt;
  std::uint8_t buf[32];
  std::memcpy(buf, in.data(), 32);
  std::uint8_t flags = buf[0] & 0xc0;
  buf[0] &= 0x3f;
  if (flags & FLAG_INFINITY) {
    for (int i = 0; i < 32; ++i) {
      if (buf[i] != 0) return std::nullopt;
    }
    return G1();
  }
  Fp x;
  if (!Fp::from_bytes(buf, x)) return std::nullopt;
  Fp y;
  if (!fp_sqrt(x.square() * x + b(), y)) return std::nullopt;
  if (y.is_lexicographically_largest() != ((flags & FLAG_Y_LARGE) != 0)) y = -y;
  JacobianPoint<Fp> p{x, y, Fp::one()};
  return G1(p);
}

std::vector<std::uint8_t> G2::to_bytes() const {
  std::vector<std::uint8_t> out(64, 0);
  if (is_infinity()) {
    out[0] = FLAG_INFINITY;
    return out;
  }
  Fp2 ax, ay;
  to_affine(ax, ay);
  ax.c1.to_bytes(out.data());
  ax.c0.to_bytes(out.data() + 32);
  if (ay.is_lexicographically_largest()) out[0] |= FLAG_Y_LARGE;
  return out;
}

std::optional<G2> G2::from_bytes(std::span<const std::uint8_t> in) {
  if (in.size() != 64) return std::nullopt;
  std::uint8_t buf[64];
  std::memcpy(buf, in.data(), 64);
  std::uint8_t flags = buf[0] & 0xc0;
  buf[0] &= 0x3f;
  if (flags & FLAG_INFINITY) {
    for (int i = 0; i < 64; ++i) {
      if (buf[i] != 0) return std::nullopt;
    }
    return G2();
  }
  Fp x1, x0;
  if (!Fp::from_bytes(buf, x1) || !Fp::from_bytes(buf + 32, x0)) return std::nullopt;
  Fp2 x{x0, x1};
  Fp2 y;
  if (!fp2_sqrt(x.square() * x + b(), y)) return std::nullopt;
  if (y.is_lexicographically_largest() != ((flags & FLAG_Y_LARGE) != 0)) y = -y;
  JacobianPoint<Fp2> p{x, y, Fp2::one()};
  G2 q(p);
  if (!q.in_subgroup()) return std::nullopt;
  return q;
}

}  // namespace sealbid::bn254
