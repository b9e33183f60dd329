#pragma once
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

#include <cstdint>
#include <optional>
#include <vector>

#include "sealbid/bn254/fp_tower.hpp"

namespace sealbid::bn254 {

// Short Weierstrass points y^2 = x^3 + b (a = 0) in Jacobian coordinates.
// G1 lives over Fp with b = 3; G2 over Fp2 on the twist with b = 3/(9+u).
template <typename F>
struct JacobianPoint {
  F x, y, z;  // infinity encoded as z == 0

  static JacobianPoint infinity() {
    return {F::zero(), F::one(), F::zero()};
  }

  bool is_infinity() const { return z.is_zero(); }

  JacobianPoint dbl() const {
    if (is_infinity()) return *this;
    F a = x.square();
    F b = y.square();
    F c = b.square();
    F t = (x + b).square() - a - c;
    F d = t + t;
    F e = a + a + a;
    F f = e.square();
    F x3 = f - (d + d);
    F c8 = c.dbl().dbl().dbl();
    F y3 = e * (d - x3) - c8;
    F z3 = (y * z).dbl();
    return {x3, y3, z3};
  }

  JacobianPoint operator+(const JacobianPoint& o) const {
    if (is_infinity()) return o;
    if (o.is_infinity()) return *this;
    F z1z1 = z.square();
    F z2z2 = o.z.square();
    F u1 = x * z2z2;
    F u2 = o.x * z1z1;
    F s1 = y * z2z2 * o.z;
    F s2 = o.y * z1z1 * z;
    if (u1 == u2) {
      if (s1 == s2) return dbl();
      return infinity();
    }
    F h = u2 - u1;
    F i = (h + h).square();
    F j = h * i;
    F r = (s2 - s1).dbl();
    F v = u1 * i;
    F x3 = r.square() - j - (v + v);
    F y3 = r * (v - x3) - (s1 * j).dbl();
    F z3 = ((z + o.z).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
  }

  JacobianPoint operator-() const { return {x, -y, z}; }
  JacobianPoint operator-(const JacobianPoint& o) const { return *this + (-o); }

  // Double-and-add over the canonical scalar value.
  JacobianPoint scalar_mul(const Fr& k) const {
    std::uint8_t bytes[32];
    k.to_bytes(bytes);
    JacobianPoint acc = infinity();
    for (int i = 0; i < 32; ++i) {
      for (int bit = 7; bit >= 0; --bit) {
        acc = acc.dbl();
        if ((bytes[i] >> bit) & 1) acc = acc + *this;
      }
    }
    return acc;
  }

  void to_affine(F& ax, F& ay) const {
    F zinv = z.inverse();
    F zinv2 = zinv.square();
    ax = x * zinv2;
    ay = y * zinv2 * zinv;
  }

  bool operator==(const JacobianPoint& o) const {
    if (is_infinity()) return o.is_infinity();
    if (o.is_infinity()) return false;
    F z1z1 = z.square();
    F z2z2 = o.z.square();
    return x * z2z2 == o.x * z1z1 && y * z2z2 * o.z == o.y * z1z1 * z;
  }
  bool operator!=(const JacobianPoint& o) const { return !(*this == o); }
};

struct G1 : JacobianPoint<Fp> {
  G1() : JacobianPoint<Fp>(JacobianPoint<Fp>::infinity()) {}
  G1(const JacobianPoint<Fp>& p) : JacobianPoint<Fp>(p) {}

  static G1 generator();  // (1, 2)
  static Fp b() { return Fp::from_u64(3); }

  // 32-byte compressed encoding: big-endian x with flag bits in byte 0
  // (0x80: y is the lexicographically larger root, 0x40: infinity).
  std::vector<std::uint8_t> to_bytes() const;
  static std::optional<G1> from_bytes(std::span<const std::uint8_t> in);

  bool on_curve() const;
};

struct G2 : JacobianPoint<Fp2> {
  G2() : JacobianPoint<Fp2>(JacobianPoint<Fp2>::infinity()) {}
  G2(const JacobianPoint<Fp2>& p) : JacobianPoint<Fp2>(p) {}

  static G2 generator();
  static Fp2 b();  // 3 / (9 + u)

  // 64-byte compressed encoding: big-endian x1 || x0 with flags in byte 0.
  std::vector<std::uint8_t> to_bytes() const;
  // Decoding enforces curve and r-order subgroup membership.
  static std::optional<G2> from_bytes(std::span<const std::uint8_t> in);

  bool on_curve() const;
  bool in_subgroup() const;
};

inline G1 operator*(const Fr& k, const G1& p) { return G1(p.scalar_mul(k)); }
inline G2 operator*(const Fr& k, const G2& p) { return G2(p.scalar_mul(k)); }

}  // namespace sealbid::bn254
