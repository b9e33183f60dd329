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

#include "sealbid/bn254/pairing.hpp"

namespace sealbid::bn254 {

namespace {

// 6z + 2 = 29793968203157093288, the optimal ate Miller loop count.
constexpr u64 ATE_LOOP[2] = {0x9d797039be763ba8ull, 0x0000000000000001ull};
constexpr int ATE_TOP_BIT = 64;  // bit length 65, iterate from bit 63 down

// (p - 1) / 6
constexpr u64 P_MINUS_1_OVER_6[4] = {0x34b017592414d4e1ull, 0xee9591c2e6bda1c2ull,
                                     0xf40d60f3c0403964ull, 0x0810b7bdd032f006ull};

// Base-p digits of (p^4 - p^2 + 1) / r, the hard part of the final
// exponentiation: hard = p^3 + HARD_L2 * p^2 + HARD_L1 * p + HARD_L0.
constexpr u64 HARD_L0[4] = {0x85989436d0f9fa91ull, 0x5cea24f6fd736beaull,
                            0x048b6e193fd84104ull, 0x30644e72e131a029ull};
constexpr u64 HARD_L1[4] = {0x138f3176606a30c5ull, 0x3b852988dae41fe4ull,
                            0x048b6e193fd84105ull, 0x30644e72e131a029ull};
constexpr u64 HARD_L2[4] = {0xf83e9682e87cfd46ull, 0x6f4d8248eeb859fbull, 0, 0};

struct FrobeniusConsts {
  Fp2 g1;  // xi^((p-1)/6), coefficient of w under x -> x^p
  Fp2 g2;  // g1^2, Fp6 v-coefficient and twisted x-coefficient
  Fp2 g3;  // g1^3, twisted y-coefficient
  Fp2 g4;  // g1^4, Fp6 v^2-coefficient
};

const FrobeniusConsts& frobenius_consts() {
  static const FrobeniusConsts c = [] {
    FrobeniusConsts out;
    out.g1 = Fp2::xi().pow(std::span<const u64>(P_MINUS_1_OVER_6, 4));
    out.g2 = out.g1 * out.g1;
    out.g3 = out.g2 * out.g1;
    out.g4 = out.g2 * out.g2;
    return out;
  }();
  return c;
}

Fp6 fp6_frobenius(const Fp6& a) {
  const auto& fc = frobenius_consts();
  return {a.c0.conjugate(), a.c1.conjugate() * fc.g2, a.c2.conjugate() * fc.g4};
}

struct AffineG2 {
  Fp2 x, y;
};

// Line through T (slope lambda on the twist) evaluated at P:
//   l(P) = yP - (lambda * xP) w + (lambda * Tx - Ty) w^3,  w^3 = v w
struct Line {
  Fp a0;   // yP
  Fp2 b0;  // -lambda * xP
  Fp2 b1;  // lambda * Tx - Ty
};

Line line_dbl(AffineG2& t, const Fp& px, const Fp& py) {
  Fp2 lambda = t.x.square().scale(Fp::from_u64(3)) * t.y.dbl().inverse();
  Fp2 x3 = lambda.square() - t.x.dbl();
  Fp2 y3 = lambda * (t.x - x3) - t.y;
  Line l{py, -(lambda.scale(px)), lambda * t.x - t.y};
  t = {x3, y3};
  return l;
}

Line line_add(AffineG2& t, const AffineG2& q, const Fp& px, const Fp& py) {
  Fp2 lambda = (q.y - t.y) * (q.x - t.x).inverse();
  Fp2 x3 = lambda.square() - t.x - q.x;
  Fp2 y3 = lambda * (t.x - x3) - t.y;
  Line l{py, -(lambda.scale(px)), lambda * t.x - t.y};
  t = {x3, y3};
  return l;
}

AffineG2 twist_frobenius(const AffineG2& q) {
  const auto& fc = frobenius_consts();
  return {q.x.conjugate() * fc.g2, q.y.conjugate() * fc.g3};
}

}  // namespace

Fp12 Fp12::frobenius() const {
  const auto& fc = frobenius_consts();
  Fp6 a = fp6_frobenius(c0);
  Fp6 b = fp6_frobenius(c1).scale(fc.g1);
  return {a, b};
}

Fp12 Fp12::mul_by_line(const Fp& a0, const Fp2& b0, const Fp2& b1) const {
  // (c0 + c1 w)(a + b w) = c0 a + (c1 b) v + (c0 b + c1 a) w
  // with a = a0 embedded in Fp2 and b = b0 + b1 v.
  Fp2 a{a0, Fp::zero()};
  auto mul_b = [&b0, &b1](const Fp6& y) {
    Fp2 v0 = y.c0 * b0;
    Fp2 v1 = y.c1 * b1;
    Fp2 mid = (y.c0 + y.c1) * (b0 + b1) - v0 - v1;
    return Fp6{v0 + (y.c2 * b1).mul_by_xi(), mid, v1 + y.c2 * b0};
  };
  Fp6 c0a = c0.scale(a);
  Fp6 c1a = c1.scale(a);
  Fp6 c0b = mul_b(c0);
  Fp6 c1b = mul_b(c1);
  return {c0a + c1b.mul_by_v(), c0b + c1a};
}

Fp12 miller_loop(const G1& p, const G2& q) {
  if (p.is_infinity() || q.is_infinity()) return Fp12::one();
  Fp px, py;
  p.to_affine(px, py);
  Fp2 qx, qy;
  q.to_affine(qx, qy);
  AffineG2 qa{qx, qy};
  AffineG2 t = qa;

  Fp12 f = Fp12::one();
  for (int i = ATE_TOP_BIT - 1; i >= 0; --i) {
    f = f.square();
    Line ld = line_dbl(t, px, py);
    f = f.mul_by_line(ld.a0, ld.b0, ld.b1);
    if ((ATE_LOOP[i / 64] >> (i % 64)) & 1) {
      Line la = line_add(t, qa, px, py);
      f = f.mul_by_line(la.a0, la.b0, la.b1);
    }
  }

  AffineG2 q1 = twist_frobenius(qa);
  AffineG2 q2 = twist_frobenius(q1);
  q2.y = -q2.y;  // add with -pi^2(Q)
  Line l1 = line_add(t, q1, px, py);
  f = f.mul_by_line(l1.a0, l1.b0, l1.b1);
  Line l2 = line_add(t, q2, px, py);
  f = f.mul_by_line(l2.a0, l2.b0, l2.b1);
  return f;
}

Fp12 final_exponentiation(const Fp12& f) {
  // easy part: f^((p^6 - 1)(p^2 + 1))
  Fp12 g = f.conjugate() * f.inverse();
  g = g.frobenius().frobenius() * g;

  // hard part via base-p digits: g^(p^3) * (g^(p^2))^L2 * (g^p)^L1 * g^L0,
  // evaluated with shared squarings over the three long digits.
  Fp12 gp = g.frobenius();
  Fp12 gp2 = gp.frobenius();
  Fp12 gp3 = gp2.frobenius();

  Fp12 table[8];
  table[0] = Fp12::one();
  table[1] = g;
  table[2] = gp;
  table[3] = g * gp;
  table[4] = gp2;
  table[5] = g * gp2;
  table[6] = gp * gp2;
  table[7] = table[3] * gp2;

  const u64* exps[3] = {HARD_L0, HARD_L1, HARD_L2};
  Fp12 acc = Fp12::one();
  bool started = false;
  for (int bit = 255; bit >= 0; --bit) {
    if (started) acc = acc.square();
    unsigned idx = 0;
    for (int j = 0; j < 3; ++j) {
      if ((exps[j][bit / 64] >> (bit % 64)) & 1) idx |= 1u << j;
    }
    if (idx != 0) {
      acc = started ? acc * table[idx] : table[idx];
      started = true;
    }
  }
  return acc * gp3;
}

Fp12 pairing(const G1& p, const G2& q) {
  return final_exponentiation(miller_loop(p, q));
}

Fp12 pairing_product(const std::vector<std::pair<G1, G2>>& pairs) {
  Fp12 acc = Fp12::one();
  for (const auto& [p, q] : pairs) {
    acc = acc * miller_loop(p, q);
  }
  return final_exponentiation(acc);
}

bool pairing_check(const G1& a1, const G2& a2, const G1& b1, const G2& b2) {
  // e(a1, a2) == e(b1, b2)  <=>  e(-a1, a2) * e(b1, b2) == 1
  return pairing_product({{G1(-a1), a2}, {b1, b2}}).is_one();
}

}  // namespace sealbid::bn254
