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

#include "sealbid/bn254/fp.hpp"

namespace sealbid::bn254 {

// Extension tower:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = 9 + u
//   Fp12 = Fp6[w] / (w^2 - v)

struct Fp2 {
  Fp c0, c1;  // c0 + c1*u

  static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }
  static Fp2 xi() { return {Fp::from_u64(9), Fp::one()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp2& o) const { return !(*this == o); }

  Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }

  Fp2 operator*(const Fp2& o) const {
    // Karatsuba over u^2 = -1
    Fp m0 = c0 * o.c0;
    Fp m1 = c1 * o.c1;
    Fp m2 = (c0 + c1) * (o.c0 + o.c1);
    return {m0 - m1, m2 - m0 - m1};
  }

  Fp2 square() const {
    Fp a = c0 + c1;
    Fp b = c0 - c1;
    Fp m = c0 * c1;
    return {a * b, m + m};
  }

  Fp2 scale(const Fp& s) const { return {c0 * s, c1 * s}; }

  Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }

  Fp2 conjugate() const { return {c0, -c1}; }

  Fp norm() const { return c0 * c0 + c1 * c1; }

  Fp2 inverse() const {  // (c0 - c1 u) / (c0^2 + c1^2)
    Fp n = norm().inverse();
    return {c0 * n, -(c1 * n)};
  }

  Fp2 mul_by_xi() const {  // * (9 + u)
    Fp nine = Fp::from_u64(9);
    return {c0 * nine - c1, c1 * nine + c0};
  }

  Fp2 pow(std::span<const u64> exp) const {
    Fp2 result = one();
    bool started = false;
    for (int i = static_cast<int>(exp.size()) - 1; i >= 0; --i) {
      for (int bit = 63; bit >= 0; --bit) {
        if (started) result = result.square();
        if ((exp[i] >> bit) & 1) {
          if (!started) {
            result = *this;
            started = true;
          } else {
            result = result * *this;
          }
        }
      }
    }
    return result;
  }

  // Lexicographic comparison of canonical (c1, c0) pairs.
  int cmp_canonical(const Fp2& o) const {
    int c = c1.cmp_canonical(o.c1);
    if (c != 0) return c;
    return c0.cmp_canonical(o.c0);
  }
  bool is_lexicographically_largest() const { return cmp_canonical(-*this) > 0; }
};

// sqrt in Fp2; returns false when the element is a non-residue.
bool fp2_sqrt(const Fp2& a, Fp2& out);

struct Fp6 {
  Fp2 c0, c1, c2;  // c0 + c1*v + c2*v^2

  static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fp6& o) const {
    return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
  }

  Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }

  Fp6 operator*(const Fp6& o) const {
    Fp2 v0 = c0 * o.c0;
    Fp2 v1 = c1 * o.c1;
    Fp2 v2 = c2 * o.c2;
    Fp2 r0 = v0 + ((c1 + c2) * (o.c1 + o.c2) - v1 - v2).mul_by_xi();
    Fp2 r1 = (c0 + c1) * (o.c0 + o.c1) - v0 - v1 + v2.mul_by_xi();
    Fp2 r2 = (c0 + c2) * (o.c0 + o.c2) - v0 - v2 + v1;
    return {r0, r1, r2};
  }

  Fp6 square() const { return *this * *this; }

  Fp6 mul_by_v() const {  // (c0,c1,c2) -> (xi*c2, c0, c1)
    return {c2.mul_by_xi(), c0, c1};
  }

  Fp6 scale(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

  Fp6 inverse() const {
    Fp2 a0 = c0.square() - (c1 * c2).mul_by_xi();
    Fp2 a1 = c2.square().mul_by_xi() - c0 * c1;
    Fp2 a2 = c1.square() - c0 * c2;
    Fp2 t = (c0 * a0 + (c2 * a1).mul_by_xi() + (c1 * a2).mul_by_xi()).inverse();
    return {a0 * t, a1 * t, a2 * t};
  }
};

struct Fp12 {
  Fp6 c0, c1;  // c0 + c1*w

  static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp12& o) const { return !(*this == o); }
  bool is_one() const { return *this == one(); }

  Fp12 operator*(const Fp12& o) const {
    Fp6 a = c0 * o.c0;
    Fp6 b = c1 * o.c1;
    Fp6 cross = (c0 + c1) * (o.c0 + o.c1) - a - b;
    return {a + b.mul_by_v(), cross};
  }

  Fp12 square() const {
    Fp6 m = c0 * c1;
    Fp6 s = (c0 + c1) * (c0 + c1.mul_by_v());
    return {s - m - m.mul_by_v(), m + m};
  }

  Fp12 conjugate() const { return {c0, -c1}; }

  Fp12 inverse() const {
    Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  Fp12 pow(std::span<const u64> exp) const {
    Fp12 result = one();
    bool started = false;
    for (int i = static_cast<int>(exp.size()) - 1; i >= 0; --i) {
      for (int bit = 63; bit >= 0; --bit) {
        if (started) result = result.square();
        if ((exp[i] >> bit) & 1) {
          if (!started) {
            result = *this;
            started = true;
          } else {
            result = result * *this;
          }
        }
      }
    }
    return result;
  }

  // Frobenius endomorphism x -> x^p (coefficient tables in pairing.cpp).
  Fp12 frobenius() const;

  // Sparse multiplication by a Miller-loop line a0 + (b0 + b1*v)*w with
  // a0 in Fp embedded in Fp2.
  Fp12 mul_by_line(const Fp& a0, const Fp2& b0, const Fp2& b1) const;
};

}  // namespace sealbid::bn254
