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

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>

namespace sealbid::bn254 {

// Prime fields for the BN254 (alt_bn128) pairing setting, four 64-bit limbs
// in Montgomery form. Arithmetic is not constant-time.
//
//   base field  p = 36z^4 + 36z^3 + 24z^2 + 6z + 1
//   scalar field r = 36z^4 + 36z^3 + 18z^2 + 6z + 1,  z = 4965661367192848881

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct FpParams {
  static constexpr u64 MOD[4] = {0x3c208c16d87cfd47ull, 0x97816a916871ca8dull,
                                 0xb85045b68181585dull, 0x30644e72e131a029ull};
  static constexpr u64 R2[4] = {0xf32cfc5b538afa89ull, 0xb5e71911d44501fbull,
                                0x47ab1eff0a417ff6ull, 0x06d89f71cab8351full};
  static constexpr u64 ONE[4] = {0xd35d438dc58f0d9dull, 0x0a78eb28f5c70b3dull,
                                 0x666ea36f7879462cull, 0x0e0a77c19a07df2full};
  static constexpr u64 NINV = 0x87d20782e4866389ull;
};

struct FrParams {
  static constexpr u64 MOD[4] = {0x43e1f593f0000001ull, 0x2833e84879b97091ull,
                                 0xb85045b68181585dull, 0x30644e72e131a029ull};
  static constexpr u64 R2[4] = {0x1bb8e645ae216da7ull, 0x53fe3ab1e35c59e3ull,
                                0x8c49833d53bb8085ull, 0x0216d0b17f4e44a5ull};
  static constexpr u64 ONE[4] = {0xac96341c4ffffffbull, 0x36fc76959f60cd29ull,
                                 0x666ea36f7879462eull, 0x0e0a77c19a07df2full};
  static constexpr u64 NINV = 0xc2e1f593efffffffull;
};

template <typename Params>
class FieldElement {
 public:
  u64 limb[4];  // Montgomery residue, fully reduced

  constexpr FieldElement() : limb{0, 0, 0, 0} {}

  static FieldElement zero() { return FieldElement(); }

  static FieldElement one() {
    FieldElement r;
    std::memcpy(r.limb, Params::ONE, sizeof(r.limb));
    return r;
  }

  static FieldElement from_u64(u64 x) {
    FieldElement r;
    r.limb[0] = x;
    r.limb[1] = r.limb[2] = r.limb[3] = 0;
    mont_mul(r.limb, r.limb, Params::R2);
    return r;
  }

  // Interprets bytes as a big-endian integer and reduces mod the field order.
  static FieldElement from_bytes_reduce(std::span<const std::uint8_t> bytes) {
    const FieldElement base = from_u64(256);
    FieldElement acc = zero();
    for (std::uint8_t b : bytes) {
      acc = acc * base + from_u64(b);
    }
    return acc;
  }

  // Canonical 32-byte big-endian encoding; fails (returns false) on
  // non-canonical input when decoding.
  void to_bytes(std::uint8_t out[32]) const {
    u64 c[4];
    from_mont(c, limb);
    for (int i = 0; i < 4; ++i) {
      u64 v = c[3 - i];
      for (int j = 0; j < 8; ++j) {
        out[i * 8 + j] = static_cast<std::uint8_t>(v >> (56 - 8 * j));
      }
    }
  }

  static bool from_bytes(const std::uint8_t in[32], FieldElement& out) {
    u64 c[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      u64 v = 0;
      for (int j = 0; j < 8; ++j) {
        v = (v << 8) | in[i * 8 + j];
      }
      c[3 - i] = v;
    }
    if (!less_than(c, Params::MOD)) return false;
    mont_mul(out.limb, c, Params::R2);
    return true;
  }

  bool is_zero() const {
    return (limb[0] | limb[1] | limb[2] | limb[3]) == 0;
  }

  bool operator==(const FieldElement& o) const {
    return std::memcmp(limb, o.limb, sizeof(limb)) == 0;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement operator+(const FieldElement& o) const {
    FieldElement r;
    add(r.limb, limb, o.limb);
    return r;
  }
  FieldElement operator-(const FieldElement& o) const {
    FieldElement r;
    sub(r.limb, limb, o.limb);
    return r;
  }
  FieldElement operator*(const FieldElement& o) const {
    FieldElement r;
    mont_mul(r.limb, limb, o.limb);
    return r;
  }
  FieldElement operator-() const {
    FieldElement r;
    if (is_zero()) return *this;
    sub(r.limb, Params::MOD, limb);
    return r;
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement square() const { return *this * *this; }

  FieldElement dbl() const { return *this + *this; }

  // Square-and-multiply over a little-endian limb exponent.
  FieldElement pow(std::span<const u64> exp) const {
    FieldElement result = one();
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

  FieldElement inverse() const {  // Fermat; caller must not pass zero
    u64 e[4];
    sub_nocarry(e, Params::MOD, 2);
    return pow(std::span<const u64>(e, 4));
  }

  // Compares canonical integer values.
  int cmp_canonical(const FieldElement& o) const {
    u64 a[4], b[4];
    from_mont(a, limb);
    from_mont(b, o.limb);
    for (int i = 3; i >= 0; --i) {
      if (a[i] < b[i]) return -1;
      if (a[i] > b[i]) return 1;
    }
    return 0;
  }

  // True when the canonical value exceeds (MOD-1)/2, i.e. this > -this.
  bool is_lexicographically_largest() const {
    return cmp_canonical(-*this) > 0;
  }

  u64 to_u64_canonical() const {  // low limb of canonical value
    u64 c[4];
    from_mont(c, limb);
    return c[0];
  }

 private:
  static bool less_than(const u64 a[4], const u64 b[4]) {
    for (int i = 3; i >= 0; --i) {
      if (a[i] < b[i]) return true;
      if (a[i] > b[i]) return false;
    }
    return false;
  }

  static void sub_nocarry(u64 out[4], const u64 a[4], u64 small) {
    u128 borrow = small;
    for (int i = 0; i < 4; ++i) {
      u128 cur = (u128)a[i] - borrow;
      out[i] = (u64)cur;
      borrow = (cur >> 64) ? 1 : 0;
    }
  }

  static void add(u64 out[4], const u64 a[4], const u64 b[4]) {
    u128 carry = 0;
    u64 t[4];
    for (int i = 0; i < 4; ++i) {
      u128 cur = (u128)a[i] + b[i] + carry;
      t[i] = (u64)cur;
      carry = cur >> 64;
    }
    if (carry || !less_than(t, Params::MOD)) {
      u128 borrow = 0;
      for (int i = 0; i < 4; ++i) {
        u128 cur = (u128)t[i] - Params::MOD[i] - borrow;
        out[i] = (u64)cur;
        borrow = (cur >> 64) ? 1 : 0;
      }
    } else {
      std::memcpy(out, t, sizeof(t));
    }
  }

  static void sub(u64 out[4], const u64 a[4], const u64 b[4]) {
    u128 borrow = 0;
    u64 t[4];
    for (int i = 0; i < 4; ++i) {
      u128 cur = (u128)a[i] - b[i] - borrow;
      t[i] = (u64)cur;
      borrow = (cur >> 64) ? 1 : 0;
    }
    if (borrow) {
      u128 carry = 0;
      for (int i = 0; i < 4; ++i) {
        u128 cur = (u128)t[i] + Params::MOD[i] + carry;
        out[i] = (u64)cur;
        carry = cur >> 64;
      }
    } else {
      std::memcpy(out, t, sizeof(t));
    }
  }

  // CIOS Montgomery multiplication.
  static void mont_mul(u64 out[4], const u64 a[4], const u64 b[4]) {
    u64 t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      u128 carry = 0;
      for (int j = 0; j < 4; ++j) {
        u128 cur = (u128)a[i] * b[j] + t[j] + carry;
        t[j] = (u64)cur;
        carry = cur >> 64;
      }
      u128 cur = (u128)t[4] + carry;
      t[4] = (u64)cur;
      t[5] = (u64)(cur >> 64);

      u64 m = t[0] * Params::NINV;
      cur = (u128)m * Params::MOD[0] + t[0];
      carry = cur >> 64;
      for (int j = 1; j < 4; ++j) {
        cur = (u128)m * Params::MOD[j] + t[j] + carry;
        t[j - 1] = (u64)cur;
        carry = cur >> 64;
      }
      cur = (u128)t[4] + carry;
      t[3] = (u64)cur;
      t[4] = t[5] + (u64)(cur >> 64);
      t[5] = 0;
    }
    if (t[4] || !less_than(t, Params::MOD)) {
      u128 borrow = 0;
      for (int i = 0; i < 4; ++i) {
        u128 cur = (u128)t[i] - Params::MOD[i] - borrow;
        out[i] = (u64)cur;
        borrow = (cur >> 64) ? 1 : 0;
      }
    } else {
      std::memcpy(out, t, 4 * sizeof(u64));
    }
  }

  static void from_mont(u64 out[4], const u64 a[4]) {
    u64 one_raw[4] = {1, 0, 0, 0};
    mont_mul(out, a, one_raw);
  }
};

using Fp = FieldElement<FpParams>;
using Fr = FieldElement<FrParams>;

// sqrt in Fp via the p = 3 (mod 4) exponent; returns false if no root exists.
bool fp_sqrt(const Fp& a, Fp& out);

inline const u64 FR_MOD_MINUS_2[4] = {0x43e1f593efffffffull, 0x2833e84879b97091ull,
                                      0xb85045b68181585dull, 0x30644e72e131a029ull};

inline Fr fr_inverse(const Fr& a) { return a.pow(std::span<const u64>(FR_MOD_MINUS_2, 4)); }

}  // namespace sealbid::bn254
