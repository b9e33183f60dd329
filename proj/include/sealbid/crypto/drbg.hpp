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
#include <string>

#include "sealbid/bn254/fp.hpp"
#include "sealbid/crypto/encoding.hpp"
#include "sealbid/crypto/sha256.hpp"

namespace sealbid::crypto {

// SHA-256 counter-mode generator. Deterministic given the seed; scenario
// replays depend on that.
class Drbg {
 public:
  explicit Drbg(std::uint64_t seed, const std::string& domain = "root") {
    ByteWriter w;
    w.str("sealbid-drbg");
    w.str(domain);
    w.u64(seed);
    key_ = Sha256::hash(w.data());
  }

  explicit Drbg(const Digest& key) : key_(key) {}

  // Independent child stream; drawing from the child does not advance this one.
  Drbg fork(const std::string& label) {
    ByteWriter w;
    w.raw(key_);
    w.str("fork");
    w.str(label);
    w.u64(counter_++);
    return Drbg(Sha256::hash(w.data()));
  }

  Bytes bytes(std::size_t n) {
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
      ByteWriter w;
      w.raw(key_);
      w.u64(counter_++);
      Digest d = Sha256::hash(w.data());
      for (std::uint8_t b : d) {
        if (out.size() == n) break;
        out.push_back(b);
      }
    }
    return out;
  }

  std::uint64_t next_u64() {
    Bytes b = bytes(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
    return v;
  }

  // Uniform in [0, bound)
  std::uint64_t uniform(std::uint64_t bound) { return next_u64() % bound; }

  bn254::Fr scalar() {
    Bytes b = bytes(64);  // 512 bits, reduction bias negligible
    return bn254::Fr::from_bytes_reduce(b);
  }

  bn254::Fr nonzero_scalar() {
    for (;;) {
      bn254::Fr s = scalar();
      if (!s.is_zero()) return s;
    }
  }

 private:
  Digest key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sealbid::crypto
