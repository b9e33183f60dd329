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

#include "sealbid/crypto/drbg.hpp"
#include "sealbid/crypto/core.hpp"

namespace sealbid::crypto {

// Schnorr signatures over G1; the verification key doubles as the ledger
// address of its owner.
struct Signature {
  Fr challenge;
  Fr response;

  Bytes to_bytes() const;
  static bool from_bytes(ByteReader& r, Signature& out);
};

struct SigningKey {
  Fr secret;
  G1 public_key;

  static SigningKey generate(Drbg& rng);

  Signature sign(std::span<const std::uint8_t> message, Drbg& rng) const;
};

bool verify_signature(const G1& public_key, std::span<const std::uint8_t> message,
                      const Signature& sig);

}  // namespace sealbid::crypto
