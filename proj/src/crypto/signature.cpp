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

#include "sealbid/crypto/signature.hpp"

namespace sealbid::crypto {

namespace {

Fr signature_challenge(const G1& public_key, const G1& nonce_point,
                       std::span<const std::uint8_t> message) {
  ByteWriter w;
  w.str(PROTOCOL_VERSION);
  w.str("address-signature");
  Bytes pk = public_key.to_bytes();
  w.bytes(pk);
  Bytes np = nonce_point.to_bytes();
  w.bytes(np);
  w.bytes(message);
  return scalar_from_digest(Sha256::hash(w.data()));
}

}  // namespace

Bytes Signature::to_bytes() const {
  ByteWriter w;
  std::uint8_t buf[32];
  challenge.to_bytes(buf);
  w.raw(std::span<const std::uint8_t>(buf, 32));
  response.to_bytes(buf);
  w.raw(std::span<const std::uint8_t>(buf, 32));
  return w.take();
}

bool Signature::from_bytes(ByteReader& r, Signature& out) {
  std::vector<std::uint8_t> buf;
  if (!r.raw(32, buf) || !Fr::from_bytes(buf.data(), out.challenge)) return false;
  if (!r.raw(32, buf) || !Fr::from_bytes(buf.data(), out.response)) return false;
  return true;
}

SigningKey SigningKey::generate(Drbg& rng) {
  SigningKey k;
  k.secret = rng.nonzero_scalar();
  k.public_key = G1(k.secret * GroupContext::get().g1);
  return k;
}

Signature SigningKey::sign(std::span<const std::uint8_t> message, Drbg& rng) const {
  Fr nonce = rng.nonzero_scalar();
  G1 nonce_point = G1(nonce * GroupContext::get().g1);
  Fr c = signature_challenge(public_key, nonce_point, message);
  return {c, nonce + c * secret};
}

bool verify_signature(const G1& public_key, std::span<const std::uint8_t> message,
                      const Signature& sig) {
  // R = g^z - c*pk; accept iff the challenge recomputes
  G1 r = G1(sig.response * GroupContext::get().g1 - sig.challenge * public_key);
  return signature_challenge(public_key, r, message) == sig.challenge;
}

}  // namespace sealbid::crypto
