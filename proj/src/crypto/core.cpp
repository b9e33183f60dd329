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

#include "sealbid/crypto/core.hpp"

namespace sealbid::crypto {

using bn254::Fp;

G1 hash_to_group(const std::string& label, std::span<const std::uint8_t> payload) {
  if (label.empty()) {
    throw std::invalid_argument("hash_to_group: label must be non-empty");
  }
  for (std::uint32_t counter = 0;; ++counter) {
    ByteWriter w;
    w.str("sealbid-htg");
    w.str(label);
    w.bytes(payload);
    w.u32(counter);
    Digest d = Sha256::hash(w.data());
    Fp x;
    if (!Fp::from_bytes(d.data(), x)) continue;
    Fp y;
    if (!bn254::fp_sqrt(x.square() * x + G1::b(), y)) continue;
    // canonical root: take the lexicographically smaller one
    if (y.is_lexicographically_largest()) y = -y;
    bn254::JacobianPoint<Fp> p{x, y, Fp::one()};
    return G1(p);  // cofactor of G1 is 1, any curve point has order r
  }
}

G1 hash_to_group(const std::string& label, const std::string& payload) {
  return hash_to_group(label, std::span<const std::uint8_t>(
                                  reinterpret_cast<const std::uint8_t*>(payload.data()),
                                  payload.size()));
}

const GroupContext& GroupContext::get() {
  static const GroupContext ctx = [] {
    GroupContext c;
    c.g1 = G1::generator();
    c.g2 = G2::generator();
    c.h1 = hash_to_group("pedersen-h", std::string(CURVE_ID));
    c.curve_id = CURVE_ID;
    return c;
  }();
  return ctx;
}

PedersenCommitment pedersen_commit(const Fr& value, const Fr& blinding) {
  const auto& ctx = GroupContext::get();
  return {G1(value * ctx.g1 + blinding * ctx.h1)};
}

bool pedersen_verify_open(const PedersenCommitment& c, const Fr& value, const Fr& blinding) {
  return pedersen_commit(value, blinding).point == c.point;
}

Fr scalar_from_digest(const Digest& d) {
  return Fr::from_bytes_reduce(d);
}

}  // namespace sealbid::crypto
