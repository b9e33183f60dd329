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

#include <stdexcept>
#include <string>

#include "sealbid/bn254/pairing.hpp"
#include "sealbid/crypto/encoding.hpp"
#include "sealbid/crypto/sha256.hpp"

namespace sealbid::crypto {

using bn254::Fr;
using bn254::G1;
using bn254::G2;

inline constexpr const char* CURVE_ID = "bn254";
inline constexpr const char* PROTOCOL_VERSION = "sealbid-v1";

// Deterministic map to a G1 point via try-and-increment; never returns the
// identity. The label is a mandatory domain separator.
G1 hash_to_group(const std::string& label, std::span<const std::uint8_t> payload);
G1 hash_to_group(const std::string& label, const std::string& payload);

// Fixed generators of the pairing setting. h1 is derived by hashing so that
// log_g1(h1) is unknown to every party.
struct GroupContext {
  G1 g1;
  G2 g2;
  G1 h1;
  std::string curve_id;

  static const GroupContext& get();
};

struct PedersenCommitment {
  G1 point;  // g1^value * h1^blinding

  Bytes to_bytes() const { return point.to_bytes(); }
  bool operator==(const PedersenCommitment& o) const { return point == o.point; }
};

PedersenCommitment pedersen_commit(const Fr& value, const Fr& blinding);
bool pedersen_verify_open(const PedersenCommitment& c, const Fr& value, const Fr& blinding);

// Scalar derived from arbitrary bytes (for challenges and tx digests).
Fr scalar_from_digest(const Digest& d);

}  // namespace sealbid::crypto
