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

#include "sealbid/credentials/issuance.hpp"

namespace sealbid::credentials {

// Per-auction tag base and the tag itself: zeta = h_auction^s. Re-used
// deposits stay unlinkable across auctions while the tag pins one bid per
// credential inside an auction.
G1 auction_tag_base(std::span<const std::uint8_t> auction_id);
G1 zeta_tag(const Fr& seq_number, std::span<const std::uint8_t> auction_id);

// One showing of a credential: freshly randomized signature material, the
// blinded attribute aggregate kappa, the tag zeta, and a proof tying them to
// the same sequence number. The value attribute is disclosed only when the
// phase requires it.
struct ShowProof {
  G1 sig_base;  // h' = h^{r1}
  G1 sig;       // sig^{r1}
  G2 kappa;     // alpha * beta_v^v * beta_s^s * g2^{r2}
  G1 nu;        // h'^{r2}
  G1 zeta;
  bool discloses_value = false;
  std::uint64_t disclosed_value = 0;
  crypto::FiatShamirProof pok;

  Bytes to_bytes() const;
  static bool from_bytes(crypto::ByteReader& r, ShowProof& out);
  Bytes zeta_bytes() const { return zeta.to_bytes(); }
};

// context binds the proof to its use site (phase, contract, payout address);
// a proof made for one context verifies in no other.
ShowProof show(const Credential& cred, std::span<const std::uint8_t> auction_id,
               const AggregatedVerificationKey& vk, bool disclose_value,
               std::span<const std::uint8_t> context, Drbg& rng);

bool verify_show(const AggregatedVerificationKey& vk,
                 std::span<const std::uint8_t> auction_id, const ShowProof& proof,
                 std::span<const std::uint8_t> context);

}  // namespace sealbid::credentials
