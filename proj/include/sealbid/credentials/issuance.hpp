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

#include <optional>

#include "sealbid/credentials/keys.hpp"

namespace sealbid::credentials {

// Attribute bases for the two-attribute commitment; independent of g1/h1.
const G1& attr_base_v();
const G1& attr_base_s();

// Blind issuance request: a commitment to (v, s), an ElGamal encryption of
// the private attribute under the requester's ephemeral key, and a proof of
// well-formedness. The authorities never see s.
struct CredentialRequest {
  G1 commitment;    // g1^r * Hv^v * Hs^s
  G1 elgamal_pk;    // g1^d, requester ephemeral
  G1 enc_c1;        // g1^k
  G1 enc_c2;        // pk^k * h^s, h derived from the commitment
  std::uint64_t disclosed_value = 0;
  crypto::FiatShamirProof proof;

  Bytes to_bytes() const;
  static bool from_bytes(crypto::ByteReader& r, CredentialRequest& out);
  crypto::Digest digest() const { return crypto::Sha256::hash(to_bytes()); }
};

// Holder-side secrets matching a request.
struct RequestSecrets {
  Fr elgamal_sk;
  Fr commit_blinding;
  Fr seq_number;
  std::uint64_t value = 0;
};

// Per-credential signature base; every authority derives the same h from the
// request, so partial signatures share it and blind_sign is deterministic.
G1 credential_base(const CredentialRequest& req);

std::pair<CredentialRequest, RequestSecrets> prepare_request(std::uint64_t value, const Fr& s,
                                                             Drbg& rng);
bool verify_request(const CredentialRequest& req);

struct PartialCredential {
  std::uint32_t authority_index = 0;
  G1 blinded_a;  // c1^{y_s}
  G1 blinded_b;  // h^{x} * c2^{y_s} * h^{v * y_v}

  Bytes to_bytes() const;
  static bool from_bytes(crypto::ByteReader& r, PartialCredential& out);
};

// Refuses (nullopt) when the request proof does not verify.
std::optional<PartialCredential> blind_sign(const AuthorityKeyShare& share,
                                            const CredentialRequest& req);

struct Credential {
  G1 base_h;
  G1 sig;  // base_h^{x + y_v*v + y_s*s}
  std::uint64_t value = 0;
  Fr seq_number;
};

// Unblinds at least t partials with distinct indices and interpolates at
// zero. Throws ThresholdError (< t), ParameterError (duplicates) or
// IntegrityError (aggregate fails the pairing check).
Credential unblind_and_aggregate(const std::vector<PartialCredential>& partials,
                                 const RequestSecrets& secrets, const CredentialRequest& req,
                                 const AggregatedVerificationKey& vk);

bool verify_credential(const Credential& cred, const AggregatedVerificationKey& vk);

}  // namespace sealbid::credentials
