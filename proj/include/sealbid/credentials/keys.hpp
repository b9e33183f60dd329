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
#include <vector>

#include "sealbid/crypto/drbg.hpp"
#include "sealbid/crypto/proof.hpp"
#include "sealbid/errors.hpp"

namespace sealbid::credentials {

using crypto::Bytes;
using crypto::Drbg;
using bn254::Fr;
using bn254::G1;
using bn254::G2;

// Per-authority signing exponents for the two-attribute scheme: one for the
// signature base, one each for the public value v and the private sequence
// number s. Indices are the 1-based Shamir evaluation points.
struct AuthorityKeyShare {
  std::uint32_t index = 0;
  Fr x;    // base exponent share
  Fr y_v;  // value-attribute share
  Fr y_s;  // sequence-number share

  G2 alpha;   // g2^x
  G2 beta_v;  // g2^y_v
  G2 beta_s;  // g2^y_s

  bool consistent() const;
};

// Public half of a share, as published for verification-key aggregation.
struct AuthorityPublicShare {
  std::uint32_t index = 0;
  G2 alpha, beta_v, beta_s;

  Bytes to_bytes() const;
  static bool from_bytes(crypto::ByteReader& r, AuthorityPublicShare& out);
};

struct AggregatedVerificationKey {
  std::uint32_t n = 0;
  std::uint32_t t = 0;
  G2 alpha, beta_v, beta_s;
  std::string curve_id;

  Bytes to_bytes() const;
  static bool from_bytes(crypto::ByteReader& r, AggregatedVerificationKey& out);
  crypto::Digest digest() const;

  bool operator==(const AggregatedVerificationKey& o) const {
    return n == o.n && t == o.t && alpha == o.alpha && beta_v == o.beta_v &&
           beta_s == o.beta_s && curve_id == o.curve_id;
  }
};

// Lagrange coefficients at zero for the given pairwise-distinct evaluation
// points (1-based authority indices).
std::vector<Fr> lagrange_at_zero(const std::vector<std::uint32_t>& indices);

// Dealer-based ceremony: samples degree-(t-1) polynomials and hands each
// authority its evaluations. The dealer state lives only inside this call.
struct Ceremony {
  std::vector<AuthorityKeyShare> shares;
  AggregatedVerificationKey vk;
};

Ceremony key_ceremony(std::uint32_t n, std::uint32_t t, Drbg& rng);

// Interpolates the joint key from any t distinct public shares; the result
// is the same for every qualifying subset.
AggregatedVerificationKey aggregate_verification_key(
    const std::vector<AuthorityPublicShare>& shares, std::uint32_t n, std::uint32_t t);

}  // namespace sealbid::credentials
