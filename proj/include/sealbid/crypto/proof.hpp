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

#include <cstddef>
#include <utility>
#include <vector>

#include "sealbid/crypto/core.hpp"
#include "sealbid/crypto/drbg.hpp"

namespace sealbid::crypto {

// Running-hash Fiat-Shamir transcript. Absorbs, in order: protocol version,
// statement label, caller context, then whatever the statement binds.
class Transcript {
 public:
  explicit Transcript(const std::string& label, std::span<const std::uint8_t> context) {
    w_.str(PROTOCOL_VERSION);
    w_.str(label);
    w_.bytes(context);
  }

  void absorb(const std::string& tag, std::span<const std::uint8_t> data) {
    w_.str(tag);
    w_.bytes(data);
  }
  void absorb_point(const std::string& tag, const G1& p) {
    Bytes b = p.to_bytes();
    absorb(tag, b);
  }
  void absorb_point(const std::string& tag, const G2& p) {
    Bytes b = p.to_bytes();
    absorb(tag, b);
  }
  void absorb_scalar(const std::string& tag, const Fr& s) {
    std::uint8_t buf[32];
    s.to_bytes(buf);
    absorb(tag, std::span<const std::uint8_t>(buf, 32));
  }
  void absorb_u64(const std::string& tag, std::uint64_t v) {
    w_.str(tag);
    w_.u64(v);
  }

  Fr challenge() const { return scalar_from_digest(Sha256::hash(w_.data())); }

 private:
  ByteWriter w_;
};

// Non-interactive proof of knowledge of exponents: challenge plus one
// response per witness. Verification recomputes the challenge from the
// statement, so the proof is bound to the exact public inputs and context.
struct FiatShamirProof {
  Fr challenge;
  std::vector<Fr> responses;
  std::string label;

  Bytes to_bytes() const;
  static bool from_bytes(ByteReader& r, FiatShamirProof& out);
};

// target = sum_i witness[index_i] * base_i, over G1 or G2.
template <typename Group>
struct Equation {
  Group target;
  std::vector<std::pair<Group, std::size_t>> terms;
};

struct Statement {
  std::string label;
  std::size_t num_witnesses = 0;
  std::vector<Equation<G1>> g1_eqs;
  std::vector<Equation<G2>> g2_eqs;
};

FiatShamirProof prove_statement(const Statement& st, const std::vector<Fr>& witnesses,
                                std::span<const std::uint8_t> context, Drbg& rng);
bool verify_statement(const Statement& st, const FiatShamirProof& proof,
                      std::span<const std::uint8_t> context);

// Single-equation convenience form: public_result = prod bases[i]^exponents[i].
FiatShamirProof prove_representation(const std::vector<G1>& bases,
                                     const std::vector<Fr>& exponents,
                                     const G1& public_result,
                                     std::span<const std::uint8_t> context, Drbg& rng);
bool verify_representation(const std::vector<G1>& bases, const G1& public_result,
                           const FiatShamirProof& proof,
                           std::span<const std::uint8_t> context);

}  // namespace sealbid::crypto
