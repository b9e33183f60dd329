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

#include "sealbid/crypto/proof.hpp"

namespace sealbid::crypto {

namespace {

template <typename Group>
void absorb_equation(Transcript& t, const Equation<Group>& eq) {
  t.absorb_point("target", eq.target);
  for (const auto& [base, idx] : eq.terms) {
    t.absorb_point("base", base);
    t.absorb_u64("witness-index", idx);
  }
}

template <typename Group>
Group commitment_from_nonces(const Equation<Group>& eq, const std::vector<Fr>& nonces) {
  Group acc;
  for (const auto& [base, idx] : eq.terms) {
    acc = Group(acc + nonces[idx] * base);
  }
  return acc;
}

// A_k = sum z_i * base_i - c * target; matches the prover's commitment iff
// the responses satisfy the equation.
template <typename Group>
Group commitment_from_responses(const Equation<Group>& eq, const FiatShamirProof& p) {
  Group acc;
  for (const auto& [base, idx] : eq.terms) {
    acc = Group(acc + p.responses[idx] * base);
  }
  return Group(acc - p.challenge * eq.target);
}

Transcript statement_transcript(const Statement& st, std::span<const std::uint8_t> context) {
  Transcript t(st.label, context);
  for (const auto& eq : st.g1_eqs) absorb_equation(t, eq);
  for (const auto& eq : st.g2_eqs) absorb_equation(t, eq);
  return t;
}

}  // namespace

Bytes FiatShamirProof::to_bytes() const {
  ByteWriter w;
  w.str(label);
  std::uint8_t buf[32];
  challenge.to_bytes(buf);
  w.raw(std::span<const std::uint8_t>(buf, 32));
  w.u32(static_cast<std::uint32_t>(responses.size()));
  for (const Fr& r : responses) {
    r.to_bytes(buf);
    w.raw(std::span<const std::uint8_t>(buf, 32));
  }
  return w.take();
}

bool FiatShamirProof::from_bytes(ByteReader& r, FiatShamirProof& out) {
  if (!r.str(out.label)) return false;
  std::vector<std::uint8_t> buf;
  if (!r.raw(32, buf) || !Fr::from_bytes(buf.data(), out.challenge)) return false;
  std::uint32_t n;
  if (!r.u32(n) || n > 64) return false;
  out.responses.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!r.raw(32, buf) || !Fr::from_bytes(buf.data(), out.responses[i])) return false;
  }
  return true;
}

FiatShamirProof prove_statement(const Statement& st, const std::vector<Fr>& witnesses,
                                std::span<const std::uint8_t> context, Drbg& rng) {
  if (witnesses.size() != st.num_witnesses) {
    throw std::invalid_argument("prove_statement: witness count mismatch");
  }
  std::vector<Fr> nonces(st.num_witnesses);
  for (auto& n : nonces) n = rng.scalar();

  Transcript t = statement_transcript(st, context);
  for (const auto& eq : st.g1_eqs) {
    t.absorb_point("commitment", commitment_from_nonces(eq, nonces));
  }
  for (const auto& eq : st.g2_eqs) {
    t.absorb_point("commitment", commitment_from_nonces(eq, nonces));
  }
  Fr c = t.challenge();

  FiatShamirProof proof;
  proof.label = st.label;
  proof.challenge = c;
  proof.responses.resize(st.num_witnesses);
  for (std::size_t i = 0; i < st.num_witnesses; ++i) {
    proof.responses[i] = nonces[i] + c * witnesses[i];
  }
  return proof;
}

bool verify_statement(const Statement& st, const FiatShamirProof& proof,
                      std::span<const std::uint8_t> context) {
  if (proof.label != st.label) return false;
  if (proof.responses.size() != st.num_witnesses) return false;
  Transcript t = statement_transcript(st, context);
  for (const auto& eq : st.g1_eqs) {
    t.absorb_point("commitment", commitment_from_responses(eq, proof));
  }
  for (const auto& eq : st.g2_eqs) {
    t.absorb_point("commitment", commitment_from_responses(eq, proof));
  }
  return t.challenge() == proof.challenge;
}

FiatShamirProof prove_representation(const std::vector<G1>& bases,
                                     const std::vector<Fr>& exponents,
                                     const G1& public_result,
                                     std::span<const std::uint8_t> context, Drbg& rng) {
  if (bases.size() != exponents.size()) {
    throw std::invalid_argument("prove_representation: base/exponent count mismatch");
  }
  Statement st;
  st.label = "dlog-representation";
  st.num_witnesses = bases.size();
  Equation<G1> eq;
  eq.target = public_result;
  for (std::size_t i = 0; i < bases.size(); ++i) eq.terms.emplace_back(bases[i], i);
  st.g1_eqs.push_back(std::move(eq));
  return prove_statement(st, exponents, context, rng);
}

bool verify_representation(const std::vector<G1>& bases, const G1& public_result,
                           const FiatShamirProof& proof,
                           std::span<const std::uint8_t> context) {
  Statement st;
  st.label = "dlog-representation";
  st.num_witnesses = bases.size();
  Equation<G1> eq;
  eq.target = public_result;
  for (std::size_t i = 0; i < bases.size(); ++i) eq.terms.emplace_back(bases[i], i);
  st.g1_eqs.push_back(std::move(eq));
  return verify_statement(st, proof, context);
}

}  // namespace sealbid::crypto
