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

#include <set>

#include "sealbid/crypto/core.hpp"

namespace sealbid::credentials {

using crypto::ByteReader;
using crypto::ByteWriter;
using crypto::Equation;
using crypto::FiatShamirProof;
using crypto::GroupContext;
using crypto::Statement;

const G1& attr_base_v() {
  static const G1 h = crypto::hash_to_group("cred-attr", std::string("v"));
  return h;
}

const G1& attr_base_s() {
  static const G1 h = crypto::hash_to_group("cred-attr", std::string("s"));
  return h;
}

G1 credential_base(const CredentialRequest& req) {
  return crypto::hash_to_group("cred-h", req.commitment.to_bytes());
}

namespace {

bool read_g1(ByteReader& r, G1& g) {
  Bytes buf;
  if (!r.bytes(buf)) return false;
  auto p = G1::from_bytes(buf);
  if (!p) return false;
  g = *p;
  return true;
}

Bytes request_context(const CredentialRequest& req) {
  ByteWriter w;
  w.u64(req.disclosed_value);
  w.bytes(req.elgamal_pk.to_bytes());
  return w.take();
}

// Witness order: [commit blinding r, sequence number s, encryption nonce k].
Statement request_statement(const CredentialRequest& req, const G1& h) {
  const auto& ctx = GroupContext::get();
  Statement st;
  st.label = "credential-request";
  st.num_witnesses = 3;

  Equation<G1> commit_eq;
  commit_eq.target = G1(req.commitment - Fr::from_u64(req.disclosed_value) * attr_base_v());
  commit_eq.terms = {{ctx.g1, 0}, {attr_base_s(), 1}};
  st.g1_eqs.push_back(std::move(commit_eq));

  Equation<G1> c1_eq;
  c1_eq.target = req.enc_c1;
  c1_eq.terms = {{ctx.g1, 2}};
  st.g1_eqs.push_back(std::move(c1_eq));

  Equation<G1> c2_eq;
  c2_eq.target = req.enc_c2;
  c2_eq.terms = {{req.elgamal_pk, 2}, {h, 1}};
  st.g1_eqs.push_back(std::move(c2_eq));
  return st;
}

}  // namespace

Bytes CredentialRequest::to_bytes() const {
  ByteWriter w;
  w.bytes(commitment.to_bytes());
  w.bytes(elgamal_pk.to_bytes());
  w.bytes(enc_c1.to_bytes());
  w.bytes(enc_c2.to_bytes());
  w.u64(disclosed_value);
  w.bytes(proof.to_bytes());
  return w.take();
}

bool CredentialRequest::from_bytes(ByteReader& r, CredentialRequest& out) {
  if (!read_g1(r, out.commitment) || !read_g1(r, out.elgamal_pk) ||
      !read_g1(r, out.enc_c1) || !read_g1(r, out.enc_c2)) {
    return false;
  }
  if (!r.u64(out.disclosed_value)) return false;
  Bytes pb;
  if (!r.bytes(pb)) return false;
  ByteReader pr(pb);
  return FiatShamirProof::from_bytes(pr, out.proof);
}

std::pair<CredentialRequest, RequestSecrets> prepare_request(std::uint64_t value, const Fr& s,
                                                             Drbg& rng) {
  const auto& ctx = GroupContext::get();
  RequestSecrets secrets;
  secrets.value = value;
  secrets.seq_number = s;
  secrets.elgamal_sk = rng.nonzero_scalar();
  secrets.commit_blinding = rng.scalar();
  Fr k = rng.nonzero_scalar();

  CredentialRequest req;
  req.disclosed_value = value;
  req.commitment = G1(secrets.commit_blinding * ctx.g1 +
                      Fr::from_u64(value) * attr_base_v() + s * attr_base_s());
  req.elgamal_pk = G1(secrets.elgamal_sk * ctx.g1);
  G1 h = credential_base(req);
  req.enc_c1 = G1(k * ctx.g1);
  req.enc_c2 = G1(k * req.elgamal_pk + s * h);

  req.proof = crypto::prove_statement(request_statement(req, h),
                                      {secrets.commit_blinding, s, k},
                                      request_context(req), rng);
  return {req, secrets};
}

bool verify_request(const CredentialRequest& req) {
  G1 h = credential_base(req);
  return crypto::verify_statement(request_statement(req, h), req.proof,
                                  request_context(req));
}

Bytes PartialCredential::to_bytes() const {
  ByteWriter w;
  w.u32(authority_index);
  w.bytes(blinded_a.to_bytes());
  w.bytes(blinded_b.to_bytes());
  return w.take();
}

bool PartialCredential::from_bytes(ByteReader& r, PartialCredential& out) {
  if (!r.u32(out.authority_index)) return false;
  return read_g1(r, out.blinded_a) && read_g1(r, out.blinded_b);
}

std::optional<PartialCredential> blind_sign(const AuthorityKeyShare& share,
                                            const CredentialRequest& req) {
  if (!verify_request(req)) return std::nullopt;
  G1 h = credential_base(req);
  PartialCredential part;
  part.authority_index = share.index;
  part.blinded_a = G1(share.y_s * req.enc_c1);
  part.blinded_b = G1(share.x * h + share.y_s * req.enc_c2 +
                      (Fr::from_u64(req.disclosed_value) * share.y_v) * h);
  return part;
}

Credential unblind_and_aggregate(const std::vector<PartialCredential>& partials,
                                 const RequestSecrets& secrets, const CredentialRequest& req,
                                 const AggregatedVerificationKey& vk) {
  if (partials.size() < vk.t) {
    throw ThresholdError("unblind_and_aggregate: fewer than t partial credentials");
  }
  std::vector<std::uint32_t> indices;
  std::set<std::uint32_t> seen;
  for (const auto& p : partials) {
    if (!seen.insert(p.authority_index).second) {
      throw ParameterError("unblind_and_aggregate: duplicate authority index");
    }
  }
  // any t of them determine the polynomial; use the first t
  std::vector<PartialCredential> chosen(partials.begin(), partials.begin() + vk.t);
  for (const auto& p : chosen) indices.push_back(p.authority_index);
  std::vector<Fr> coeffs = lagrange_at_zero(indices);

  G1 h = credential_base(req);
  G1 sig;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    // unblind: b_i - d * a_i = h^{x_i + y_v_i v + y_s_i s}
    G1 share_sig = G1(chosen[i].blinded_b - secrets.elgamal_sk * chosen[i].blinded_a);
    sig = G1(sig + coeffs[i] * share_sig);
  }

  Credential cred;
  cred.base_h = h;
  cred.sig = sig;
  cred.value = secrets.value;
  cred.seq_number = secrets.seq_number;
  if (!verify_credential(cred, vk)) {
    throw IntegrityError("unblind_and_aggregate: aggregate fails verification");
  }
  return cred;
}

bool verify_credential(const Credential& cred, const AggregatedVerificationKey& vk) {
  if (cred.base_h.is_infinity()) return false;
  const auto& ctx = GroupContext::get();
  G2 joint = G2(vk.alpha + Fr::from_u64(cred.value) * vk.beta_v +
                cred.seq_number * vk.beta_s);
  // e(h, alpha * beta_v^v * beta_s^s) == e(sig, g2)
  return bn254::pairing_check(cred.base_h, joint, cred.sig, ctx.g2);
}

}  // namespace sealbid::credentials
