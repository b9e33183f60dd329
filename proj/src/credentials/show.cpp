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

#include "sealbid/credentials/show.hpp"

#include "sealbid/crypto/core.hpp"

namespace sealbid::credentials {

using crypto::ByteReader;
using crypto::ByteWriter;
using crypto::Equation;
using crypto::FiatShamirProof;
using crypto::GroupContext;
using crypto::Statement;

G1 auction_tag_base(std::span<const std::uint8_t> auction_id) {
  return crypto::hash_to_group("auction", auction_id);
}

G1 zeta_tag(const Fr& seq_number, std::span<const std::uint8_t> auction_id) {
  return G1(seq_number * auction_tag_base(auction_id));
}

namespace {

Bytes show_context(const AggregatedVerificationKey& vk,
                   std::span<const std::uint8_t> auction_id, bool discloses,
                   std::uint64_t disclosed_value,
                   std::span<const std::uint8_t> caller_context) {
  ByteWriter w;
  w.raw(vk.digest());
  w.bytes(auction_id);
  w.u8(discloses ? 1 : 0);
  w.u64(discloses ? disclosed_value : 0);
  w.bytes(caller_context);
  return w.take();
}

// Hidden-value witnesses: [v, s, r2]; disclosed-value witnesses: [s, r2].
Statement show_statement(const AggregatedVerificationKey& vk, const ShowProof& p,
                         const G1& tag_base) {
  const auto& ctx = GroupContext::get();
  Statement st;
  Equation<G2> kappa_eq;
  Equation<G1> zeta_eq;
  Equation<G1> nu_eq;
  if (p.discloses_value) {
    st.label = "credential-show-disclosed";
    st.num_witnesses = 2;
    kappa_eq.target =
        G2(p.kappa - vk.alpha - Fr::from_u64(p.disclosed_value) * vk.beta_v);
    kappa_eq.terms = {{vk.beta_s, 0}, {ctx.g2, 1}};
    zeta_eq.target = p.zeta;
    zeta_eq.terms = {{tag_base, 0}};
    nu_eq.target = p.nu;
    nu_eq.terms = {{p.sig_base, 1}};
  } else {
    st.label = "credential-show";
    st.num_witnesses = 3;
    kappa_eq.target = G2(p.kappa - vk.alpha);
    kappa_eq.terms = {{vk.beta_v, 0}, {vk.beta_s, 1}, {ctx.g2, 2}};
    zeta_eq.target = p.zeta;
    zeta_eq.terms = {{tag_base, 1}};
    nu_eq.target = p.nu;
    nu_eq.terms = {{p.sig_base, 2}};
  }
  st.g2_eqs.push_back(std::move(kappa_eq));
  st.g1_eqs.push_back(std::move(zeta_eq));
  st.g1_eqs.push_back(std::move(nu_eq));
  return st;
}

bool read_g1(ByteReader& r, G1& g) {
  Bytes buf;
  if (!r.bytes(buf)) return false;
  auto p = G1::from_bytes(buf);
  if (!p) return false;
  g = *p;
  return true;
}

}  // namespace

Bytes ShowProof::to_bytes() const {
  ByteWriter w;
  w.bytes(sig_base.to_bytes());
  w.bytes(sig.to_bytes());
  w.bytes(kappa.to_bytes());
  w.bytes(nu.to_bytes());
  w.bytes(zeta.to_bytes());
  w.u8(discloses_value ? 1 : 0);
  w.u64(disclosed_value);
  w.bytes(pok.to_bytes());
  return w.take();
}

bool ShowProof::from_bytes(ByteReader& r, ShowProof& out) {
  if (!read_g1(r, out.sig_base) || !read_g1(r, out.sig)) return false;
  Bytes buf;
  if (!r.bytes(buf)) return false;
  auto q = G2::from_bytes(buf);
  if (!q) return false;
  out.kappa = *q;
  if (!read_g1(r, out.nu) || !read_g1(r, out.zeta)) return false;
  std::uint8_t flag;
  if (!r.u8(flag) || flag > 1) return false;
  out.discloses_value = flag == 1;
  if (!r.u64(out.disclosed_value)) return false;
  if (!out.discloses_value && out.disclosed_value != 0) return false;
  Bytes pb;
  if (!r.bytes(pb)) return false;
  ByteReader pr(pb);
  return FiatShamirProof::from_bytes(pr, out.pok);
}

ShowProof show(const Credential& cred, std::span<const std::uint8_t> auction_id,
               const AggregatedVerificationKey& vk, bool disclose_value,
               std::span<const std::uint8_t> context, Drbg& rng) {
  const auto& ctx = GroupContext::get();
  Fr r1 = rng.nonzero_scalar();
  Fr r2 = rng.scalar();

  ShowProof p;
  p.sig_base = G1(r1 * cred.base_h);
  p.sig = G1(r1 * cred.sig);
  p.kappa = G2(vk.alpha + Fr::from_u64(cred.value) * vk.beta_v +
               cred.seq_number * vk.beta_s + r2 * ctx.g2);
  p.nu = G1(r2 * p.sig_base);
  p.zeta = zeta_tag(cred.seq_number, auction_id);
  p.discloses_value = disclose_value;
  p.disclosed_value = disclose_value ? cred.value : 0;

  G1 tag_base = auction_tag_base(auction_id);
  Bytes full_context =
      show_context(vk, auction_id, disclose_value, p.disclosed_value, context);
  std::vector<Fr> witnesses;
  if (disclose_value) {
    witnesses = {cred.seq_number, r2};
  } else {
    witnesses = {Fr::from_u64(cred.value), cred.seq_number, r2};
  }
  p.pok = crypto::prove_statement(show_statement(vk, p, tag_base), witnesses,
                                  full_context, rng);
  return p;
}

bool verify_show(const AggregatedVerificationKey& vk,
                 std::span<const std::uint8_t> auction_id, const ShowProof& proof,
                 std::span<const std::uint8_t> context) {
  if (proof.sig_base.is_infinity()) return false;
  G1 tag_base = auction_tag_base(auction_id);
  Bytes full_context = show_context(vk, auction_id, proof.discloses_value,
                                    proof.disclosed_value, context);
  if (!crypto::verify_statement(show_statement(vk, proof, tag_base), proof.pok,
                                full_context)) {
    return false;
  }
  // e(h', kappa) == e(sig * nu, g2)
  return bn254::pairing_check(proof.sig_base, proof.kappa,
                              G1(proof.sig + proof.nu), GroupContext::get().g2);
}

}  // namespace sealbid::credentials
