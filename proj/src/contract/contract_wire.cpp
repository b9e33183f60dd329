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
//
// Payload codecs and the client-side procedures that assemble transactions.

#include "sealbid/contract/contract.hpp"

namespace sealbid::contract {

using crypto::ByteReader;
using crypto::ByteWriter;

namespace {

constexpr std::uint8_t PAYLOAD_VERSION = 1;

bool read_signature(ByteReader& r, Signature& out) {
  Bytes buf;
  if (!r.bytes(buf)) return false;
  ByteReader sr(buf);
  return Signature::from_bytes(sr, out) && sr.done();
}

bool read_show(ByteReader& r, ShowProof& out) {
  Bytes buf;
  if (!r.bytes(buf)) return false;
  ByteReader sr(buf);
  return ShowProof::from_bytes(sr, out) && sr.done();
}

}  // namespace

// ---- contexts ----------------------------------------------------------------

Bytes commit_context(const Bytes& contract_id) {
  ByteWriter w;
  w.str("commit");
  w.bytes(contract_id);
  return w.take();
}

Bytes reveal_context(const Bytes& contract_id) {
  ByteWriter w;
  w.str("reveal");
  w.bytes(contract_id);
  return w.take();
}

Bytes withdraw_context(const Bytes& contract_id, const Address& payout_addr) {
  ByteWriter w;
  w.str("withdraw");
  w.bytes(contract_id);
  w.bytes(payout_addr);
  return w.take();
}

Bytes submit_work_context(const Bytes& contract_id, const Bytes& file_digest,
                          const Bytes& submitter_pk) {
  ByteWriter w;
  w.str("submit-work");
  w.bytes(contract_id);
  w.bytes(file_digest);
  w.bytes(submitter_pk);
  return w.take();
}

// ---- Setup -------------------------------------------------------------------

Bytes SetupPayload::encode() const {
  ByteWriter w;
  w.u8(PAYLOAD_VERSION);
  w.u32(n);
  w.u32(t);
  w.u32(static_cast<std::uint32_t>(denominations.size()));
  for (std::uint64_t d : denominations) w.u64(d);
  w.bytes(vk.to_bytes());
  w.u32(static_cast<std::uint32_t>(authority_shares.size()));
  for (const auto& s : authority_shares) w.bytes(s.to_bytes());
  return w.take();
}

bool SetupPayload::decode(const Bytes& in, SetupPayload& out) {
  ByteReader r(in);
  std::uint8_t ver;
  if (!r.u8(ver) || ver != PAYLOAD_VERSION) return false;
  if (!r.u32(out.n) || !r.u32(out.t)) return false;
  std::uint32_t nd;
  if (!r.u32(nd) || nd > 1024) return false;
  out.denominations.resize(nd);
  for (auto& d : out.denominations) {
    if (!r.u64(d)) return false;
  }
  Bytes vkb;
  if (!r.bytes(vkb)) return false;
  ByteReader vr(vkb);
  if (!AggregatedVerificationKey::from_bytes(vr, out.vk)) return false;
  std::uint32_t ns;
  if (!r.u32(ns) || ns > 256) return false;
  out.authority_shares.resize(ns);
  for (auto& s : out.authority_shares) {
    Bytes sb;
    if (!r.bytes(sb)) return false;
    ByteReader sr(sb);
    if (!AuthorityPublicShare::from_bytes(sr, s)) return false;
  }
  return r.done();
}

Transaction make_setup_tx(const Address& sender, std::uint32_t n, std::uint32_t t,
                          const std::vector<std::uint64_t>& denominations,
                          const AggregatedVerificationKey& vk,
                          const std::vector<AuthorityPublicShare>& shares) {
  SetupPayload p;
  p.n = n;
  p.t = t;
  p.denominations = denominations;
  p.vk = vk;
  p.authority_shares = shares;
  Transaction tx;
  tx.kind = TxKind::Setup;
  tx.sender = sender;
  tx.payload = p.encode();
  return tx;
}

// ---- Create ------------------------------------------------------------------

Bytes CreatePayload::encode() const {
  ByteWriter w;
  w.u8(PAYLOAD_VERSION);
  w.bytes(contract_id);
  w.bytes(vk_digest);
  w.bytes(min_price_commitment);
  w.u64(t_commit);
  w.u64(t_reveal);
  w.str(policy);
  w.str(description);
  return w.take();
}

bool CreatePayload::decode(const Bytes& in, CreatePayload& out) {
  ByteReader r(in);
  std::uint8_t ver;
  if (!r.u8(ver) || ver != PAYLOAD_VERSION) return false;
  if (!r.bytes(out.contract_id)) return false;
  if (!r.bytes(out.vk_digest)) return false;
  if (!r.bytes(out.min_price_commitment)) return false;
  if (!r.u64(out.t_commit) || !r.u64(out.t_reveal)) return false;
  if (!r.str(out.policy) || !r.str(out.description)) return false;
  return r.done();
}

Transaction make_create_tx(const Address& worker, const Bytes& contract_id,
                           const AggregatedVerificationKey& vk,
                           const crypto::PedersenCommitment& min_price_commitment,
                           std::uint64_t t_commit, std::uint64_t t_reveal,
                           const std::string& description, const std::string& policy) {
  CreatePayload p;
  p.contract_id = contract_id;
  crypto::Digest vkd = vk.digest();
  p.vk_digest = Bytes(vkd.begin(), vkd.end());
  p.min_price_commitment = min_price_commitment.to_bytes();
  p.t_commit = t_commit;
  p.t_reveal = t_reveal;
  p.policy = policy;
  p.description = description;
  Transaction tx;
  tx.kind = TxKind::Create;
  tx.sender = worker;
  tx.payload = p.encode();
  return tx;
}

// ---- Deposit -----------------------------------------------------------------

Bytes DepositPayload::signing_bytes(const Address& sender) const {
  ByteWriter w;
  w.str("sealbid-sign-deposit");
  w.bytes(sender);
  w.bytes(contract_id);
  w.u64(value);
  w.bytes(request_bytes);
  return w.take();
}

Bytes DepositPayload::encode() const {
  ByteWriter w;
  w.u8(PAYLOAD_VERSION);
  w.bytes(contract_id);
  w.u64(value);
  w.bytes(request_bytes);
  w.bytes(sender_sig.to_bytes());
  return w.take();
}

bool DepositPayload::decode(const Bytes& in, DepositPayload& out) {
  ByteReader r(in);
  std::uint8_t ver;
  if (!r.u8(ver) || ver != PAYLOAD_VERSION) return false;
  if (!r.bytes(out.contract_id)) return false;
  if (!r.u64(out.value)) return false;
  if (!r.bytes(out.request_bytes)) return false;
  if (!read_signature(r, out.sender_sig)) return false;
  return r.done();
}

Transaction make_deposit_tx(const SigningKey& bidder, const Bytes& contract_id,
                            std::uint64_t value, const CredentialRequest& request,
                            Drbg& rng) {
  DepositPayload p;
  p.contract_id = contract_id;
  p.value = value;
  p.request_bytes = request.to_bytes();
  Address sender = bidder.public_key.to_bytes();
  p.sender_sig = bidder.sign(p.signing_bytes(sender), rng);
  Transaction tx;
  tx.kind = TxKind::Deposit;
  tx.sender = sender;
  tx.payload = p.encode();
  return tx;
}

// ---- Commit ------------------------------------------------------------------

Bytes CommitPayload::encode() const {
  ByteWriter w;
  w.u8(PAYLOAD_VERSION);
  w.bytes(contract_id);
  w.bytes(auction_id);
  w.bytes(zeta);
  w.bytes(show.to_bytes());
  return w.take();
}

bool CommitPayload::decode(const Bytes& in, CommitPayload& out) {
  ByteReader r(in);
  std::uint8_t ver;
  if (!r.u8(ver) || ver != PAYLOAD_VERSION) return false;
  if (!r.bytes(out.contract_id)) return false;
  if (!r.bytes(out.auction_id)) return false;
  if (!r.bytes(out.zeta)) return false;
  if (!read_show(r, out.show)) return false;
  return r.done();
}

Transaction make_commit_tx(const Address& sender, const Bytes& contract_id,
                           const Bytes& auction_id, const Credential& cred,
                           const AggregatedVerificationKey& vk, Drbg& rng) {
  CommitPayload p;
  p.contract_id = contract_id;
  p.auction_id = auction_id;
  p.show = credentials::show(cred, auction_id, vk, false, commit_context(contract_id), rng);
  p.zeta = p.show.zeta_bytes();
  Transaction tx;
  tx.kind = TxKind::Commit;
  tx.sender = sender;
  tx.payload = p.encode();
  return tx;
}

// ---- Reveal ------------------------------------------------------------------

Bytes RevealPayload::encode() const {
  ByteWriter w;
  w.u8(PAYLOAD_VERSION);
  w.bytes(contract_id);
  w.bytes(auction_id);
  w.bytes(zeta);
  w.u64(value);
  w.bytes(show.to_bytes());
  return w.take();
}

bool RevealPayload::decode(const Bytes& in, RevealPayload& out) {
  ByteReader r(in);
  std::uint8_t ver;
  if (!r.u8(ver) || ver != PAYLOAD_VERSION) return false;
  if (!r.bytes(out.contract_id)) return false;
  if (!r.bytes(out.auction_id)) return false;
  if (!r.bytes(out.zeta)) return false;
  if (!r.u64(out.value)) return false;
  if (!read_show(r, out.show)) return false;
  return r.done();
}

Transaction make_reveal_tx(const Address& sender, const Bytes& contract_id,
                           const Bytes& auction_id, const Credential& cred,
                           const AggregatedVerificationKey& vk, Drbg& rng) {
  RevealPayload p;
  p.contract_id = contract_id;
  p.auction_id = auction_id;
  p.value = cred.value;
  p.show = credentials::show(cred, auction_id, vk, true, reveal_context(contract_id), rng);
  p.zeta = p.show.zeta_bytes();
  Transaction tx;
  tx.kind = TxKind::Reveal;
  tx.sender = sender;
  tx.payload = p.encode();
  return tx;
}

// ---- OpenMinPrice ------------------------------------------------------------

Bytes OpenMinPricePayload::signing_bytes(const Address& sender) const {
  ByteWriter w;
  w.str("sealbid-sign-open");
  w.bytes(sender);
  w.bytes(contract_id);
  w.bytes(auction_id);
  w.u64(min_price);
  std::uint8_t buf[32];
  blinding.to_bytes(buf);
  w.bytes(std::span<const std::uint8_t>(buf, 32));
  return w.take();
}

Bytes OpenMinPricePayload::encode() const {
  ByteWriter w;
  w.u8(PAYLOAD_VERSION);
  w.bytes(contract_id);
  w.bytes(auction_id);
  w.u64(min_price);
  std::uint8_t buf[32];
  blinding.to_bytes(buf);
  w.bytes(std::span<const std::uint8_t>(buf, 32));
  w.bytes(worker_sig.to_bytes());
  return w.take();
}

bool OpenMinPricePayload::decode(const Bytes& in, OpenMinPricePayload& out) {
  ByteReader r(in);
  std::uint8_t ver;
  if (!r.u8(ver) || ver != PAYLOAD_VERSION) return false;
  if (!r.bytes(out.contract_id)) return false;
  if (!r.bytes(out.auction_id)) return false;
  if (!r.u64(out.min_price)) return false;
  Bytes buf;
  if (!r.bytes(buf) || buf.size() != 32) return false;
  if (!bn254::Fr::from_bytes(buf.data(), out.blinding)) return false;
  if (!read_signature(r, out.worker_sig)) return false;
  return r.done();
}

Transaction make_open_min_price_tx(const SigningKey& worker, const Bytes& contract_id,
                                   const Bytes& auction_id, std::uint64_t min_price,
                                   const bn254::Fr& blinding, Drbg& rng) {
  OpenMinPricePayload p;
  p.contract_id = contract_id;
  p.auction_id = auction_id;
  p.min_price = min_price;
  p.blinding = blinding;
  Address sender = worker.public_key.to_bytes();
  p.worker_sig = worker.sign(p.signing_bytes(sender), rng);
  Transaction tx;
  tx.kind = TxKind::OpenMinPrice;
  tx.sender = sender;
  tx.payload = p.encode();
  return tx;
}

// ---- Withdraw ----------------------------------------------------------------

Bytes WithdrawPayload::signing_bytes() const {
  // the payout key signs the whole withdraw transcript, proof included
  ByteWriter w;
  w.str("sealbid-sign-withdraw");
  w.bytes(contract_id);
  w.bytes(auction_id);
  w.bytes(payout_addr);
  w.bytes(show.to_bytes());
  return w.take();
}

Bytes WithdrawPayload::encode() const {
  ByteWriter w;
  w.u8(PAYLOAD_VERSION);
  w.bytes(contract_id);
  w.bytes(auction_id);
  w.bytes(payout_addr);
  w.bytes(zeta);
  w.bytes(show.to_bytes());
  w.bytes(addr_sig.to_bytes());
  return w.take();
}

bool WithdrawPayload::decode(const Bytes& in, WithdrawPayload& out) {
  ByteReader r(in);
  std::uint8_t ver;
  if (!r.u8(ver) || ver != PAYLOAD_VERSION) return false;
  if (!r.bytes(out.contract_id)) return false;
  if (!r.bytes(out.auction_id)) return false;
  if (!r.bytes(out.payout_addr)) return false;
  if (!r.bytes(out.zeta)) return false;
  if (!read_show(r, out.show)) return false;
  if (!read_signature(r, out.addr_sig)) return false;
  return r.done();
}

Transaction make_withdraw_tx(const Address& sender, const Bytes& contract_id,
                             const Bytes& auction_id, const SigningKey& payout_key,
                             const Credential& cred, const AggregatedVerificationKey& vk,
                             Drbg& rng) {
  WithdrawPayload p;
  p.contract_id = contract_id;
  p.auction_id = auction_id;
  p.payout_addr = payout_key.public_key.to_bytes();
  p.show = credentials::show(cred, auction_id, vk, true,
                             withdraw_context(contract_id, p.payout_addr), rng);
  p.zeta = p.show.zeta_bytes();
  p.addr_sig = payout_key.sign(p.signing_bytes(), rng);
  Transaction tx;
  tx.kind = TxKind::Withdraw;
  tx.sender = sender;
  tx.payload = p.encode();
  return tx;
}

// ---- SubmitWork --------------------------------------------------------------

Bytes SubmitWorkPayload::signing_bytes() const {
  ByteWriter w;
  w.str("sealbid-sign-file-commitment");
  w.bytes(auction_id);
  w.bytes(file_digest);
  return w.take();
}

Bytes SubmitWorkPayload::encode() const {
  ByteWriter w;
  w.u8(PAYLOAD_VERSION);
  w.bytes(contract_id);
  w.bytes(auction_id);
  w.bytes(show.to_bytes());
  w.bytes(file_digest);
  w.bytes(submitter_pk);
  w.bytes(file_sig.to_bytes());
  return w.take();
}

bool SubmitWorkPayload::decode(const Bytes& in, SubmitWorkPayload& out) {
  ByteReader r(in);
  std::uint8_t ver;
  if (!r.u8(ver) || ver != PAYLOAD_VERSION) return false;
  if (!r.bytes(out.contract_id)) return false;
  if (!r.bytes(out.auction_id)) return false;
  if (!read_show(r, out.show)) return false;
  if (!r.bytes(out.file_digest)) return false;
  if (!r.bytes(out.submitter_pk)) return false;
  if (!read_signature(r, out.file_sig)) return false;
  return r.done();
}

Transaction make_submit_work_tx(const Address& sender, const Bytes& contract_id,
                                const Bytes& auction_id, const Credential& cred,
                                const AggregatedVerificationKey& vk,
                                const Bytes& file_digest, Drbg& rng) {
  SubmitWorkPayload p;
  p.contract_id = contract_id;
  p.auction_id = auction_id;
  p.file_digest = file_digest;
  SigningKey fresh = SigningKey::generate(rng);  // anonymity: never the deposit key
  p.submitter_pk = fresh.public_key.to_bytes();
  p.file_sig = fresh.sign(p.signing_bytes(), rng);
  p.show = credentials::show(cred, auction_id, vk, false,
                             submit_work_context(contract_id, file_digest, p.submitter_pk),
                             rng);
  Transaction tx;
  tx.kind = TxKind::SubmitWork;
  tx.sender = sender;
  tx.payload = p.encode();
  return tx;
}

}  // namespace sealbid::contract
