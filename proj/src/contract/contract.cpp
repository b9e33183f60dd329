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
// Checkers validate a transaction against chain state without touching it;
// appliers run the checker and then mutate. The ledger applies blocks through
// apply_transaction, so a rejected transaction can never leave a trace in the
// state.

#include "sealbid/contract/contract.hpp"

#include <algorithm>

namespace sealbid::contract {

using credentials::verify_show;
using crypto::GroupContext;
using ledger::balance_of;

namespace {

bool policy_known(const std::string& policy) {
  return policy == DEFAULT_POLICY;
}

const ContractInstance* find_contract(const ChainState& st, const Bytes& id) {
  auto it = st.contracts.find(id);
  return it == st.contracts.end() ? nullptr : &it->second;
}

const AuctionState* find_auction(const ContractInstance& inst, const Bytes& id) {
  auto it = inst.auctions.find(id);
  return it == inst.auctions.end() ? nullptr : &it->second;
}

bool address_key(const Address& addr, bn254::G1& out) {
  auto p = bn254::G1::from_bytes(addr);
  if (!p || p->is_infinity()) return false;
  out = *p;
  return true;
}

Bytes digest_bytes(const crypto::Digest& d) {
  return Bytes(d.begin(), d.end());
}

struct EffectiveOutcome {
  AuctionState::Phase phase = AuctionState::Phase::Pending;
  Bytes winning_zeta;
  std::uint64_t clearing_price = 0;
  std::uint64_t winning_value = 0;
};

// The outcome the auction has, or would have if resolved right now.
EffectiveOutcome effective_outcome(const AuctionState& a) {
  EffectiveOutcome out;
  if (a.outcome != AuctionState::Phase::Pending) {
    out.phase = a.outcome;
    out.winning_zeta = a.winning_zeta;
    out.clearing_price = a.clearing_price;
    out.winning_value = a.winning_value;
    return out;
  }
  if (!a.opened_min_price.has_value()) {
    // silent worker: every revealed bidder refunds in full
    out.phase = AuctionState::Phase::Failed;
    return out;
  }
  auto o = computed_outcome(a);
  if (o.kind == auction::Outcome::Kind::Winner) {
    out.phase = AuctionState::Phase::Won;
    out.winning_zeta = o.winning_zeta;
    out.clearing_price = o.clearing_price;
    out.winning_value = o.winning_value;
  } else {
    out.phase = AuctionState::Phase::Failed;
  }
  return out;
}

void store_outcome(AuctionState& a, const EffectiveOutcome& o) {
  a.outcome = o.phase;
  a.winning_zeta = o.winning_zeta;
  a.clearing_price = o.clearing_price;
  a.winning_value = o.winning_value;
}

std::uint64_t withdraw_payout(const AuctionState& a, const EffectiveOutcome& o,
                              const Bytes& zeta, std::uint64_t revealed_value) {
  if (o.phase == AuctionState::Phase::Won && zeta == o.winning_zeta) {
    return revealed_value - o.clearing_price;  // v - v'
  }
  (void)a;
  return revealed_value;  // loser or failed auction: full refund
}

}  // namespace

auction::Outcome computed_outcome(const AuctionState& a) {
  auction::RevealedBidSet set;
  set.reserve = a.opened_min_price.value_or(0);
  for (const auto& [zeta, value] : a.revealed) {
    auction::RevealedBid bid;
    bid.zeta = zeta;
    bid.value = value;
    bid.commit_height = a.committed.at(zeta);
    set.bids.push_back(std::move(bid));
  }
  return auction::resolve_vickrey(set);
}

// ---- Setup -------------------------------------------------------------------

Reason check_setup(const SetupPayload& p, const Transaction& tx, const ChainState& st) {
  if (p.t == 0 || p.t > p.n) return Reason::BAD_PARAMS;
  if (p.denominations.empty()) return Reason::BAD_PARAMS;
  for (std::size_t i = 0; i < p.denominations.size(); ++i) {
    if (p.denominations[i] == 0) return Reason::BAD_PARAMS;
    if (i > 0 && p.denominations[i] <= p.denominations[i - 1]) return Reason::BAD_PARAMS;
  }
  if (p.vk.curve_id != crypto::CURVE_ID || p.vk.n != p.n || p.vk.t != p.t) {
    return Reason::BAD_PARAMS;
  }
  if (p.authority_shares.size() != p.n) return Reason::BAD_PARAMS;
  std::set<std::uint32_t> indices;
  for (const auto& s : p.authority_shares) {
    if (s.index == 0 || s.index > p.n) return Reason::BAD_PARAMS;
    if (!indices.insert(s.index).second) return Reason::BAD_PARAMS;
  }
  // the claimed joint key must interpolate from the published shares
  std::vector<credentials::AuthorityPublicShare> first_t(p.authority_shares.begin(),
                                                         p.authority_shares.begin() + p.t);
  if (!(credentials::aggregate_verification_key(first_t, p.n, p.t) == p.vk)) {
    return Reason::BAD_PARAMS;
  }
  if (st.contracts.count(digest_bytes(tx.digest())) != 0) return Reason::BAD_PARAMS;
  return Reason::OK;
}

// ---- Create ------------------------------------------------------------------

Reason check_create(const CreatePayload& p, const Transaction& tx, const ChainState& st,
                    std::uint64_t height) {
  const ContractInstance* inst = find_contract(st, p.contract_id);
  if (inst == nullptr) return Reason::UNKNOWN_CONTRACT;
  if (p.t_commit >= p.t_reveal) return Reason::BAD_PARAMS;
  if (height >= p.t_commit) return Reason::DEADLINE;  // born past its commit window
  if (p.min_price_commitment.size() != 32) return Reason::MALFORMED;
  if (p.vk_digest != inst->vk_digest) return Reason::BAD_PARAMS;
  if (!policy_known(p.policy)) return Reason::BAD_PARAMS;
  if (tx.sender.size() != 32) return Reason::MALFORMED;
  if (inst->auctions.count(digest_bytes(tx.digest())) != 0) return Reason::BAD_PARAMS;
  return Reason::OK;
}

// ---- Deposit -----------------------------------------------------------------

Reason check_deposit(const DepositPayload& p, const Transaction& tx, const ChainState& st) {
  const ContractInstance* inst = find_contract(st, p.contract_id);
  if (inst == nullptr) return Reason::UNKNOWN_CONTRACT;
  if (!std::binary_search(inst->denominations.begin(), inst->denominations.end(), p.value)) {
    return Reason::BAD_DENOMINATION;
  }
  if (balance_of(st, tx.sender) < p.value) return Reason::INSUFFICIENT_FUNDS;

  CredentialRequest req;
  crypto::ByteReader rr(p.request_bytes);
  if (!CredentialRequest::from_bytes(rr, req) || !rr.done()) return Reason::MALFORMED;
  if (req.disclosed_value != p.value) return Reason::BAD_PROOF;
  if (!credentials::verify_request(req)) return Reason::BAD_PROOF;

  bn254::G1 sender_key;
  if (!address_key(tx.sender, sender_key)) return Reason::MALFORMED;
  if (!crypto::verify_signature(sender_key, p.signing_bytes(tx.sender), p.sender_sig)) {
    return Reason::BAD_SIGNATURE;
  }
  Bytes request_id = digest_bytes(crypto::Sha256::hash(p.request_bytes));
  if (inst->deposits.count(request_id) != 0) return Reason::BAD_PARAMS;
  return Reason::OK;
}

// ---- Commit ------------------------------------------------------------------

Reason check_commit(const CommitPayload& p, const ChainState& st, std::uint64_t height) {
  const ContractInstance* inst = find_contract(st, p.contract_id);
  if (inst == nullptr) return Reason::UNKNOWN_CONTRACT;
  const AuctionState* a = find_auction(*inst, p.auction_id);
  if (a == nullptr) return Reason::UNKNOWN_AUCTION;
  if (height >= a->t_commit) return Reason::DEADLINE;
  if (p.show.discloses_value) return Reason::BAD_PROOF;  // nothing about v may surface
  Bytes zeta = p.show.zeta_bytes();
  if (p.zeta != zeta) return Reason::BAD_PROOF;  // named tag and proven tag agree
  if (a->committed.count(zeta) != 0) return Reason::DUPLICATE_ZETA;
  if (!verify_show(inst->vk, p.auction_id, p.show, commit_context(p.contract_id))) {
    return Reason::BAD_PROOF;
  }
  return Reason::OK;
}

// ---- Reveal ------------------------------------------------------------------

Reason check_reveal(const RevealPayload& p, const ChainState& st, std::uint64_t height) {
  const ContractInstance* inst = find_contract(st, p.contract_id);
  if (inst == nullptr) return Reason::UNKNOWN_CONTRACT;
  const AuctionState* a = find_auction(*inst, p.auction_id);
  if (a == nullptr) return Reason::UNKNOWN_AUCTION;
  if (height < a->t_commit || height >= a->t_reveal) return Reason::DEADLINE;
  Bytes zeta = p.show.zeta_bytes();
  if (p.zeta != zeta) return Reason::BAD_PROOF;
  if (a->committed.count(zeta) == 0) return Reason::UNKNOWN_ZETA;
  if (a->revealed.count(zeta) != 0) return Reason::DUPLICATE_REVEAL;
  if (!p.show.discloses_value || p.show.disclosed_value != p.value) return Reason::BAD_PROOF;
  if (!verify_show(inst->vk, p.auction_id, p.show, reveal_context(p.contract_id))) {
    return Reason::BAD_PROOF;
  }
  return Reason::OK;
}

// ---- OpenMinPrice ------------------------------------------------------------

Reason check_open_min_price(const OpenMinPricePayload& p, const Transaction& tx,
                            const ChainState& st, std::uint64_t height) {
  const ContractInstance* inst = find_contract(st, p.contract_id);
  if (inst == nullptr) return Reason::UNKNOWN_CONTRACT;
  const AuctionState* a = find_auction(*inst, p.auction_id);
  if (a == nullptr) return Reason::UNKNOWN_AUCTION;
  if (height < a->t_commit || height >= a->t_reveal) return Reason::DEADLINE;
  if (tx.sender != a->worker) return Reason::NOT_WORKER;
  if (a->opened_min_price.has_value()) return Reason::ALREADY_OPENED;

  auto point = bn254::G1::from_bytes(a->min_price_commitment);
  if (!point) return Reason::BAD_PROOF;  // commitment never decodes: cannot open
  crypto::PedersenCommitment c{*point};
  if (!crypto::pedersen_verify_open(c, bn254::Fr::from_u64(p.min_price), p.blinding)) {
    return Reason::BAD_PROOF;
  }
  bn254::G1 worker_key;
  if (!address_key(tx.sender, worker_key)) return Reason::MALFORMED;
  if (!crypto::verify_signature(worker_key, p.signing_bytes(tx.sender), p.worker_sig)) {
    return Reason::BAD_SIGNATURE;
  }
  return Reason::OK;
}

// ---- Withdraw ----------------------------------------------------------------

Reason check_withdraw(const WithdrawPayload& p, const ChainState& st, std::uint64_t height) {
  const ContractInstance* inst = find_contract(st, p.contract_id);
  if (inst == nullptr) return Reason::UNKNOWN_CONTRACT;
  const AuctionState* a = find_auction(*inst, p.auction_id);
  if (a == nullptr) return Reason::UNKNOWN_AUCTION;
  if (height < a->t_reveal) return Reason::DEADLINE;

  Bytes zeta = p.show.zeta_bytes();
  if (p.zeta != zeta) return Reason::BAD_PROOF;
  auto revealed_it = a->revealed.find(zeta);
  if (revealed_it == a->revealed.end()) return Reason::UNKNOWN_ZETA;
  if (inst->spent.count(zeta) != 0) return Reason::DOUBLE_SPEND;

  if (!p.show.discloses_value || p.show.disclosed_value != revealed_it->second) {
    return Reason::BAD_PROOF;
  }
  if (!verify_show(inst->vk, p.auction_id, p.show,
                   withdraw_context(p.contract_id, p.payout_addr))) {
    return Reason::BAD_PROOF;
  }
  bn254::G1 payout_key;
  if (!address_key(p.payout_addr, payout_key)) return Reason::MALFORMED;
  if (!crypto::verify_signature(payout_key, p.signing_bytes(), p.addr_sig)) {
    return Reason::BAD_SIGNATURE;
  }
  return Reason::OK;
}

// ---- SubmitWork --------------------------------------------------------------

Reason check_submit_work(const SubmitWorkPayload& p, const ChainState& st,
                         std::uint64_t height) {
  const ContractInstance* inst = find_contract(st, p.contract_id);
  if (inst == nullptr) return Reason::UNKNOWN_CONTRACT;
  const AuctionState* a = find_auction(*inst, p.auction_id);
  if (a == nullptr) return Reason::UNKNOWN_AUCTION;
  if (height < a->t_reveal) return Reason::DEADLINE;
  if (a->work_binding.has_value()) return Reason::ALREADY_SUBMITTED;

  EffectiveOutcome o = effective_outcome(*a);
  if (o.phase != AuctionState::Phase::Won) return Reason::NOT_WINNER;
  if (p.show.zeta_bytes() != o.winning_zeta) return Reason::NOT_WINNER;
  if (p.show.discloses_value) return Reason::BAD_PROOF;
  if (p.file_digest.size() != 32) return Reason::MALFORMED;

  if (!verify_show(inst->vk, p.auction_id, p.show,
                   submit_work_context(p.contract_id, p.file_digest, p.submitter_pk))) {
    return Reason::BAD_PROOF;
  }
  bn254::G1 submitter_key;
  if (!address_key(p.submitter_pk, submitter_key)) return Reason::MALFORMED;
  if (!crypto::verify_signature(submitter_key, p.signing_bytes(), p.file_sig)) {
    return Reason::BAD_SIGNATURE;
  }
  return Reason::OK;
}

// ---- dispatch ----------------------------------------------------------------

Reason check_transaction(const Transaction& tx, const ChainState& st, std::uint64_t height) {
  switch (tx.kind) {
    case TxKind::Setup: {
      SetupPayload p;
      if (!SetupPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      return check_setup(p, tx, st);
    }
    case TxKind::Create: {
      CreatePayload p;
      if (!CreatePayload::decode(tx.payload, p)) return Reason::MALFORMED;
      return check_create(p, tx, st, height);
    }
    case TxKind::Deposit: {
      DepositPayload p;
      if (!DepositPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      return check_deposit(p, tx, st);
    }
    case TxKind::Commit: {
      CommitPayload p;
      if (!CommitPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      return check_commit(p, st, height);
    }
    case TxKind::Reveal: {
      RevealPayload p;
      if (!RevealPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      return check_reveal(p, st, height);
    }
    case TxKind::OpenMinPrice: {
      OpenMinPricePayload p;
      if (!OpenMinPricePayload::decode(tx.payload, p)) return Reason::MALFORMED;
      return check_open_min_price(p, tx, st, height);
    }
    case TxKind::Withdraw: {
      WithdrawPayload p;
      if (!WithdrawPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      return check_withdraw(p, st, height);
    }
    case TxKind::SubmitWork: {
      SubmitWorkPayload p;
      if (!SubmitWorkPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      return check_submit_work(p, st, height);
    }
  }
  return Reason::MALFORMED;
}

Reason apply_transaction(const Transaction& tx, ChainState& st, std::uint64_t height) {
  switch (tx.kind) {
    case TxKind::Setup: {
      SetupPayload p;
      if (!SetupPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      Reason r = check_setup(p, tx, st);
      if (r != Reason::OK) return r;
      ContractInstance inst;
      inst.contract_id = digest_bytes(tx.digest());
      inst.n = p.n;
      inst.t = p.t;
      inst.vk = p.vk;
      crypto::Digest vkd = p.vk.digest();
      inst.vk_digest = Bytes(vkd.begin(), vkd.end());
      inst.authority_shares = p.authority_shares;
      inst.denominations = p.denominations;
      st.contracts.emplace(inst.contract_id, std::move(inst));
      return Reason::OK;
    }
    case TxKind::Create: {
      CreatePayload p;
      if (!CreatePayload::decode(tx.payload, p)) return Reason::MALFORMED;
      Reason r = check_create(p, tx, st, height);
      if (r != Reason::OK) return r;
      AuctionState a;
      a.auction_id = digest_bytes(tx.digest());
      a.contract_id = p.contract_id;
      a.worker = tx.sender;
      a.min_price_commitment = p.min_price_commitment;
      a.t_commit = p.t_commit;
      a.t_reveal = p.t_reveal;
      a.policy = p.policy;
      st.contracts.at(p.contract_id).auctions.emplace(a.auction_id, std::move(a));
      return Reason::OK;
    }
    case TxKind::Deposit: {
      DepositPayload p;
      if (!DepositPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      Reason r = check_deposit(p, tx, st);
      if (r != Reason::OK) return r;
      st.accounts[tx.sender] -= p.value;
      st.buffer += p.value;
      Bytes request_id = digest_bytes(crypto::Sha256::hash(p.request_bytes));
      st.contracts.at(p.contract_id).deposits.emplace(
          request_id, PendingDeposit{p.value, p.request_bytes});
      return Reason::OK;
    }
    case TxKind::Commit: {
      CommitPayload p;
      if (!CommitPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      Reason r = check_commit(p, st, height);
      if (r != Reason::OK) return r;
      st.contracts.at(p.contract_id)
          .auctions.at(p.auction_id)
          .committed.emplace(p.show.zeta_bytes(), height);
      return Reason::OK;
    }
    case TxKind::Reveal: {
      RevealPayload p;
      if (!RevealPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      Reason r = check_reveal(p, st, height);
      if (r != Reason::OK) return r;
      st.contracts.at(p.contract_id)
          .auctions.at(p.auction_id)
          .revealed.emplace(p.show.zeta_bytes(), p.value);
      return Reason::OK;
    }
    case TxKind::OpenMinPrice: {
      OpenMinPricePayload p;
      if (!OpenMinPricePayload::decode(tx.payload, p)) return Reason::MALFORMED;
      Reason r = check_open_min_price(p, tx, st, height);
      if (r != Reason::OK) return r;
      st.contracts.at(p.contract_id).auctions.at(p.auction_id).opened_min_price =
          p.min_price;
      return Reason::OK;
    }
    case TxKind::Withdraw: {
      WithdrawPayload p;
      if (!WithdrawPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      Reason r = check_withdraw(p, st, height);
      if (r != Reason::OK) return r;
      auto& inst = st.contracts.at(p.contract_id);
      auto& a = inst.auctions.at(p.auction_id);
      EffectiveOutcome o = effective_outcome(a);
      if (a.outcome == AuctionState::Phase::Pending) store_outcome(a, o);
      Bytes zeta = p.show.zeta_bytes();
      std::uint64_t payout = withdraw_payout(a, o, zeta, a.revealed.at(zeta));
      if (payout > st.buffer) {
        // one deposit backing wins in several auctions can promise more than
        // it paid in; fail loudly instead of corrupting the accounts
        throw IntegrityError("withdraw would overdraw the contract buffer");
      }
      st.buffer -= payout;
      st.accounts[p.payout_addr] += payout;
      inst.spent.insert(zeta);
      return Reason::OK;
    }
    case TxKind::SubmitWork: {
      SubmitWorkPayload p;
      if (!SubmitWorkPayload::decode(tx.payload, p)) return Reason::MALFORMED;
      Reason r = check_submit_work(p, st, height);
      if (r != Reason::OK) return r;
      auto& inst = st.contracts.at(p.contract_id);
      auto& a = inst.auctions.at(p.auction_id);
      EffectiveOutcome o = effective_outcome(a);
      if (a.outcome == AuctionState::Phase::Pending) store_outcome(a, o);
      a.work_binding = FileCommitmentRecord{p.file_digest, p.submitter_pk,
                                            p.file_sig.to_bytes()};
      // work-acceptance stub: the accepted binding releases the clearing
      // amount to the worker; real proof-of-work verification plugs in here
      if (a.policy == DEFAULT_POLICY && !a.worker_paid) {
        if (a.clearing_price > st.buffer) {
          throw IntegrityError("worker payment would overdraw the contract buffer");
        }
        st.buffer -= a.clearing_price;
        st.accounts[a.worker] += a.clearing_price;
        a.worker_paid = true;
      }
      return Reason::OK;
    }
  }
  return Reason::MALFORMED;
}

Reason resolve_auction(ChainState& st, const Bytes& contract_id, const Bytes& auction_id,
                       std::uint64_t height) {
  auto cit = st.contracts.find(contract_id);
  if (cit == st.contracts.end()) return Reason::UNKNOWN_CONTRACT;
  auto ait = cit->second.auctions.find(auction_id);
  if (ait == cit->second.auctions.end()) return Reason::UNKNOWN_AUCTION;
  AuctionState& a = ait->second;
  if (height < a.t_reveal) return Reason::DEADLINE;
  if (a.outcome != AuctionState::Phase::Pending) return Reason::ALREADY_RESOLVED;
  store_outcome(a, effective_outcome(a));
  return Reason::OK;
}

void resolve_due_auctions(ChainState& st) {
  for (auto& [cid, inst] : st.contracts) {
    for (auto& [aid, a] : inst.auctions) {
      if (a.outcome == AuctionState::Phase::Pending && st.height >= a.t_reveal) {
        store_outcome(a, effective_outcome(a));
      }
    }
  }
}

std::vector<ledger::ApplyResult> advance(ChainState& st) {
  auto results = ledger::advance_block(
      st, [](const Transaction& tx, ChainState& s, std::uint64_t height) {
        return apply_transaction(tx, s, height);
      });
  resolve_due_auctions(st);
  return results;
}

}  // namespace sealbid::contract
