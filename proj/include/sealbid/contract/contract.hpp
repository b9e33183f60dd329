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

#include "sealbid/auction/vickrey.hpp"
#include "sealbid/credentials/show.hpp"
#include "sealbid/crypto/signature.hpp"
#include "sealbid/ledger/chain.hpp"

namespace sealbid::contract {

using credentials::AggregatedVerificationKey;
using credentials::AuthorityPublicShare;
using credentials::Credential;
using credentials::CredentialRequest;
using credentials::ShowProof;
using crypto::Drbg;
using crypto::Signature;
using crypto::SigningKey;
using ledger::Address;
using ledger::ChainState;
using ledger::Transaction;
using ledger::TxKind;

// Deadline convention (half-open windows over the applying block height h):
//   Commit                 valid iff              h < t_commit
//   Reveal / OpenMinPrice  valid iff  t_commit <= h < t_reveal
//   Withdraw / SubmitWork  valid iff  t_reveal <= h

inline constexpr const char* DEFAULT_POLICY = "vickrey-earmark-v1";

// ---- payloads ---------------------------------------------------------------

struct SetupPayload {
  std::uint32_t n = 0;
  std::uint32_t t = 0;
  std::vector<std::uint64_t> denominations;
  AggregatedVerificationKey vk;
  std::vector<AuthorityPublicShare> authority_shares;

  Bytes encode() const;
  static bool decode(const Bytes& in, SetupPayload& out);
};

// Create carries no cryptography: the commitment rides as opaque bytes and
// is checked only when the worker opens it. Its checker therefore runs in
// microseconds, matching the cost profile of the other operations' split.
struct CreatePayload {
  Bytes contract_id;
  Bytes vk_digest;             // the trusted authority set the worker selected
  Bytes min_price_commitment;  // serialized Pedersen point, opaque here
  std::uint64_t t_commit = 0;
  std::uint64_t t_reveal = 0;
  std::string policy;       // winner-treatment policy hook
  std::string description;  // advertised product terms

  Bytes encode() const;
  static bool decode(const Bytes& in, CreatePayload& out);
};

struct DepositPayload {
  Bytes contract_id;
  std::uint64_t value = 0;
  Bytes request_bytes;  // serialized CredentialRequest
  Signature sender_sig;

  Bytes encode() const;
  static bool decode(const Bytes& in, DepositPayload& out);
  Bytes signing_bytes(const Address& sender) const;
};

struct CommitPayload {
  Bytes contract_id;
  Bytes auction_id;
  Bytes zeta;      // the tag being recorded, also inside the show proof
  ShowProof show;  // no value disclosure

  Bytes encode() const;
  static bool decode(const Bytes& in, CommitPayload& out);
};

struct RevealPayload {
  Bytes contract_id;
  Bytes auction_id;
  Bytes zeta;
  std::uint64_t value = 0;
  ShowProof show;  // discloses the value

  Bytes encode() const;
  static bool decode(const Bytes& in, RevealPayload& out);
};

struct OpenMinPricePayload {
  Bytes contract_id;
  Bytes auction_id;
  std::uint64_t min_price = 0;
  bn254::Fr blinding;
  Signature worker_sig;

  Bytes encode() const;
  static bool decode(const Bytes& in, OpenMinPricePayload& out);
  Bytes signing_bytes(const Address& sender) const;
};

struct WithdrawPayload {
  Bytes contract_id;
  Bytes auction_id;
  Address payout_addr;
  Bytes zeta;
  ShowProof show;  // discloses the value; its context is bound to payout_addr
  Signature addr_sig;

  Bytes encode() const;
  static bool decode(const Bytes& in, WithdrawPayload& out);
  Bytes signing_bytes() const;
};

struct SubmitWorkPayload {
  Bytes contract_id;
  Bytes auction_id;
  ShowProof show;  // possession of the winning tag's credential
  Bytes file_digest;
  Bytes submitter_pk;
  Signature file_sig;

  Bytes encode() const;
  static bool decode(const Bytes& in, SubmitWorkPayload& out);
  Bytes signing_bytes() const;
};

// Show-proof context binding per phase; cross-phase and cross-contract
// replays fail verification.
Bytes commit_context(const Bytes& contract_id);
Bytes reveal_context(const Bytes& contract_id);
Bytes withdraw_context(const Bytes& contract_id, const Address& payout_addr);
Bytes submit_work_context(const Bytes& contract_id, const Bytes& file_digest,
                          const Bytes& submitter_pk);

// ---- procedures (client-side transaction builders) --------------------------

Transaction make_setup_tx(const Address& sender, std::uint32_t n, std::uint32_t t,
                          const std::vector<std::uint64_t>& denominations,
                          const AggregatedVerificationKey& vk,
                          const std::vector<AuthorityPublicShare>& shares);

Transaction make_create_tx(const Address& worker, const Bytes& contract_id,
                           const AggregatedVerificationKey& vk,
                           const crypto::PedersenCommitment& min_price_commitment,
                           std::uint64_t t_commit, std::uint64_t t_reveal,
                           const std::string& description,
                           const std::string& policy = DEFAULT_POLICY);

Transaction make_deposit_tx(const SigningKey& bidder, const Bytes& contract_id,
                            std::uint64_t value, const CredentialRequest& request,
                            Drbg& rng);

// Builds the show proof internally; this is the measured Commit procedure.
Transaction make_commit_tx(const Address& sender, const Bytes& contract_id,
                           const Bytes& auction_id, const Credential& cred,
                           const AggregatedVerificationKey& vk, Drbg& rng);

Transaction make_reveal_tx(const Address& sender, const Bytes& contract_id,
                           const Bytes& auction_id, const Credential& cred,
                           const AggregatedVerificationKey& vk, Drbg& rng);

Transaction make_open_min_price_tx(const SigningKey& worker, const Bytes& contract_id,
                                   const Bytes& auction_id, std::uint64_t min_price,
                                   const bn254::Fr& blinding, Drbg& rng);

Transaction make_withdraw_tx(const Address& sender, const Bytes& contract_id,
                             const Bytes& auction_id, const SigningKey& payout_key,
                             const Credential& cred, const AggregatedVerificationKey& vk,
                             Drbg& rng);

Transaction make_submit_work_tx(const Address& sender, const Bytes& contract_id,
                                const Bytes& auction_id, const Credential& cred,
                                const AggregatedVerificationKey& vk,
                                const Bytes& file_digest, Drbg& rng);

// ---- checkers (pure validation) ---------------------------------------------

Reason check_setup(const SetupPayload& p, const Transaction& tx, const ChainState& st);
Reason check_create(const CreatePayload& p, const Transaction& tx, const ChainState& st,
                    std::uint64_t height);
Reason check_deposit(const DepositPayload& p, const Transaction& tx, const ChainState& st);
Reason check_commit(const CommitPayload& p, const ChainState& st, std::uint64_t height);
Reason check_reveal(const RevealPayload& p, const ChainState& st, std::uint64_t height);
Reason check_open_min_price(const OpenMinPricePayload& p, const Transaction& tx,
                            const ChainState& st, std::uint64_t height);
Reason check_withdraw(const WithdrawPayload& p, const ChainState& st, std::uint64_t height);
Reason check_submit_work(const SubmitWorkPayload& p, const ChainState& st,
                         std::uint64_t height);

// Checker entry point used by the benchmark: decode plus kind dispatch.
Reason check_transaction(const Transaction& tx, const ChainState& st, std::uint64_t height);

// Validates, then applies atomically; rejections leave the state untouched.
Reason apply_transaction(const Transaction& tx, ChainState& st, std::uint64_t height);

// Resolution. Pending auctions resolve from the revealed set once height
// reaches t_reveal: explicitly per block (advance), or lazily by the first
// Withdraw / SubmitWork that touches them.
auction::Outcome computed_outcome(const AuctionState& a);
Reason resolve_auction(ChainState& st, const Bytes& contract_id, const Bytes& auction_id,
                       std::uint64_t height);
void resolve_due_auctions(ChainState& st);

// Ledger advance wired to the contract handler plus due-auction resolution.
std::vector<ledger::ApplyResult> advance(ChainState& st);

}  // namespace sealbid::contract
