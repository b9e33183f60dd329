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

#include <map>
#include <optional>
#include <set>

#include "sealbid/credentials/keys.hpp"

namespace sealbid::contract {

using crypto::Bytes;

// Rejection reasons; stable names ride in receipts and the trace.
enum class Reason {
  OK,
  DEADLINE,
  BAD_PROOF,
  UNKNOWN_ZETA,
  DOUBLE_SPEND,
  BAD_DENOMINATION,
  INSUFFICIENT_FUNDS,
  NOT_WORKER,
  ALREADY_RESOLVED,
  UNKNOWN_CONTRACT,
  UNKNOWN_AUCTION,
  DUPLICATE_ZETA,
  DUPLICATE_REVEAL,
  ALREADY_OPENED,
  BAD_PARAMS,
  BAD_SIGNATURE,
  NOT_WINNER,
  ALREADY_SUBMITTED,
  MALFORMED,
};

const char* reason_name(Reason r);

// Winner's file binding from SubmitWork: replica digest plus a signature
// under a fresh key the show proof vouches for.
struct FileCommitmentRecord {
  Bytes file_digest;
  Bytes submitter_pk;
  Bytes signature;
};

struct AuctionState {
  Bytes auction_id;
  Bytes contract_id;  // trusted authority set reference
  Bytes worker;       // worker address (payout target for the clearing amount)
  Bytes min_price_commitment;
  std::uint64_t t_commit = 0;
  std::uint64_t t_reveal = 0;
  std::string policy;

  std::map<Bytes, std::uint64_t> committed;  // zeta -> commit block height
  std::map<Bytes, std::uint64_t> revealed;   // zeta -> disclosed v
  std::optional<std::uint64_t> opened_min_price;

  enum class Phase { Pending, Failed, Won };
  Phase outcome = Phase::Pending;
  Bytes winning_zeta;
  std::uint64_t clearing_price = 0;  // v'
  std::uint64_t winning_value = 0;   // winner's v

  std::optional<FileCommitmentRecord> work_binding;
  bool worker_paid = false;
};

struct PendingDeposit {
  std::uint64_t value = 0;
  Bytes request_bytes;
};

struct ContractInstance {
  Bytes contract_id;
  std::uint32_t n = 0;
  std::uint32_t t = 0;
  credentials::AggregatedVerificationKey vk;
  Bytes vk_digest;  // fixed at setup; checkers compare against it directly
  std::vector<credentials::AuthorityPublicShare> authority_shares;
  std::vector<std::uint64_t> denominations;  // strictly increasing

  std::set<Bytes> spent;                      // contract-wide withdrawn tags
  std::map<Bytes, PendingDeposit> deposits;   // request id -> deposit record
  std::map<Bytes, AuctionState> auctions;
};

// Deterministic encodings feeding the chain state digest.
Bytes encode_auction(const AuctionState& a);
Bytes encode_instance(const ContractInstance& c);

}  // namespace sealbid::contract
