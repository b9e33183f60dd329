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

#include <functional>

#include "sealbid/contract/state.hpp"

namespace sealbid::ledger {

using contract::Bytes;
using contract::Reason;

// An address is the 32-byte verification key of a signature key pair; coins
// move only under a signature by the matching secret.
using Address = Bytes;

enum class TxKind : std::uint8_t {
  Setup,
  Create,
  Deposit,
  Commit,
  Reveal,
  OpenMinPrice,
  Withdraw,
  SubmitWork,
};

const char* kind_name(TxKind k);
bool kind_from_name(const std::string& name, TxKind& out);

struct Transaction {
  TxKind kind = TxKind::Setup;
  Address sender;
  Bytes payload;  // kind-specific canonical binary encoding

  // Versioned wire envelope (single-line JSON, hex fields, fixed key order).
  // Transaction sizes are measured on this encoding.
  std::string to_wire() const;
  static std::optional<Transaction> from_wire(const std::string& line);

  std::size_t wire_size() const { return to_wire().size(); }
  crypto::Digest digest() const;
};

struct ApplyResult {
  std::uint64_t height = 0;
  TxKind kind = TxKind::Setup;
  Address sender;
  bool applied = false;
  Reason reason = Reason::OK;
  crypto::Digest tx_digest{};
  std::size_t size = 0;
};

// Block-height clock, coin accounts, the contract buffer, and contract state.
// Single writer: advance_block mutates, everything else reads.
struct ChainState {
  std::uint64_t height = 0;
  std::map<Address, std::uint64_t> accounts;
  std::uint64_t buffer = 0;
  std::map<Bytes, contract::ContractInstance> contracts;
  std::vector<Transaction> pending;
};

// Appends to the mempool in arrival order; validity is judged only at block
// application.
std::size_t submit(ChainState& st, Transaction tx);

// Applies one pending transaction against the post-increment height; the
// handler must leave the state untouched when it rejects.
using TxHandler = std::function<Reason(const Transaction&, ChainState&, std::uint64_t)>;

std::vector<ApplyResult> advance_block(ChainState& st, const TxHandler& handler);

std::uint64_t balance_of(const ChainState& st, const Address& addr);
std::uint64_t current_height(const ChainState& st);
std::uint64_t total_coins(const ChainState& st);

// Canonical digest over the full state; golden replays compare these.
crypto::Digest state_digest(const ChainState& st);

// One trace line per applied transaction, stable field order.
std::string trace_line(const ApplyResult& r);

}  // namespace sealbid::ledger
