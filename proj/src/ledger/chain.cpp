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

#include "sealbid/ledger/chain.hpp"

#include <json.hpp>

#include "sealbid/crypto/core.hpp"

namespace sealbid::ledger {

using crypto::ByteWriter;
using crypto::hex_decode;
using crypto::hex_encode;
using json = nlohmann::ordered_json;

namespace {
constexpr const char* WIRE_VERSION = "sealbid-tx-v1";
}

const char* kind_name(TxKind k) {
  switch (k) {
    case TxKind::Setup: return "Setup";
    case TxKind::Create: return "Create";
    case TxKind::Deposit: return "Deposit";
    case TxKind::Commit: return "Commit";
    case TxKind::Reveal: return "Reveal";
    case TxKind::OpenMinPrice: return "OpenMinPrice";
    case TxKind::Withdraw: return "Withdraw";
    case TxKind::SubmitWork: return "SubmitWork";
  }
  return "Unknown";
}

bool kind_from_name(const std::string& name, TxKind& out) {
  static const std::pair<const char*, TxKind> table[] = {
      {"Setup", TxKind::Setup},       {"Create", TxKind::Create},
      {"Deposit", TxKind::Deposit},   {"Commit", TxKind::Commit},
      {"Reveal", TxKind::Reveal},     {"OpenMinPrice", TxKind::OpenMinPrice},
      {"Withdraw", TxKind::Withdraw}, {"SubmitWork", TxKind::SubmitWork},
  };
  for (const auto& [n, k] : table) {
    if (name == n) {
      out = k;
      return true;
    }
  }
  return false;
}

std::string Transaction::to_wire() const {
  json j;
  j["version"] = WIRE_VERSION;
  j["curve"] = crypto::CURVE_ID;
  j["kind"] = kind_name(kind);
  j["sender"] = hex_encode(sender);
  j["payload"] = hex_encode(payload);
  return j.dump();
}

std::optional<Transaction> Transaction::from_wire(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (!j.contains("version") || j["version"] != WIRE_VERSION) return std::nullopt;
  if (!j.contains("curve") || j["curve"] != crypto::CURVE_ID) return std::nullopt;
  if (!j.contains("kind") || !j.contains("sender") || !j.contains("payload")) {
    return std::nullopt;
  }
  Transaction tx;
  if (!kind_from_name(j["kind"].get<std::string>(), tx.kind)) return std::nullopt;
  bool ok = false;
  tx.sender = hex_decode(j["sender"].get<std::string>(), ok);
  if (!ok) return std::nullopt;
  tx.payload = hex_decode(j["payload"].get<std::string>(), ok);
  if (!ok) return std::nullopt;
  return tx;
}

crypto::Digest Transaction::digest() const {
  return crypto::Sha256::hash(to_wire());
}

std::size_t submit(ChainState& st, Transaction tx) {
  st.pending.push_back(std::move(tx));
  return st.pending.size() - 1;
}

std::vector<ApplyResult> advance_block(ChainState& st, const TxHandler& handler) {
  st.height += 1;
  std::vector<Transaction> block = std::move(st.pending);
  st.pending.clear();

  std::vector<ApplyResult> results;
  results.reserve(block.size());
  for (const Transaction& tx : block) {
    ApplyResult r;
    r.height = st.height;
    r.kind = tx.kind;
    r.sender = tx.sender;
    r.tx_digest = tx.digest();
    r.size = tx.wire_size();
    r.reason = handler(tx, st, st.height);
    r.applied = r.reason == Reason::OK;
    results.push_back(std::move(r));
  }
  return results;
}

std::uint64_t balance_of(const ChainState& st, const Address& addr) {
  auto it = st.accounts.find(addr);
  return it == st.accounts.end() ? 0 : it->second;
}

std::uint64_t current_height(const ChainState& st) { return st.height; }

std::uint64_t total_coins(const ChainState& st) {
  std::uint64_t sum = st.buffer;
  for (const auto& [addr, bal] : st.accounts) sum += bal;
  return sum;
}

crypto::Digest state_digest(const ChainState& st) {
  ByteWriter w;
  w.str("sealbid-state-v1");
  w.u64(st.height);
  w.u64(st.buffer);
  w.u32(static_cast<std::uint32_t>(st.accounts.size()));
  for (const auto& [addr, bal] : st.accounts) {
    w.bytes(addr);
    w.u64(bal);
  }
  w.u32(static_cast<std::uint32_t>(st.contracts.size()));
  for (const auto& [id, inst] : st.contracts) {
    w.bytes(id);
    w.bytes(contract::encode_instance(inst));
  }
  // pending is transient and excluded: the digest describes applied state
  return crypto::Sha256::hash(w.data());
}

std::string trace_line(const ApplyResult& r) {
  std::string out;
  out += std::to_string(r.height);
  out += '\t';
  out += kind_name(r.kind);
  out += '\t';
  out += hex_encode(r.sender);
  out += '\t';
  out += r.applied ? "applied" : "rejected";
  out += '\t';
  out += contract::reason_name(r.reason);
  out += '\t';
  out += hex_encode(r.tx_digest);
  out += '\t';
  out += std::to_string(r.size);
  return out;
}

}  // namespace sealbid::ledger
