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

#include "sealbid/contract/state.hpp"

namespace sealbid::contract {

using crypto::ByteWriter;

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::OK: return "OK";
    case Reason::DEADLINE: return "DEADLINE";
    case Reason::BAD_PROOF: return "BAD_PROOF";
    case Reason::UNKNOWN_ZETA: return "UNKNOWN_ZETA";
    case Reason::DOUBLE_SPEND: return "DOUBLE_SPEND";
    case Reason::BAD_DENOMINATION: return "BAD_DENOMINATION";
    case Reason::INSUFFICIENT_FUNDS: return "INSUFFICIENT_FUNDS";
    case Reason::NOT_WORKER: return "NOT_WORKER";
    case Reason::ALREADY_RESOLVED: return "ALREADY_RESOLVED";
    case Reason::UNKNOWN_CONTRACT: return "UNKNOWN_CONTRACT";
    case Reason::UNKNOWN_AUCTION: return "UNKNOWN_AUCTION";
    case Reason::DUPLICATE_ZETA: return "DUPLICATE_ZETA";
    case Reason::DUPLICATE_REVEAL: return "DUPLICATE_REVEAL";
    case Reason::ALREADY_OPENED: return "ALREADY_OPENED";
    case Reason::BAD_PARAMS: return "BAD_PARAMS";
    case Reason::BAD_SIGNATURE: return "BAD_SIGNATURE";
    case Reason::NOT_WINNER: return "NOT_WINNER";
    case Reason::ALREADY_SUBMITTED: return "ALREADY_SUBMITTED";
    case Reason::MALFORMED: return "MALFORMED";
  }
  return "UNKNOWN";
}

Bytes encode_auction(const AuctionState& a) {
  ByteWriter w;
  w.bytes(a.auction_id);
  w.bytes(a.contract_id);
  w.bytes(a.worker);
  w.bytes(a.min_price_commitment);
  w.u64(a.t_commit);
  w.u64(a.t_reveal);
  w.str(a.policy);
  w.u32(static_cast<std::uint32_t>(a.committed.size()));
  for (const auto& [zeta, height] : a.committed) {
    w.bytes(zeta);
    w.u64(height);
  }
  w.u32(static_cast<std::uint32_t>(a.revealed.size()));
  for (const auto& [zeta, value] : a.revealed) {
    w.bytes(zeta);
    w.u64(value);
  }
  w.u8(a.opened_min_price.has_value() ? 1 : 0);
  w.u64(a.opened_min_price.value_or(0));
  w.u8(static_cast<std::uint8_t>(a.outcome));
  w.bytes(a.winning_zeta);
  w.u64(a.clearing_price);
  w.u64(a.winning_value);
  w.u8(a.work_binding.has_value() ? 1 : 0);
  if (a.work_binding) {
    w.bytes(a.work_binding->file_digest);
    w.bytes(a.work_binding->submitter_pk);
    w.bytes(a.work_binding->signature);
  }
  w.u8(a.worker_paid ? 1 : 0);
  return w.take();
}

Bytes encode_instance(const ContractInstance& c) {
  ByteWriter w;
  w.bytes(c.contract_id);
  w.u32(c.n);
  w.u32(c.t);
  w.bytes(c.vk.to_bytes());
  w.bytes(c.vk_digest);
  w.u32(static_cast<std::uint32_t>(c.authority_shares.size()));
  for (const auto& s : c.authority_shares) w.bytes(s.to_bytes());
  w.u32(static_cast<std::uint32_t>(c.denominations.size()));
  for (std::uint64_t d : c.denominations) w.u64(d);
  w.u32(static_cast<std::uint32_t>(c.spent.size()));
  for (const auto& z : c.spent) w.bytes(z);
  w.u32(static_cast<std::uint32_t>(c.deposits.size()));
  for (const auto& [id, dep] : c.deposits) {
    w.bytes(id);
    w.u64(dep.value);
    w.bytes(dep.request_bytes);
  }
  w.u32(static_cast<std::uint32_t>(c.auctions.size()));
  for (const auto& [id, a] : c.auctions) {
    w.bytes(id);
    w.bytes(encode_auction(a));
  }
  return w.take();
}

}  // namespace sealbid::contract
