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

#include "sealbid/harness/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "sealbid/credentials/show.hpp"

namespace sealbid::harness {

using contract::Reason;
using credentials::Credential;
using crypto::Drbg;
using crypto::hex_decode;
using crypto::hex_encode;
using crypto::SigningKey;
using ledger::Address;
using ledger::Transaction;
using ledger::TxKind;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* TRACE_VERSION = "sealbid-trace-v1";

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
  throw ConfigError("scenario field '" + field + "': " + what);
}

BidderSpec::WithdrawBehavior withdraw_behavior_from(const std::string& s,
                                                    const std::string& field) {
  if (s == "normal") return BidderSpec::WithdrawBehavior::Normal;
  if (s == "never") return BidderSpec::WithdrawBehavior::Never;
  if (s == "double-spend") return BidderSpec::WithdrawBehavior::DoubleSpend;
  config_error(field, "expected one of normal|never|double-spend, got '" + s + "'");
}

const char* withdraw_behavior_name(BidderSpec::WithdrawBehavior b) {
  switch (b) {
    case BidderSpec::WithdrawBehavior::Normal: return "normal";
    case BidderSpec::WithdrawBehavior::Never: return "never";
    case BidderSpec::WithdrawBehavior::DoubleSpend: return "double-spend";
  }
  return "normal";
}

Bytes digest_to_bytes(const crypto::Digest& d) { return Bytes(d.begin(), d.end()); }

}  // namespace

Scenario Scenario::from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ConfigError("scenario: not a JSON object");
  }
  Scenario s;
  try {
    s.seed = j.at("seed").get<std::uint64_t>();
    s.authorities = j.at("ceremony").at("n").get<std::uint32_t>();
    s.threshold = j.at("ceremony").at("t").get<std::uint32_t>();
    if (j.contains("denominations")) {
      s.denominations = j.at("denominations").get<std::vector<std::uint64_t>>();
    }
    s.t_commit = j.at("t_commit").get<std::uint64_t>();
    s.t_reveal = j.at("t_reveal").get<std::uint64_t>();
    s.end_height = j.at("end_height").get<std::uint64_t>();
    const auto& w = j.at("worker");
    s.worker.min_price = w.at("min_price").get<std::uint64_t>();
    s.worker.opens = w.value("opens", true);
    s.worker.open_height = w.value("open_height", std::uint64_t{0});
    s.winner_submits_work = j.value("winner_submits_work", true);
    s.description = j.value("description", std::string{});
    for (const auto& bj : j.at("bidders")) {
      BidderSpec b;
      b.name = bj.at("name").get<std::string>();
      b.funding = bj.at("funding").get<std::uint64_t>();
      b.deposit = bj.at("deposit").get<std::uint64_t>();
      b.commit_height = bj.at("commit_height").get<std::uint64_t>();
      if (bj.contains("reveal_height") && bj.at("reveal_height").is_string()) {
        if (bj.at("reveal_height").get<std::string>() != "never") {
          config_error("bidders." + b.name + ".reveal_height",
                       "string form must be \"never\"");
        }
        b.reveals = false;
      } else {
        b.reveals = true;
        b.reveal_height = bj.value("reveal_height", std::uint64_t{0});
      }
      b.withdraw = withdraw_behavior_from(bj.value("withdraw", std::string("normal")),
                                          "bidders." + b.name + ".withdraw");
      b.withdraw_height = bj.value("withdraw_height", std::uint64_t{0});
      s.bidders.push_back(std::move(b));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
  s.validate();
  return s;
}

Scenario Scenario::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("scenario: cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string Scenario::to_json() const {
  json j;
  j["seed"] = seed;
  j["ceremony"] = {{"n", authorities}, {"t", threshold}};
  j["denominations"] = denominations;
  j["t_commit"] = t_commit;
  j["t_reveal"] = t_reveal;
  j["end_height"] = end_height;
  j["worker"] = {{"min_price", worker.min_price},
                 {"opens", worker.opens},
                 {"open_height", worker.open_height}};
  j["winner_submits_work"] = winner_submits_work;
  j["description"] = description;
  j["bidders"] = json::array();
  for (const auto& b : bidders) {
    json bj;
    bj["name"] = b.name;
    bj["funding"] = b.funding;
    bj["deposit"] = b.deposit;
    bj["commit_height"] = b.commit_height;
    if (b.reveals) {
      bj["reveal_height"] = b.reveal_height;
    } else {
      bj["reveal_height"] = "never";
    }
    bj["withdraw"] = withdraw_behavior_name(b.withdraw);
    bj["withdraw_height"] = b.withdraw_height;
    j["bidders"].push_back(bj);
  }
  return j.dump(2);
}

void Scenario::validate() const {
  if (authorities == 0) config_error("ceremony.n", "must be positive");
  if (threshold == 0 || threshold > authorities) {
    config_error("ceremony.t", "must satisfy 0 < t <= n");
  }
  if (denominations.empty()) config_error("denominations", "must be non-empty");
  for (std::size_t i = 0; i < denominations.size(); ++i) {
    if (denominations[i] == 0) config_error("denominations", "values must be positive");
    if (i > 0 && denominations[i] <= denominations[i - 1]) {
      config_error("denominations", "must be strictly increasing");
    }
  }
  if (t_commit < 4) config_error("t_commit", "needs at least 4 blocks of preparation");
  if (t_commit >= t_reveal) config_error("t_reveal", "must exceed t_commit");
  if (end_height < t_reveal + 3) {
    config_error("end_height", "must leave at least 3 blocks after t_reveal");
  }
  std::set<std::string> names;
  for (const auto& b : bidders) {
    std::string field = "bidders." + (b.name.empty() ? "<unnamed>" : b.name);
    if (b.name.empty()) config_error(field + ".name", "must be non-empty");
    if (!names.insert(b.name).second) config_error(field + ".name", "duplicate");
    if (b.funding < b.deposit) config_error(field + ".funding", "below the deposit");
    bool denominated = false;
    for (std::uint64_t d : denominations) denominated |= d == b.deposit;
    if (!denominated) config_error(field + ".deposit", "not in the denomination set");
    if (b.commit_height < 4) {
      config_error(field + ".commit_height", "before the deposit block");
    }
    if (b.commit_height > end_height) config_error(field + ".commit_height", "past the end");
    if (b.reveals && b.reveal_height != 0 && b.reveal_height > end_height) {
      config_error(field + ".reveal_height", "past the end");
    }
    if (b.withdraw_height != 0 && b.withdraw_height + 1 > end_height) {
      config_error(field + ".withdraw_height", "needs a following block");
    }
  }
}

Scenario demo_scenario() {
  Scenario s;
  s.seed = 20260808;
  s.authorities = 3;
  s.threshold = 2;
  s.denominations = {1, 2, 3, 5, 10, 20, 50, 100};
  s.t_commit = 10;
  s.t_reveal = 16;
  s.end_height = 22;
  s.worker.min_price = 1;
  s.worker.opens = true;
  s.description = "honest three-bidder run: bids 5, 3, 2 at reserve 1";
  s.bidders = {
      {"alice", 10, 5, 6, true, 11, BidderSpec::WithdrawBehavior::Normal, 0},
      {"bob", 10, 3, 7, true, 12, BidderSpec::WithdrawBehavior::Normal, 0},
      {"carol", 10, 2, 8, true, 13, BidderSpec::WithdrawBehavior::Normal, 0},
  };
  return s;
}

// ---- runner -------------------------------------------------------------------

namespace {

struct BidderRuntime {
  BidderSpec spec;
  SigningKey key;
  Address addr;
  SigningKey payout_key;
  SigningKey second_payout_key;  // double-spend attempts use a fresh address
  std::optional<Credential> credential;
  Bytes zeta;  // tag for the scenario's auction, known after issuance
};

std::string record_line(const ApplyResult& r, const Transaction& tx) {
  json j;
  j["height"] = r.height;
  j["kind"] = ledger::kind_name(r.kind);
  j["sender"] = hex_encode(r.sender);
  j["result"] = r.applied ? "applied" : "rejected";
  j["reason"] = contract::reason_name(r.reason);
  j["digest"] = hex_encode(r.tx_digest);
  j["size"] = r.size;
  j["tx"] = tx.to_wire();
  return j.dump();
}

struct ParsedRecord {
  ApplyResult result;
  Transaction tx;
};

bool parse_record(const std::string& line, ParsedRecord& out, std::string& err) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    err = "unparseable record line";
    return false;
  }
  try {
    out.result.height = j.at("height").get<std::uint64_t>();
    if (!ledger::kind_from_name(j.at("kind").get<std::string>(), out.result.kind)) {
      err = "unknown kind";
      return false;
    }
    bool ok = false;
    out.result.sender = hex_decode(j.at("sender").get<std::string>(), ok);
    if (!ok) {
      err = "bad sender hex";
      return false;
    }
    std::string result = j.at("result").get<std::string>();
    if (result != "applied" && result != "rejected") {
      err = "bad result value";
      return false;
    }
    out.result.applied = result == "applied";
    std::string reason = j.at("reason").get<std::string>();
    bool reason_ok = false;
    for (int i = 0; i <= static_cast<int>(Reason::MALFORMED); ++i) {
      if (reason == contract::reason_name(static_cast<Reason>(i))) {
        out.result.reason = static_cast<Reason>(i);
        reason_ok = true;
        break;
      }
    }
    if (!reason_ok) {
      err = "unknown reason code";
      return false;
    }
    Bytes dg = hex_decode(j.at("digest").get<std::string>(), ok);
    if (!ok || dg.size() != 32) {
      err = "bad digest hex";
      return false;
    }
    std::copy(dg.begin(), dg.end(), out.result.tx_digest.begin());
    out.result.size = j.at("size").get<std::size_t>();
    auto tx = Transaction::from_wire(j.at("tx").get<std::string>());
    if (!tx) {
      err = "embedded transaction does not decode";
      return false;
    }
    out.tx = *tx;
  } catch (const json::exception& e) {
    err = e.what();
    return false;
  }
  return true;
}

// Invariant sweep shared by the runner and verify_trace. Checks everything
// derivable from the final state plus the processed transactions.
std::vector<std::string> invariant_sweep(const ChainState& st,
                                         const std::vector<ParsedRecord>& records,
                                         std::uint64_t genesis_total) {
  std::vector<std::string> out;

  // conservation
  if (ledger::total_coins(st) != genesis_total) {
    out.push_back("conservation: total coins " + std::to_string(ledger::total_coins(st)) +
                  " != genesis " + std::to_string(genesis_total));
  }

  // contract-level invariants
  std::uint64_t deposits_total = 0;
  for (const auto& [cid, inst] : st.contracts) {
    for (const auto& [rid, dep] : inst.deposits) deposits_total += dep.value;
    for (const auto& zeta : inst.spent) {
      bool revealed_somewhere = false;
      for (const auto& [aid, a] : inst.auctions) {
        revealed_somewhere |= a.revealed.count(zeta) != 0;
      }
      if (!revealed_somewhere) {
        out.push_back("spent-list: tag spent without a recorded reveal");
      }
    }
    for (const auto& [aid, a] : inst.auctions) {
      for (const auto& [zeta, v] : a.revealed) {
        if (a.committed.count(zeta) == 0) {
          out.push_back("reveal-subset: revealed tag was never committed");
        }
      }
      if (a.t_commit >= a.t_reveal) out.push_back("auction: t_commit >= t_reveal");
      // outcome agrees with the reference resolution
      if (a.outcome != contract::AuctionState::Phase::Pending) {
        if (!a.opened_min_price.has_value()) {
          if (a.outcome != contract::AuctionState::Phase::Failed) {
            out.push_back("outcome: unopened minimum price must fail the auction");
          }
        } else {
          auction::RevealedBidSet set;
          set.reserve = *a.opened_min_price;
          for (const auto& [zeta, v] : a.revealed) {
            set.bids.push_back({zeta, v, a.committed.at(zeta)});
          }
          auto oracle = auction::vickrey_oracle(set);
          bool won = a.outcome == contract::AuctionState::Phase::Won;
          if (won != (oracle.kind == auction::Outcome::Kind::Winner)) {
            out.push_back("outcome: winner existence disagrees with the oracle");
          } else if (won && (oracle.winning_zeta != a.winning_zeta ||
                             oracle.clearing_price != a.clearing_price)) {
            out.push_back("outcome: winner or clearing price disagrees with the oracle");
          }
        }
      }
    }
  }

  // temporal safety and payout accounting from the processed transactions
  std::uint64_t payouts_total = 0;
  std::uint64_t worker_credits = 0;
  for (const auto& rec : records) {
    if (!rec.result.applied) continue;
    const Transaction& tx = rec.tx;
    auto window_violation = [&](const Bytes& cid, const Bytes& aid, TxKind kind,
                                std::uint64_t h) {
      auto cit = st.contracts.find(cid);
      if (cit == st.contracts.end()) return;  // foreign trace content
      auto ait = cit->second.auctions.find(aid);
      if (ait == cit->second.auctions.end()) return;
      const auto& a = ait->second;
      bool ok = true;
      switch (kind) {
        case TxKind::Commit: ok = h < a.t_commit; break;
        case TxKind::Reveal:
        case TxKind::OpenMinPrice: ok = h >= a.t_commit && h < a.t_reveal; break;
        case TxKind::Withdraw:
        case TxKind::SubmitWork: ok = h >= a.t_reveal; break;
        default: break;
      }
      if (!ok) {
        out.push_back(std::string("temporal: applied ") + ledger::kind_name(kind) +
                      " outside its window at height " + std::to_string(h));
      }
    };
    switch (tx.kind) {
      case TxKind::Commit: {
        contract::CommitPayload p;
        if (contract::CommitPayload::decode(tx.payload, p)) {
          window_violation(p.contract_id, p.auction_id, tx.kind, rec.result.height);
        }
        break;
      }
      case TxKind::Reveal: {
        contract::RevealPayload p;
        if (contract::RevealPayload::decode(tx.payload, p)) {
          window_violation(p.contract_id, p.auction_id, tx.kind, rec.result.height);
        }
        break;
      }
      case TxKind::OpenMinPrice: {
        contract::OpenMinPricePayload p;
        if (contract::OpenMinPricePayload::decode(tx.payload, p)) {
          window_violation(p.contract_id, p.auction_id, tx.kind, rec.result.height);
        }
        break;
      }
      case TxKind::Withdraw: {
        contract::WithdrawPayload p;
        if (contract::WithdrawPayload::decode(tx.payload, p)) {
          window_violation(p.contract_id, p.auction_id, tx.kind, rec.result.height);
          auto cit = st.contracts.find(p.contract_id);
          if (cit != st.contracts.end()) {
            auto ait = cit->second.auctions.find(p.auction_id);
            if (ait != cit->second.auctions.end()) {
              const auto& a = ait->second;
              Bytes zeta = p.show.zeta_bytes();
              auto rit = a.revealed.find(zeta);
              if (rit != a.revealed.end()) {
                bool winner = a.outcome == contract::AuctionState::Phase::Won &&
                              a.winning_zeta == zeta;
                payouts_total += winner ? rit->second - a.clearing_price : rit->second;
              }
            }
          }
        }
        break;
      }
      case TxKind::SubmitWork: {
        contract::SubmitWorkPayload p;
        if (contract::SubmitWorkPayload::decode(tx.payload, p)) {
          window_violation(p.contract_id, p.auction_id, tx.kind, rec.result.height);
          auto cit = st.contracts.find(p.contract_id);
          if (cit != st.contracts.end()) {
            auto ait = cit->second.auctions.find(p.auction_id);
            if (ait != cit->second.auctions.end() && ait->second.worker_paid) {
              worker_credits += ait->second.clearing_price;
            }
          }
        }
        break;
      }
      default:
        break;
    }
  }

  // budget balance: every deposited coin is refunded, paid to the worker, or
  // still held (locked deviators, unclaimed refunds, unused credentials)
  if (st.buffer != deposits_total - payouts_total - worker_credits) {
    out.push_back("budget: buffer " + std::to_string(st.buffer) + " != deposits " +
                  std::to_string(deposits_total) + " - payouts " +
                  std::to_string(payouts_total) + " - worker " +
                  std::to_string(worker_credits));
  }

  return out;
}

}  // namespace

ScenarioResult run_scenario(const Scenario& s) {
  s.validate();
  Drbg rng(s.seed, "scenario");

  ScenarioResult result;
  ChainState chain;

  auto ceremony = credentials::key_ceremony(s.authorities, s.threshold, rng);
  SigningKey coordinator = SigningKey::generate(rng);
  SigningKey worker_key = SigningKey::generate(rng);
  Address worker_addr = worker_key.public_key.to_bytes();
  bn254::Fr min_price_blinding = rng.scalar();

  std::vector<BidderRuntime> bidders;
  for (const auto& spec : s.bidders) {
    BidderRuntime rt;
    rt.spec = spec;
    rt.key = SigningKey::generate(rng);
    rt.addr = rt.key.public_key.to_bytes();
    rt.payout_key = SigningKey::generate(rng);
    rt.second_payout_key = SigningKey::generate(rng);
    chain.accounts[rt.addr] = spec.funding;
    bidders.push_back(std::move(rt));
  }
  std::uint64_t genesis_total = ledger::total_coins(chain);

  // trace header
  {
    json h;
    h["version"] = TRACE_VERSION;
    h["curve"] = crypto::CURVE_ID;
    h["end_height"] = s.end_height;
    json genesis = json::object();
    for (const auto& [addr, bal] : chain.accounts) genesis[hex_encode(addr)] = bal;
    h["genesis"] = genesis;
    result.trace_lines.push_back(h.dump());
  }

  std::vector<credentials::AuthorityPublicShare> publics;
  for (const auto& share : ceremony.shares) {
    publics.push_back({share.index, share.alpha, share.beta_v, share.beta_s});
  }

  // request preparation is deterministic and local; issuance happens after
  // the deposits land on chain
  std::vector<credentials::CredentialRequest> requests;
  std::vector<credentials::RequestSecrets> secrets;
  for (auto& rt : bidders) {
    auto [req, sec] = credentials::prepare_request(rt.spec.deposit, rng.nonzero_scalar(), rng);
    requests.push_back(req);
    secrets.push_back(sec);
  }

  Bytes contract_id;
  Bytes auction_id;
  bool issued = false;

  std::vector<ParsedRecord> records;
  auto process_block = [&](std::vector<Transaction> txs) {
    for (auto& tx : txs) ledger::submit(chain, std::move(tx));
    std::vector<Transaction> applied_order = chain.pending;
    auto results = contract::advance(chain);
    for (std::size_t i = 0; i < results.size(); ++i) {
      records.push_back({results[i], applied_order[i]});
      result.trace.push_back(results[i]);
      result.trace_lines.push_back(record_line(results[i], applied_order[i]));
    }
    if (ledger::total_coins(chain) != genesis_total) {
      result.violations.push_back("conservation violated at height " +
                                  std::to_string(chain.height));
    }
  };

  for (std::uint64_t h = 1; h <= s.end_height; ++h) {
    std::vector<Transaction> txs;

    if (h == 1) {
      Transaction setup =
          contract::make_setup_tx(coordinator.public_key.to_bytes(), s.authorities,
                                  s.threshold, s.denominations, ceremony.vk, publics);
      contract_id = digest_to_bytes(setup.digest());
      txs.push_back(std::move(setup));
    }
    if (h == 2) {
      auto commitment = crypto::pedersen_commit(bn254::Fr::from_u64(s.worker.min_price),
                                                min_price_blinding);
      Transaction create = contract::make_create_tx(
          worker_addr, contract_id, ceremony.vk, commitment, s.t_commit, s.t_reveal,
          s.description.empty() ? "storage-deal offer: single replica, standard duration"
                                : s.description);
      auction_id = digest_to_bytes(create.digest());
      txs.push_back(std::move(create));
    }
    if (h == 3) {
      for (std::size_t i = 0; i < bidders.size(); ++i) {
        txs.push_back(contract::make_deposit_tx(bidders[i].key, contract_id,
                                                bidders[i].spec.deposit, requests[i], rng));
      }
    }

    if (issued) {
      std::uint64_t open_h = s.worker.open_height == 0 ? s.t_commit : s.worker.open_height;
      if (s.worker.opens && h == open_h) {
        txs.push_back(contract::make_open_min_price_tx(worker_key, contract_id, auction_id,
                                                       s.worker.min_price,
                                                       min_price_blinding, rng));
      }
      // anonymous submissions ride under throwaway relay addresses so the
      // trace cannot link a bidder's phases through the sender column
      auto relay = [&rng] { return SigningKey::generate(rng).public_key.to_bytes(); };
      for (auto& rt : bidders) {
        if (!rt.credential) continue;
        if (h == rt.spec.commit_height) {
          txs.push_back(contract::make_commit_tx(relay(), contract_id, auction_id,
                                                 *rt.credential, ceremony.vk, rng));
        }
        std::uint64_t reveal_h =
            rt.spec.reveal_height == 0 ? s.t_commit : rt.spec.reveal_height;
        if (rt.spec.reveals && h == reveal_h) {
          txs.push_back(contract::make_reveal_tx(relay(), contract_id, auction_id,
                                                 *rt.credential, ceremony.vk, rng));
        }
        std::uint64_t withdraw_h =
            rt.spec.withdraw_height == 0 ? s.t_reveal : rt.spec.withdraw_height;
        using WB = BidderSpec::WithdrawBehavior;
        if (rt.spec.withdraw != WB::Never && h == withdraw_h) {
          txs.push_back(contract::make_withdraw_tx(relay(), contract_id, auction_id,
                                                   rt.payout_key, *rt.credential,
                                                   ceremony.vk, rng));
        }
        if (rt.spec.withdraw == WB::DoubleSpend && h == withdraw_h + 1) {
          txs.push_back(contract::make_withdraw_tx(relay(), contract_id, auction_id,
                                                   rt.second_payout_key, *rt.credential,
                                                   ceremony.vk, rng));
        }
      }

      // the winner claims the work binding two blocks after t_reveal
      if (s.winner_submits_work && h == s.t_reveal + 2) {
        const auto& a = chain.contracts.at(contract_id).auctions.at(auction_id);
        if (a.outcome == contract::AuctionState::Phase::Won) {
          for (auto& rt : bidders) {
            if (rt.credential && rt.zeta == a.winning_zeta) {
              crypto::Digest fd = crypto::Sha256::hash("replica:" + rt.spec.name);
              txs.push_back(contract::make_submit_work_tx(
                  relay(), contract_id, auction_id, *rt.credential, ceremony.vk,
                  Bytes(fd.begin(), fd.end()), rng));
            }
          }
        }
      }
    }

    process_block(std::move(txs));

    // off-chain issuance right after the deposit block
    if (h == 3 && !issued) {
      for (std::size_t i = 0; i < bidders.size(); ++i) {
        std::vector<credentials::PartialCredential> parts;
        for (const auto& share : ceremony.shares) {
          auto part = credentials::blind_sign(share, requests[i]);
          if (!part) {
            result.violations.push_back("authority refused an honest request for " +
                                        bidders[i].spec.name);
            continue;
          }
          parts.push_back(*part);
        }
        bidders[i].credential =
            credentials::unblind_and_aggregate(parts, secrets[i], requests[i], ceremony.vk);
        bidders[i].zeta =
            credentials::zeta_tag(secrets[i].seq_number, auction_id).to_bytes();
      }
      issued = true;
    }
  }

  // summary
  result.final_state = chain;
  result.contract_id = contract_id;
  result.auction_id = auction_id;
  const auto& a = chain.contracts.at(contract_id).auctions.at(auction_id);
  result.outcome = a.outcome;
  result.clearing_price = a.clearing_price;
  result.worker_credited = ledger::balance_of(chain, worker_addr);
  for (const auto& rt : bidders) {
    BidderOutcome bo;
    bo.name = rt.spec.name;
    bo.deposited = rt.spec.deposit;
    bo.withdrawn = ledger::balance_of(chain, rt.payout_key.public_key.to_bytes()) +
                   ledger::balance_of(chain, rt.second_payout_key.public_key.to_bytes());
    bo.committed = rt.credential && a.committed.count(rt.zeta) != 0;
    bo.revealed = rt.credential && a.revealed.count(rt.zeta) != 0;
    bo.is_winner =
        a.outcome == contract::AuctionState::Phase::Won && a.winning_zeta == rt.zeta;
    result.bidders.push_back(std::move(bo));
  }

  auto sweep = invariant_sweep(chain, records, genesis_total);
  result.violations.insert(result.violations.end(), sweep.begin(), sweep.end());

  // trace footer
  {
    json f;
    f["final_digest"] = hex_encode(ledger::state_digest(chain));
    f["records"] = records.size();
    f["total_coins"] = ledger::total_coins(chain);
    result.trace_lines.push_back(f.dump());
  }
  return result;
}

std::vector<std::string> verify_trace(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  if (lines.size() < 2) {
    out.push_back("trace: needs at least a header and a footer line");
    return out;
  }
  json header = json::parse(lines.front(), nullptr, false);
  if (header.is_discarded() || !header.is_object() || header.value("version", "") != TRACE_VERSION) {
    out.push_back("trace: bad header");
    return out;
  }
  json footer = json::parse(lines.back(), nullptr, false);
  if (footer.is_discarded() || !footer.is_object() || !footer.contains("final_digest")) {
    out.push_back("trace: bad footer");
    return out;
  }

  ChainState chain;
  std::uint64_t end_height = 0;
  try {
    end_height = header.at("end_height").get<std::uint64_t>();
    for (const auto& [addr_hex, bal] : header.at("genesis").items()) {
      bool ok = false;
      Bytes addr = hex_decode(addr_hex, ok);
      if (!ok) {
        out.push_back("trace: bad genesis address");
        return out;
      }
      chain.accounts[addr] = bal.get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    out.push_back(std::string("trace: header: ") + e.what());
    return out;
  }
  std::uint64_t genesis_total = ledger::total_coins(chain);

  std::vector<ParsedRecord> records;
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    ParsedRecord rec;
    std::string err;
    if (!parse_record(lines[i], rec, err)) {
      out.push_back("trace record " + std::to_string(i) + ": " + err);
      return out;
    }
    records.push_back(std::move(rec));
  }

  std::size_t next = 0;
  for (std::uint64_t h = 1; h <= end_height; ++h) {
    std::size_t first = next;
    while (next < records.size() && records[next].result.height == h) {
      ledger::submit(chain, records[next].tx);
      ++next;
    }
    std::vector<ledger::ApplyResult> results;
    try {
      results = contract::advance(chain);
    } catch (const std::exception& e) {
      // a doctored trace can drive the contract into states an honest run
      // never reaches; report it instead of crashing the verifier
      out.push_back("replay: state integrity failure at height " + std::to_string(h) +
                    ": " + e.what());
      return out;
    }
    if (results.size() != next - first) {
      out.push_back("replay: record count mismatch at height " + std::to_string(h));
      return out;
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& want = records[first + i].result;
      const auto& got = results[i];
      if (got.applied != want.applied || got.reason != want.reason) {
        out.push_back("replay: result mismatch at height " + std::to_string(h) + " tx " +
                      std::to_string(i) + " (got " +
                      std::string(got.applied ? "applied" : "rejected") + "/" +
                      contract::reason_name(got.reason) + ")");
      }
      if (got.tx_digest != want.tx_digest) {
        out.push_back("replay: digest mismatch at height " + std::to_string(h));
      }
      if (got.size != want.size) {
        out.push_back("replay: size mismatch at height " + std::to_string(h));
      }
    }
  }
  if (next != records.size()) {
    out.push_back("replay: trailing records beyond end_height");
  }

  std::string final_hex = hex_encode(ledger::state_digest(chain));
  if (footer.at("final_digest").get<std::string>() != final_hex) {
    out.push_back("replay: final state digest mismatch");
  }
  if (footer.contains("total_coins") &&
      footer.at("total_coins").get<std::uint64_t>() != ledger::total_coins(chain)) {
    out.push_back("replay: total coin mismatch");
  }

  auto sweep = invariant_sweep(chain, records, genesis_total);
  out.insert(out.end(), sweep.begin(), sweep.end());
  return out;
}

}  // namespace sealbid::harness
