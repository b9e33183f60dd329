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

#include <string>
#include <vector>

#include "sealbid/contract/contract.hpp"

namespace sealbid::harness {

using contract::ChainState;
using crypto::Bytes;
using ledger::ApplyResult;

// Declarative auction run: authorities, one worker, scripted bidders, and the
// deviations the adversarial suites need. Heights are absolute block heights.
struct BidderSpec {
  std::string name;
  std::uint64_t funding = 0;
  std::uint64_t deposit = 0;
  std::uint64_t commit_height = 0;
  bool reveals = true;
  std::uint64_t reveal_height = 0;  // ignored when reveals == false

  enum class WithdrawBehavior { Normal, Never, DoubleSpend };
  WithdrawBehavior withdraw = WithdrawBehavior::Normal;
  std::uint64_t withdraw_height = 0;  // 0: first block at or after t_reveal
};

struct WorkerSpec {
  std::uint64_t min_price = 1;
  bool opens = true;
  std::uint64_t open_height = 0;  // 0: the block right after t_commit
};

struct Scenario {
  std::uint64_t seed = 0;
  std::uint32_t authorities = 3;
  std::uint32_t threshold = 2;
  std::vector<std::uint64_t> denominations = {1, 2, 5, 10, 20, 50, 100};
  std::uint64_t t_commit = 0;
  std::uint64_t t_reveal = 0;
  std::uint64_t end_height = 0;
  WorkerSpec worker;
  std::vector<BidderSpec> bidders;
  bool winner_submits_work = true;
  std::string description;

  static Scenario from_json(const std::string& text);  // throws ConfigError
  static Scenario from_file(const std::string& path);
  std::string to_json() const;

  void validate() const;  // throws ConfigError naming the offending field
};

// Built-in honest run: bids 5,3,2 at reserve 1 under a 2-of-3 ceremony.
Scenario demo_scenario();

struct BidderOutcome {
  std::string name;
  std::uint64_t deposited = 0;
  std::uint64_t withdrawn = 0;
  bool committed = false;
  bool revealed = false;
  bool is_winner = false;
};

struct ScenarioResult {
  ChainState final_state;
  std::vector<ApplyResult> trace;
  std::vector<std::string> trace_lines;  // full replayable trace file content
  Bytes contract_id;
  Bytes auction_id;
  contract::AuctionState::Phase outcome = contract::AuctionState::Phase::Pending;
  std::uint64_t clearing_price = 0;
  std::uint64_t worker_credited = 0;
  std::vector<BidderOutcome> bidders;
  std::vector<std::string> violations;  // invariant sweep findings; empty = pass

  bool passed() const { return violations.empty(); }
};

// Deterministic given the seed. The run ends with the full invariant sweep
// (conservation, budget balance, spent-list soundness, temporal safety,
// outcome against the reference resolution).
ScenarioResult run_scenario(const Scenario& s);

// Re-checks every invariant a trace claims: replays the transactions from
// genesis, compares each result and the final state digest, then re-runs the
// sweep. Returns the (possibly empty) list of mismatches.
std::vector<std::string> verify_trace(const std::vector<std::string>& lines);

}  // namespace sealbid::harness
