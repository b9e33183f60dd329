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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sealbid/harness/bench.hpp"
#include "sealbid/harness/scenario.hpp"

using namespace sealbid;
using namespace sealbid::harness;
using contract::AuctionState;
using contract::Reason;

namespace {

Scenario dropout_scenario() {
  Scenario s = demo_scenario();
  s.seed = 777;
  s.description = "bob commits and never reveals; his deposit stays locked";
  s.bidders[1].reveals = false;  // bob drops out after committing
  return s;
}

Scenario double_spend_scenario() {
  Scenario s = demo_scenario();
  s.seed = 778;
  s.description = "carol tries to withdraw her tag twice";
  s.bidders[2].withdraw = BidderSpec::WithdrawBehavior::DoubleSpend;
  return s;
}

}  // namespace

TEST_CASE("honest demo scenario: vickrey payouts and a clean sweep") {
  auto result = run_scenario(demo_scenario());
  REQUIRE(result.passed());
  CHECK(result.outcome == AuctionState::Phase::Won);
  CHECK(result.clearing_price == 3);
  CHECK(result.worker_credited == 3);

  REQUIRE(result.bidders.size() == 3);
  CHECK(result.bidders[0].is_winner);
  CHECK(result.bidders[0].withdrawn == 2);  // deposited 5, pays 3
  CHECK(result.bidders[1].withdrawn == 3);
  CHECK(result.bidders[2].withdrawn == 2);
  CHECK(result.final_state.buffer == 0);  // fully disbursed
}

TEST_CASE("drop-out scenario: the silent bidder's coins stay in the buffer") {
  auto result = run_scenario(dropout_scenario());
  REQUIRE(result.passed());
  CHECK(result.outcome == AuctionState::Phase::Won);
  // bob (3) never reveals: alice wins over carol, pays carol's 2
  CHECK(result.clearing_price == 2);
  CHECK(result.bidders[1].committed);
  CHECK_FALSE(result.bidders[1].revealed);
  CHECK(result.bidders[1].withdrawn == 0);
  CHECK(result.final_state.buffer == 3);  // bob's deposit, locked

  // his withdraw attempt is in the trace as a rejection
  bool saw_locked_rejection = false;
  for (const auto& r : result.trace) {
    if (r.kind == ledger::TxKind::Withdraw && !r.applied &&
        r.reason == Reason::UNKNOWN_ZETA) {
      saw_locked_rejection = true;
    }
  }
  CHECK(saw_locked_rejection);
}

TEST_CASE("double-spend scenario: the second withdraw is rejected") {
  auto result = run_scenario(double_spend_scenario());
  REQUIRE(result.passed());
  int applied_withdraws = 0;
  int double_spend_rejections = 0;
  for (const auto& r : result.trace) {
    if (r.kind != ledger::TxKind::Withdraw) continue;
    if (r.applied) {
      ++applied_withdraws;
    } else if (r.reason == Reason::DOUBLE_SPEND) {
      ++double_spend_rejections;
    }
  }
  CHECK(applied_withdraws == 3);
  CHECK(double_spend_rejections == 1);
  CHECK(result.bidders[2].withdrawn == 2);  // paid once, not twice
}

TEST_CASE("trace replay round trip") {
  auto result = run_scenario(demo_scenario());
  REQUIRE(result.passed());
  auto violations = verify_trace(result.trace_lines);
  for (const auto& v : violations) CAPTURE(v);
  CHECK(violations.empty());
}

TEST_CASE("corrupted traces are rejected") {
  auto result = run_scenario(demo_scenario());
  REQUIRE(result.passed());

  // flip one result code
  auto lines = result.trace_lines;
  bool mutated = false;
  for (auto& l : lines) {
    auto pos = l.find("\"result\":\"applied\"");
    if (pos != std::string::npos && l.find("\"kind\":\"Reveal\"") != std::string::npos) {
      l.replace(pos, 18, "\"result\":\"rejected\"");
      mutated = true;
      break;
    }
  }
  REQUIRE(mutated);
  CHECK_FALSE(verify_trace(lines).empty());

  // tamper with the final digest
  lines = result.trace_lines;
  auto& footer = lines.back();
  auto pos = footer.find("final_digest\":\"");
  REQUIRE(pos != std::string::npos);
  footer[pos + 15] = footer[pos + 15] == 'a' ? 'b' : 'a';
  CHECK_FALSE(verify_trace(lines).empty());

  // drop a record entirely
  lines = result.trace_lines;
  lines.erase(lines.begin() + 3);
  CHECK_FALSE(verify_trace(lines).empty());
}

TEST_CASE("scenario configs survive a json round trip and bad ones name the field") {
  Scenario s = demo_scenario();
  Scenario back = Scenario::from_json(s.to_json());
  CHECK(back.seed == s.seed);
  CHECK(back.bidders.size() == s.bidders.size());
  CHECK(back.bidders[1].deposit == s.bidders[1].deposit);
  CHECK(back.worker.min_price == s.worker.min_price);

  Scenario bad = demo_scenario();
  bad.t_reveal = bad.t_commit;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("t_reveal"), ConfigError);

  bad = demo_scenario();
  bad.bidders[0].deposit = 7;  // not a denomination
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("alice.deposit"), ConfigError);

  bad = demo_scenario();
  bad.bidders[1].name = "alice";
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("name"), ConfigError);

  CHECK_THROWS_AS(Scenario::from_json("{broken"), ConfigError);
}

TEST_CASE("scenario determinism: seed fixes the run, different seeds diverge") {
  auto a = run_scenario(demo_scenario());
  auto b = run_scenario(demo_scenario());
  CHECK(ledger::state_digest(a.final_state) == ledger::state_digest(b.final_state));
  CHECK(a.trace_lines == b.trace_lines);

  Scenario other = demo_scenario();
  other.seed += 1;
  auto c = run_scenario(other);
  CHECK(ledger::state_digest(a.final_state) != ledger::state_digest(c.final_state));
}

TEST_CASE("worker no-show scenario fails the auction and refunds in full") {
  Scenario s = demo_scenario();
  s.seed = 779;
  s.worker.opens = false;
  auto result = run_scenario(s);
  REQUIRE(result.passed());
  CHECK(result.outcome == AuctionState::Phase::Failed);
  CHECK(result.worker_credited == 0);
  for (const auto& b : result.bidders) {
    CHECK(b.withdrawn == b.deposited);
  }
  CHECK(result.final_state.buffer == 0);
}

#ifdef SEALBID_SCENARIO_DIR
TEST_CASE("shipped scenario files load and behave as advertised") {
  const std::string dir = SEALBID_SCENARIO_DIR;

  auto honest = run_scenario(Scenario::from_file(dir + "/honest.json"));
  REQUIRE(honest.passed());
  CHECK(honest.outcome == AuctionState::Phase::Won);
  CHECK(honest.clearing_price == 3);

  auto dropout = run_scenario(Scenario::from_file(dir + "/dropout.json"));
  REQUIRE(dropout.passed());
  CHECK(dropout.final_state.buffer == 3);  // bob's locked deposit

  auto ds = run_scenario(Scenario::from_file(dir + "/double_spend.json"));
  REQUIRE(ds.passed());
  int rejected_double_spends = 0;
  for (const auto& r : ds.trace) {
    if (r.kind == ledger::TxKind::Withdraw && !r.applied &&
        r.reason == Reason::DOUBLE_SPEND) {
      ++rejected_double_spends;
    }
  }
  CHECK(rejected_double_spends == 1);

  auto noshow = run_scenario(Scenario::from_file(dir + "/worker_no_show.json"));
  REQUIRE(noshow.passed());
  CHECK(noshow.outcome == AuctionState::Phase::Failed);

  auto late = run_scenario(Scenario::from_file(dir + "/late_commit.json"));
  REQUIRE(late.passed());
  bool saw_late_commit = false;
  for (const auto& r : late.trace) {
    if (r.kind == ledger::TxKind::Commit && !r.applied && r.reason == Reason::DEADLINE) {
      saw_late_commit = true;
    }
  }
  CHECK(saw_late_commit);
  CHECK(late.final_state.buffer == 3);  // the late bidder's deposit never re-emerges

  // every shipped scenario's trace replays cleanly
  for (const auto* result : {&honest, &dropout, &ds, &noshow, &late}) {
    CHECK(verify_trace(result->trace_lines).empty());
  }
}
#endif

TEST_CASE("benchmark report structure is deterministic and rows are complete") {
  auto report = run_benchmark({"Create"}, 100);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.find("Create", "procedure") != nullptr);
  CHECK(report.find("Create", "checker") != nullptr);
  CHECK(report.find("Create", "procedure")->tx_bytes > 0);
  CHECK(report.find("Create", "procedure")->samples == 100);

  auto report2 = run_benchmark({"Create"}, 100);
  CHECK(report2.rows.size() == report.rows.size());
  CHECK(report2.find("Create", "procedure")->tx_bytes ==
        report.find("Create", "procedure")->tx_bytes);

  // checker fan-out across threads keeps the row structure
  auto threaded = run_benchmark({"Create"}, 100, 2);
  CHECK(threaded.threads == 2);
  CHECK(threaded.find("Create", "checker")->samples == 100);

  CHECK_THROWS_AS(run_benchmark({"Create"}, 50), ParameterError);
  CHECK_THROWS_AS(run_benchmark({"Nope"}, 100), ParameterError);

  CHECK_FALSE(format_table(report).empty());
  CHECK(format_tsv(report).find("Create\tprocedure") != std::string::npos);
}
