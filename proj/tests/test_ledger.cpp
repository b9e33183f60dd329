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

#include "protocol_fixture.hpp"

using namespace sealbid;
using namespace sealbid::testenv;

TEST_CASE("transaction wire round trip and digest stability") {
  Drbg rng(300);
  SigningKey k = SigningKey::generate(rng);
  Transaction tx;
  tx.kind = ledger::TxKind::Commit;
  tx.sender = k.public_key.to_bytes();
  tx.payload = rng.bytes(100);

  std::string wire = tx.to_wire();
  auto back = Transaction::from_wire(wire);
  REQUIRE(back.has_value());
  CHECK(back->kind == tx.kind);
  CHECK(back->sender == tx.sender);
  CHECK(back->payload == tx.payload);
  CHECK(back->to_wire() == wire);
  CHECK(back->digest() == tx.digest());
  CHECK(tx.wire_size() == wire.size());

  CHECK_FALSE(Transaction::from_wire("not json").has_value());
  CHECK_FALSE(Transaction::from_wire("{\"version\":\"other\"}").has_value());
}

TEST_CASE("submit keeps arrival order and advance applies in that order") {
  ledger::ChainState st;
  Transaction a;
  a.kind = ledger::TxKind::Setup;
  a.payload = {1};
  Transaction b = a;
  b.payload = {2};
  ledger::submit(st, a);
  ledger::submit(st, b);
  CHECK(st.pending.size() == 2);

  std::vector<std::uint8_t> seen;
  auto handler = [&seen](const Transaction& tx, ledger::ChainState&, std::uint64_t) {
    seen.push_back(tx.payload[0]);
    return contract::Reason::OK;
  };
  auto results = ledger::advance_block(st, handler);
  CHECK(st.height == 1);
  CHECK(st.pending.empty());
  REQUIRE(results.size() == 2);
  CHECK(results[0].applied);
  CHECK(seen == std::vector<std::uint8_t>{1, 2});
}

TEST_CASE("empty block still advances the clock") {
  ledger::ChainState st;
  auto handler = [](const Transaction&, ledger::ChainState&, std::uint64_t) {
    return contract::Reason::OK;
  };
  auto before = ledger::state_digest(st);
  ledger::advance_block(st, handler);
  CHECK(st.height == 1);
  auto after = ledger::state_digest(st);
  CHECK(before != after);  // the digest covers the clock
  CHECK(st.accounts.empty());
}

TEST_CASE("unknown address reads as zero balance") {
  ledger::ChainState st;
  CHECK(ledger::balance_of(st, Bytes{1, 2, 3}) == 0);
}

TEST_CASE("deposit moves coins to the buffer and failed transactions change nothing") {
  Env env(301);
  SigningKey alice = env.new_funded_bidder(10);
  Address alice_addr = alice.public_key.to_bytes();

  CHECK(ledger::balance_of(env.chain, alice_addr) == 10);
  std::uint64_t total_before = ledger::total_coins(env.chain);

  env.issue_credential(alice, 5);
  CHECK(ledger::balance_of(env.chain, alice_addr) == 5);
  CHECK(env.chain.buffer == 5);
  CHECK(ledger::total_coins(env.chain) == total_before);

  // a deposit beyond the balance is rejected and leaves the state identical
  auto before = ledger::state_digest(env.chain);
  auto [req, secrets] = credentials::prepare_request(50, env.rng.nonzero_scalar(), env.rng);
  auto result = env.submit_and_advance(
      contract::make_deposit_tx(alice, env.contract_id, 50, req, env.rng));
  CHECK_FALSE(result.applied);
  CHECK(result.reason == Reason::INSUFFICIENT_FUNDS);
  // height moved; roll it back for the byte-identical comparison
  auto snapshot = env.chain;
  snapshot.height -= 1;
  CHECK(ledger::state_digest(snapshot) == before);
}

TEST_CASE("conservation holds across a full auction scenario") {
  Env env(302);
  SigningKey alice = env.new_funded_bidder(10);
  SigningKey bob = env.new_funded_bidder(10);
  std::uint64_t total = ledger::total_coins(env.chain);

  bn254::Fr blinding = env.rng.scalar();
  Bytes auction_id = env.create_auction(1, blinding, 12, 18);
  CHECK(ledger::total_coins(env.chain) == total);

  Credential a_cred = env.issue_credential(alice, 5);
  Credential b_cred = env.issue_credential(bob, 2);
  CHECK(ledger::total_coins(env.chain) == total);

  env.submit_and_advance(contract::make_commit_tx(env.anon_sender(), env.contract_id,
                                                  auction_id, a_cred, env.ceremony.vk,
                                                  env.rng));
  env.submit_and_advance(contract::make_commit_tx(env.anon_sender(), env.contract_id,
                                                  auction_id, b_cred, env.ceremony.vk,
                                                  env.rng));
  env.advance_to(12);
  env.submit_and_advance(contract::make_open_min_price_tx(env.worker_key, env.contract_id,
                                                          auction_id, 1, blinding, env.rng));
  env.submit_and_advance(contract::make_reveal_tx(env.anon_sender(), env.contract_id,
                                                  auction_id, a_cred, env.ceremony.vk,
                                                  env.rng));
  env.submit_and_advance(contract::make_reveal_tx(env.anon_sender(), env.contract_id,
                                                  auction_id, b_cred, env.ceremony.vk,
                                                  env.rng));
  CHECK(ledger::total_coins(env.chain) == total);

  env.advance_to(18);
  SigningKey payout_a = SigningKey::generate(env.rng);
  SigningKey payout_b = SigningKey::generate(env.rng);
  auto r1 = env.submit_and_advance(contract::make_withdraw_tx(
      env.anon_sender(), env.contract_id, auction_id, payout_a, a_cred, env.ceremony.vk,
      env.rng));
  auto r2 = env.submit_and_advance(contract::make_withdraw_tx(
      env.anon_sender(), env.contract_id, auction_id, payout_b, b_cred, env.ceremony.vk,
      env.rng));
  CHECK(r1.applied);
  CHECK(r2.applied);
  CHECK(ledger::total_coins(env.chain) == total);
}

TEST_CASE("golden replay: same transaction sequence gives a byte-identical state") {
  auto run = [] {
    Env env(303);
    SigningKey alice = env.new_funded_bidder(10);
    bn254::Fr blinding = env.rng.scalar();
    Bytes auction_id = env.create_auction(2, blinding, 10, 15);
    Credential cred = env.issue_credential(alice, 5);
    env.submit_and_advance(contract::make_commit_tx(env.anon_sender(), env.contract_id,
                                                    auction_id, cred, env.ceremony.vk,
                                                    env.rng));
    env.advance_to(10);
    env.submit_and_advance(contract::make_open_min_price_tx(
        env.worker_key, env.contract_id, auction_id, 2, blinding, env.rng));
    env.submit_and_advance(contract::make_reveal_tx(env.anon_sender(), env.contract_id,
                                                    auction_id, cred, env.ceremony.vk,
                                                    env.rng));
    env.advance_to(15);
    return ledger::state_digest(env.chain);
  };
  CHECK(run() == run());
}

TEST_CASE("trace lines have the stable field order") {
  Env env(304);
  REQUIRE_FALSE(env.trace.empty());
  std::string line = ledger::trace_line(env.trace.front());
  // height \t kind \t sender \t result \t reason \t digest \t size
  CHECK(std::count(line.begin(), line.end(), '\t') == 6);
  CHECK(line.find("Setup") != std::string::npos);
  CHECK(line.find("applied") != std::string::npos);
}
