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
using contract::Reason;

namespace {

// standard three-bidder auction used across cases
struct ThreeBidders {
  Env env;
  bn254::Fr blinding;
  Bytes auction_id;
  SigningKey alice, bob, carol;
  Credential a_cred, b_cred, c_cred;

  explicit ThreeBidders(std::uint64_t seed, std::uint64_t v0 = 1,
                        std::uint64_t t_commit = 14, std::uint64_t t_reveal = 20)
      : env(seed, 3, 2, {1, 2, 3, 5, 10, 20, 50, 100}),
        blinding(env.rng.scalar()),
        auction_id(env.create_auction(v0, blinding, t_commit, t_reveal)),
        alice(env.new_funded_bidder(10)),
        bob(env.new_funded_bidder(10)),
        carol(env.new_funded_bidder(10)),
        a_cred(env.issue_credential(alice, 5)),
        b_cred(env.issue_credential(bob, 3)),
        c_cred(env.issue_credential(carol, 2)) {}

  ApplyResult commit(const Credential& cred) {
    return env.submit_and_advance(contract::make_commit_tx(
        env.anon_sender(), env.contract_id, auction_id, cred, env.ceremony.vk, env.rng));
  }
  ApplyResult reveal(const Credential& cred) {
    return env.submit_and_advance(contract::make_reveal_tx(
        env.anon_sender(), env.contract_id, auction_id, cred, env.ceremony.vk, env.rng));
  }
  ApplyResult open(std::uint64_t v0) {
    return env.submit_and_advance(contract::make_open_min_price_tx(
        env.worker_key, env.contract_id, auction_id, v0, blinding, env.rng));
  }
  ApplyResult withdraw(const SigningKey& payout, const Credential& cred) {
    return env.submit_and_advance(contract::make_withdraw_tx(
        env.anon_sender(), env.contract_id, auction_id, payout, cred, env.ceremony.vk,
        env.rng));
  }
};

}  // namespace

TEST_CASE("setup: bad thresholds and denominations are rejected; reruns coexist") {
  Env env(400);
  // the fixture already applied one valid Setup
  CHECK(env.chain.contracts.size() == 1);
  CHECK(env.instance().denominations == std::vector<std::uint64_t>{1, 2, 5, 10, 20, 50, 100});

  std::vector<credentials::AuthorityPublicShare> publics;
  for (const auto& s : env.ceremony.shares) {
    publics.push_back({s.index, s.alpha, s.beta_v, s.beta_s});
  }

  // t = 0
  auto bad_vk = env.ceremony.vk;
  bad_vk.t = 0;
  auto r = env.submit_and_advance(
      contract::make_setup_tx(env.anon_sender(), 3, 0, {1, 2}, bad_vk, publics));
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::BAD_PARAMS);

  // non-increasing denominations
  r = env.submit_and_advance(
      contract::make_setup_tx(env.anon_sender(), 3, 2, {5, 5}, env.ceremony.vk, publics));
  CHECK(r.reason == Reason::BAD_PARAMS);

  // a second honest setup by a different authority set forms a second instance
  Drbg other_rng(401);
  auto other = credentials::key_ceremony(2, 2, other_rng);
  std::vector<credentials::AuthorityPublicShare> other_publics;
  for (const auto& s : other.shares) {
    other_publics.push_back({s.index, s.alpha, s.beta_v, s.beta_s});
  }
  r = env.submit_and_advance(
      contract::make_setup_tx(env.anon_sender(), 2, 2, {1, 2, 5}, other.vk, other_publics));
  CHECK(r.applied);
  CHECK(env.chain.contracts.size() == 2);
}

TEST_CASE("create: window validation") {
  Env env(402);
  auto commitment = crypto::pedersen_commit(bn254::Fr::from_u64(1), env.rng.scalar());

  // inverted timestamps
  auto r = env.submit_and_advance(
      contract::make_create_tx(env.worker, env.contract_id, env.ceremony.vk, commitment, 20, 10, "x"));
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::BAD_PARAMS);

  // stale: t_commit at or below the applying height
  env.advance_to(7);
  r = env.submit_and_advance(
      contract::make_create_tx(env.worker, env.contract_id, env.ceremony.vk, commitment, 5, 20, "x"));
  CHECK(r.reason == Reason::DEADLINE);

  // healthy window
  r = env.submit_and_advance(
      contract::make_create_tx(env.worker, env.contract_id, env.ceremony.vk, commitment, 12, 20, "x"));
  CHECK(r.applied);

  // unknown contract
  r = env.submit_and_advance(
      contract::make_create_tx(env.worker, Bytes(32, 0xab), env.ceremony.vk, commitment, 15, 20, "x"));
  CHECK(r.reason == Reason::UNKNOWN_CONTRACT);
}

TEST_CASE("deposit: denomination membership and proof validity gate the coins") {
  Env env(403);
  SigningKey alice = env.new_funded_bidder(10);
  Address alice_addr = alice.public_key.to_bytes();

  // v = 3 is not in {1,2,5,...}
  auto [req3, sec3] = credentials::prepare_request(3, env.rng.nonzero_scalar(), env.rng);
  auto r = env.submit_and_advance(
      contract::make_deposit_tx(alice, env.contract_id, 3, req3, env.rng));
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::BAD_DENOMINATION);
  CHECK(ledger::balance_of(env.chain, alice_addr) == 10);
  CHECK(env.chain.buffer == 0);

  // tampered request: flip a proof byte inside the serialized request
  auto [req, sec] = credentials::prepare_request(5, env.rng.nonzero_scalar(), env.rng);
  contract::DepositPayload p;
  p.contract_id = env.contract_id;
  p.value = 5;
  p.request_bytes = req.to_bytes();
  p.request_bytes[p.request_bytes.size() - 1] ^= 0x01;
  p.sender_sig = alice.sign(p.signing_bytes(alice_addr), env.rng);
  Transaction tx;
  tx.kind = ledger::TxKind::Deposit;
  tx.sender = alice_addr;
  tx.payload = p.encode();
  r = env.submit_and_advance(tx);
  CHECK_FALSE(r.applied);
  CHECK((r.reason == Reason::BAD_PROOF || r.reason == Reason::MALFORMED));
  CHECK(ledger::balance_of(env.chain, alice_addr) == 10);

  // honest deposit: 5 coins move to the buffer
  r = env.submit_and_advance(
      contract::make_deposit_tx(alice, env.contract_id, 5, req, env.rng));
  CHECK(r.applied);
  CHECK(ledger::balance_of(env.chain, alice_addr) == 5);
  CHECK(env.chain.buffer == 5);

  // wrong signer on an otherwise valid deposit
  SigningKey mallory = env.new_funded_bidder(10);
  auto [req2, sec2] = credentials::prepare_request(5, env.rng.nonzero_scalar(), env.rng);
  contract::DepositPayload p2;
  p2.contract_id = env.contract_id;
  p2.value = 5;
  p2.request_bytes = req2.to_bytes();
  p2.sender_sig = mallory.sign(p2.signing_bytes(alice_addr), env.rng);  // not alice's key
  Transaction tx2;
  tx2.kind = ledger::TxKind::Deposit;
  tx2.sender = alice_addr;
  tx2.payload = p2.encode();
  r = env.submit_and_advance(tx2);
  CHECK(r.reason == Reason::BAD_SIGNATURE);
}

TEST_CASE("commit: deadline boundaries, duplicates, cross-auction proofs") {
  ThreeBidders t(404);
  auto& env = t.env;

  auto r = t.commit(t.a_cred);
  CHECK(r.applied);

  // same credential again: same tag, rejected as a duplicate
  r = t.commit(t.a_cred);
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::DUPLICATE_ZETA);

  // disclosure during the commit phase is refused outright
  contract::CommitPayload leaky;
  leaky.contract_id = env.contract_id;
  leaky.auction_id = t.auction_id;
  leaky.show = credentials::show(t.b_cred, t.auction_id, env.ceremony.vk, true,
                                 contract::commit_context(env.contract_id), env.rng);
  Transaction tx;
  tx.kind = ledger::TxKind::Commit;
  tx.sender = env.anon_sender();
  tx.payload = leaky.encode();
  r = env.submit_and_advance(tx);
  CHECK(r.reason == Reason::BAD_PROOF);

  // a proof generated for a different auction is useless here
  Bytes other_auction = env.create_auction(1, env.rng.scalar(), 14, 20);
  contract::CommitPayload crossed;
  crossed.contract_id = env.contract_id;
  crossed.auction_id = t.auction_id;
  crossed.show = credentials::show(t.b_cred, other_auction, env.ceremony.vk, false,
                                   contract::commit_context(env.contract_id), env.rng);
  Transaction tx2;
  tx2.kind = ledger::TxKind::Commit;
  tx2.sender = env.anon_sender();
  tx2.payload = crossed.encode();
  r = env.submit_and_advance(tx2);
  CHECK(r.reason == Reason::BAD_PROOF);

  // boundary: commit landing at height t_commit - 1 is accepted
  env.advance_to(t.env.auction(t.auction_id).t_commit - 2);
  r = t.commit(t.b_cred);  // applies at t_commit - 1
  CHECK(r.applied);
  CHECK(env.chain.height == t.env.auction(t.auction_id).t_commit - 1);

  // the very next block is the deadline: rejected
  r = t.commit(t.c_cred);
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::DEADLINE);
}

TEST_CASE("reveal: window and recorded-tag rules") {
  ThreeBidders t(405);
  auto& env = t.env;

  t.commit(t.a_cred);
  t.commit(t.b_cred);

  // too early: the commit window is still open
  auto r = t.reveal(t.a_cred);
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::DEADLINE);

  env.advance_to(t.env.auction(t.auction_id).t_commit);
  r = t.reveal(t.a_cred);
  CHECK(r.applied);
  CHECK(env.auction(t.auction_id).revealed.size() == 1);

  // re-reveal of the same tag
  r = t.reveal(t.a_cred);
  CHECK(r.reason == Reason::DUPLICATE_REVEAL);

  // never committed: unknown tag
  r = t.reveal(t.c_cred);
  CHECK(r.reason == Reason::UNKNOWN_ZETA);

  // claimed value different from the credential: fails the show check
  contract::RevealPayload forged;
  forged.contract_id = env.contract_id;
  forged.auction_id = t.auction_id;
  forged.show = credentials::show(t.b_cred, t.auction_id, env.ceremony.vk, true,
                                  contract::reveal_context(env.contract_id), env.rng);
  forged.value = 50;  // credential embeds 3
  Transaction tx;
  tx.kind = ledger::TxKind::Reveal;
  tx.sender = env.anon_sender();
  tx.payload = forged.encode();
  r = env.submit_and_advance(tx);
  CHECK(r.reason == Reason::BAD_PROOF);

  // past t_reveal: rejected
  env.advance_to(t.env.auction(t.auction_id).t_reveal);
  r = t.reveal(t.b_cred);
  CHECK(r.reason == Reason::DEADLINE);
}

TEST_CASE("open_min_price: binding, authentication, and single use") {
  ThreeBidders t(406);
  auto& env = t.env;
  env.advance_to(env.auction(t.auction_id).t_commit);

  // wrong value for the commitment
  auto r = t.open(2);
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::BAD_PROOF);

  // not the worker
  SigningKey stranger = SigningKey::generate(env.rng);
  r = env.submit_and_advance(contract::make_open_min_price_tx(
      stranger, env.contract_id, t.auction_id, 1, t.blinding, env.rng));
  CHECK(r.reason == Reason::NOT_WORKER);

  // honest opening
  r = t.open(1);
  CHECK(r.applied);
  CHECK(env.auction(t.auction_id).opened_min_price == 1);

  // opening twice
  r = t.open(1);
  CHECK(r.reason == Reason::ALREADY_OPENED);
}

TEST_CASE("resolution: vickrey outcome, failure cases, idempotence") {
  ThreeBidders t(407);
  auto& env = t.env;
  t.commit(t.a_cred);
  t.commit(t.b_cred);
  t.commit(t.c_cred);
  env.advance_to(env.auction(t.auction_id).t_commit);
  t.open(1);
  t.reveal(t.a_cred);
  t.reveal(t.b_cred);
  t.reveal(t.c_cred);

  // explicit resolve before t_reveal is a deadline error
  CHECK(contract::resolve_auction(env.chain, env.contract_id, t.auction_id,
                                  env.chain.height) == Reason::DEADLINE);

  env.advance_to(env.auction(t.auction_id).t_reveal);
  // the block sweep resolved it at t_reveal
  const auto& a = env.auction(t.auction_id);
  CHECK(a.outcome == contract::AuctionState::Phase::Won);
  CHECK(a.winning_value == 5);
  CHECK(a.clearing_price == 3);

  // matches the reference resolution
  auto oracle = auction::vickrey_oracle([&] {
    auction::RevealedBidSet set;
    set.reserve = 1;
    for (const auto& [zeta, v] : a.revealed) {
      set.bids.push_back({zeta, v, a.committed.at(zeta)});
    }
    return set;
  }());
  REQUIRE(oracle.kind == auction::Outcome::Kind::Winner);
  CHECK(oracle.winning_zeta == a.winning_zeta);
  CHECK(oracle.clearing_price == a.clearing_price);

  CHECK(contract::resolve_auction(env.chain, env.contract_id, t.auction_id,
                                  env.chain.height) == Reason::ALREADY_RESOLVED);
}

TEST_CASE("resolution failures: reserve not met, and silent worker") {
  // all bids below the reserve
  {
    ThreeBidders t(408, 50);
    auto& env = t.env;
    t.commit(t.a_cred);
    env.advance_to(env.auction(t.auction_id).t_commit);
    t.open(50);
    t.reveal(t.a_cred);
    env.advance_to(env.auction(t.auction_id).t_reveal);
    CHECK(env.auction(t.auction_id).outcome == contract::AuctionState::Phase::Failed);

    // everyone refunds in full
    SigningKey payout = SigningKey::generate(env.rng);
    auto r = t.withdraw(payout, t.a_cred);
    CHECK(r.applied);
    CHECK(ledger::balance_of(env.chain, payout.public_key.to_bytes()) == 5);
  }
  // worker never opens the minimum price
  {
    ThreeBidders t(409);
    auto& env = t.env;
    t.commit(t.a_cred);
    env.advance_to(env.auction(t.auction_id).t_commit);
    t.reveal(t.a_cred);
    env.advance_to(env.auction(t.auction_id).t_reveal);
    CHECK(env.auction(t.auction_id).outcome == contract::AuctionState::Phase::Failed);
    SigningKey payout = SigningKey::generate(env.rng);
    auto r = t.withdraw(payout, t.a_cred);
    CHECK(r.applied);
    CHECK(ledger::balance_of(env.chain, payout.public_key.to_bytes()) == 5);
  }
}

TEST_CASE("withdraw: payouts, double spends, and locked drop-outs") {
  ThreeBidders t(410);
  auto& env = t.env;
  t.commit(t.a_cred);
  t.commit(t.b_cred);
  t.commit(t.c_cred);  // carol commits but never reveals
  env.advance_to(env.auction(t.auction_id).t_commit);
  t.open(1);
  t.reveal(t.a_cred);
  t.reveal(t.b_cred);

  // before t_reveal: deadline
  SigningKey a_payout = SigningKey::generate(env.rng);
  auto r = t.withdraw(a_payout, t.a_cred);
  CHECK(r.reason == Reason::DEADLINE);

  env.advance_to(env.auction(t.auction_id).t_reveal);
  std::uint64_t buffer_before = env.chain.buffer;

  // winner (5) pays the second price (3), withdraws 2
  r = t.withdraw(a_payout, t.a_cred);
  CHECK(r.applied);
  CHECK(ledger::balance_of(env.chain, a_payout.public_key.to_bytes()) == 2);
  CHECK(env.chain.buffer == buffer_before - 2);

  // double spend of the same tag, fresh payout address
  SigningKey a_payout2 = SigningKey::generate(env.rng);
  auto before = ledger::state_digest(env.chain);
  r = t.withdraw(a_payout2, t.a_cred);
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::DOUBLE_SPEND);
  auto snapshot = env.chain;
  snapshot.height -= 1;
  CHECK(ledger::state_digest(snapshot) == before);

  // loser refunds in full
  SigningKey b_payout = SigningKey::generate(env.rng);
  r = t.withdraw(b_payout, t.b_cred);
  CHECK(r.applied);
  CHECK(ledger::balance_of(env.chain, b_payout.public_key.to_bytes()) == 3);

  // carol committed but never revealed: her coins stay locked
  SigningKey c_payout = SigningKey::generate(env.rng);
  r = t.withdraw(c_payout, t.c_cred);
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::UNKNOWN_ZETA);
  CHECK(env.chain.buffer == 3 + 2);  // carol's 2 locked + clearing price 3 earmarked
}

TEST_CASE("withdraw proof is bound to the payout address") {
  ThreeBidders t(411);
  auto& env = t.env;
  t.commit(t.a_cred);
  env.advance_to(env.auction(t.auction_id).t_commit);
  t.open(1);
  t.reveal(t.a_cred);
  env.advance_to(env.auction(t.auction_id).t_reveal);

  SigningKey honest_payout = SigningKey::generate(env.rng);
  Transaction tx = contract::make_withdraw_tx(env.anon_sender(), env.contract_id,
                                              t.auction_id, honest_payout, t.a_cred,
                                              env.ceremony.vk, env.rng);

  // a front-runner redirecting the payout must re-sign and re-prove
  contract::WithdrawPayload p;
  REQUIRE(contract::WithdrawPayload::decode(tx.payload, p));
  SigningKey thief = SigningKey::generate(env.rng);
  contract::WithdrawPayload stolen = p;
  stolen.payout_addr = thief.public_key.to_bytes();
  stolen.addr_sig = thief.sign(stolen.signing_bytes(), env.rng);
  Transaction theft;
  theft.kind = ledger::TxKind::Withdraw;
  theft.sender = env.anon_sender();
  theft.payload = stolen.encode();
  auto r = env.submit_and_advance(theft);
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::BAD_PROOF);  // show context mismatch

  // tampered signature alone also fails
  contract::WithdrawPayload badsig = p;
  badsig.addr_sig.response = badsig.addr_sig.response + bn254::Fr::one();
  Transaction tx2;
  tx2.kind = ledger::TxKind::Withdraw;
  tx2.sender = env.anon_sender();
  tx2.payload = badsig.encode();
  r = env.submit_and_advance(tx2);
  CHECK(r.reason == Reason::BAD_SIGNATURE);

  // the honest transaction still goes through afterwards
  r = env.submit_and_advance(tx);
  CHECK(r.applied);
}

TEST_CASE("submit_work: only the winner binds work and collects the clearing price") {
  ThreeBidders t(412);
  auto& env = t.env;
  t.commit(t.a_cred);
  t.commit(t.b_cred);
  env.advance_to(env.auction(t.auction_id).t_commit);
  t.open(1);
  t.reveal(t.a_cred);
  t.reveal(t.b_cred);
  env.advance_to(env.auction(t.auction_id).t_reveal);

  crypto::Digest replica_digest = crypto::Sha256::hash(std::string("encrypted-replica"));
  Bytes file_digest(replica_digest.begin(), replica_digest.end());

  // loser cannot claim
  auto r = env.submit_and_advance(
      contract::make_submit_work_tx(env.anon_sender(), env.contract_id, t.auction_id,
                                    t.b_cred, env.ceremony.vk, file_digest, env.rng));
  CHECK_FALSE(r.applied);
  CHECK(r.reason == Reason::NOT_WINNER);

  std::uint64_t worker_before = ledger::balance_of(env.chain, env.worker);
  r = env.submit_and_advance(
      contract::make_submit_work_tx(env.anon_sender(), env.contract_id, t.auction_id,
                                    t.a_cred, env.ceremony.vk, file_digest, env.rng));
  CHECK(r.applied);
  const auto& a = env.auction(t.auction_id);
  REQUIRE(a.work_binding.has_value());
  CHECK(a.work_binding->file_digest == file_digest);
  CHECK(a.worker_paid);
  CHECK(ledger::balance_of(env.chain, env.worker) == worker_before + 3);

  // repeated submission after the binding exists
  r = env.submit_and_advance(
      contract::make_submit_work_tx(env.anon_sender(), env.contract_id, t.auction_id,
                                    t.a_cred, env.ceremony.vk, file_digest, env.rng));
  CHECK(r.reason == Reason::ALREADY_SUBMITTED);

  // winner also withdraws v - v': full budget closes
  SigningKey payout = SigningKey::generate(env.rng);
  r = t.withdraw(payout, t.a_cred);
  CHECK(r.applied);
  CHECK(ledger::balance_of(env.chain, payout.public_key.to_bytes()) == 2);

  SigningKey b_payout = SigningKey::generate(env.rng);
  r = t.withdraw(b_payout, t.b_cred);
  CHECK(r.applied);
  // alice's 5 and bob's 3 fully disbursed (3 worker + 2 winner + 3 refund);
  // carol deposited 2 and never bid, so her credential still backs 2 coins
  CHECK(env.chain.buffer == 2);
}

TEST_CASE("a withdraw in the first eligible block resolves the auction lazily") {
  ThreeBidders t(415);
  auto& env = t.env;
  t.commit(t.a_cred);
  t.commit(t.b_cred);
  env.advance_to(env.auction(t.auction_id).t_commit);
  t.open(1);
  t.reveal(t.a_cred);
  t.reveal(t.b_cred);

  // land the withdraw in the block at exactly t_reveal, before the per-block
  // resolution sweep has ever seen the auction due
  env.advance_to(env.auction(t.auction_id).t_reveal - 1);
  CHECK(env.auction(t.auction_id).outcome == contract::AuctionState::Phase::Pending);
  SigningKey payout = SigningKey::generate(env.rng);
  auto r = t.withdraw(payout, t.b_cred);
  CHECK(r.applied);
  CHECK(r.height == env.auction(t.auction_id).t_reveal);
  CHECK(env.auction(t.auction_id).outcome == contract::AuctionState::Phase::Won);
  CHECK(ledger::balance_of(env.chain, payout.public_key.to_bytes()) == 3);  // loser refund
}

TEST_CASE("commit transactions leak nothing about the bid value") {
  Env env(413);
  SigningKey low = env.new_funded_bidder(100);
  SigningKey high = env.new_funded_bidder(100);
  Bytes auction_id = env.create_auction(1, env.rng.scalar(), 14, 20);
  Credential low_cred = env.issue_credential(low, 2);
  Credential high_cred = env.issue_credential(high, 50);

  Transaction tx_low = contract::make_commit_tx(env.anon_sender(), env.contract_id,
                                                auction_id, low_cred, env.ceremony.vk,
                                                env.rng);
  Transaction tx_high = contract::make_commit_tx(env.anon_sender(), env.contract_id,
                                                 auction_id, high_cred, env.ceremony.vk,
                                                 env.rng);
  // indistinguishable in length
  CHECK(tx_low.wire_size() == tx_high.wire_size());

  // no decoded field equals the bid value
  for (auto [tx, v] : {std::pair{&tx_low, std::uint64_t{2}},
                       std::pair{&tx_high, std::uint64_t{50}}}) {
    contract::CommitPayload p;
    REQUIRE(contract::CommitPayload::decode(tx->payload, p));
    CHECK_FALSE(p.show.discloses_value);
    CHECK(p.show.disclosed_value == 0);
    // the 8-byte encoding of v appears nowhere in the payload
    Bytes pattern(8, 0);
    for (int i = 0; i < 8; ++i) pattern[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
    auto it = std::search(tx->payload.begin(), tx->payload.end(), pattern.begin(),
                          pattern.end());
    CHECK(it == tx->payload.end());
  }
}

TEST_CASE("checker and applier agree and the checker never mutates") {
  ThreeBidders t(414);
  auto& env = t.env;
  Transaction tx = contract::make_commit_tx(env.anon_sender(), env.contract_id,
                                            t.auction_id, t.a_cred, env.ceremony.vk,
                                            env.rng);
  auto before = ledger::state_digest(env.chain);
  Reason r = contract::check_transaction(tx, env.chain, env.chain.height + 1);
  CHECK(r == Reason::OK);
  CHECK(ledger::state_digest(env.chain) == before);

  auto applied = env.submit_and_advance(tx);
  CHECK(applied.applied);
}
