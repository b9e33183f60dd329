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

#include "sealbid/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "sealbid/credentials/show.hpp"

namespace sealbid::harness {

using contract::ChainState;
using contract::Reason;
using credentials::Credential;
using crypto::Bytes;
using crypto::Drbg;
using crypto::SigningKey;
using ledger::Transaction;

namespace {

// representative worker advertisement riding in every measured Create
constexpr const char* BENCH_OFFER =
    "storage-deal offer: capacity 32 GiB, duration 180 days, replication factor 1, "
    "retrieval bandwidth 10 Mbit/s";

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::pair<double, double> mean_stddev(const std::vector<double>& xs) {
  if (xs.empty()) return {0, 0};
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  return {mean, std::sqrt(var)};
}

// Fixed protocol surroundings reused across all measured operations: one
// contract instance, one auction far from its deadlines, one issued
// credential, and state snapshots for each phase.
struct BenchFixture {
  Drbg rng{0xbe7c, "bench"};
  credentials::Ceremony ceremony{credentials::key_ceremony(3, 2, rng)};
  SigningKey worker_key;
  ledger::Address worker;
  ChainState base;       // contract instance only
  ChainState committed;  // + auction with the tag committed
  ChainState revealed;   // + reveal, opening, resolution
  Bytes contract_id;
  Bytes auction_id;
  Credential cred;
  bn254::Fr blinding;
  std::uint64_t t_commit = 1000;
  std::uint64_t t_reveal = 2000;

  BenchFixture() {
    worker_key = SigningKey::generate(rng);
    worker = worker_key.public_key.to_bytes();

    std::vector<credentials::AuthorityPublicShare> publics;
    for (const auto& s : ceremony.shares) {
      publics.push_back({s.index, s.alpha, s.beta_v, s.beta_s});
    }
    SigningKey coordinator = SigningKey::generate(rng);
    Transaction setup = contract::make_setup_tx(
        coordinator.public_key.to_bytes(), 3, 2,
        {1, 2, 3, 5, 10, 20, 50, 100}, ceremony.vk, publics);
    crypto::Digest sd = setup.digest();
    contract_id = Bytes(sd.begin(), sd.end());
    ledger::submit(base, setup);
    contract::advance(base);

    blinding = rng.scalar();
    auto commitment = crypto::pedersen_commit(bn254::Fr::from_u64(1), blinding);
    Transaction create = contract::make_create_tx(
        worker, contract_id, ceremony.vk, commitment, t_commit, t_reveal, BENCH_OFFER);
    crypto::Digest cd = create.digest();
    auction_id = Bytes(cd.begin(), cd.end());
    ledger::submit(base, create);
    contract::advance(base);

    SigningKey bidder = SigningKey::generate(rng);
    base.accounts[bidder.public_key.to_bytes()] = 10;
    auto [req, secrets] = credentials::prepare_request(5, rng.nonzero_scalar(), rng);
    ledger::submit(base, contract::make_deposit_tx(bidder, contract_id, 5, req, rng));
    contract::advance(base);
    std::vector<credentials::PartialCredential> parts;
    for (const auto& share : ceremony.shares) {
      parts.push_back(*credentials::blind_sign(share, req));
    }
    cred = credentials::unblind_and_aggregate(parts, secrets, req, ceremony.vk);

    committed = base;
    ledger::submit(committed,
                   contract::make_commit_tx(bidder.public_key.to_bytes(), contract_id,
                                            auction_id, cred, ceremony.vk, rng));
    contract::advance(committed);

    revealed = committed;
    revealed.height = t_commit;  // inside the reveal window
    ledger::submit(revealed,
                   contract::make_open_min_price_tx(worker_key, contract_id, auction_id, 1,
                                                    blinding, rng));
    ledger::submit(revealed,
                   contract::make_reveal_tx(bidder.public_key.to_bytes(), contract_id,
                                            auction_id, cred, ceremony.vk, rng));
    contract::advance(revealed);
    revealed.height = t_reveal;
    contract::resolve_due_auctions(revealed);
  }

  // procedure builder and the (state, height) the checker runs against
  struct OpSetup {
    std::function<Transaction(Drbg&)> procedure;
    const ChainState* state = nullptr;
    std::uint64_t check_height = 0;
  };

  OpSetup op_setup(const std::string& op) {
    OpSetup s;
    if (op == "Create") {
      s.procedure = [this](Drbg& r) {
        auto c = crypto::pedersen_commit(bn254::Fr::from_u64(1 + r.uniform(100)),
                                         r.scalar());
        return contract::make_create_tx(worker, contract_id, ceremony.vk, c, t_commit,
                                        t_reveal, BENCH_OFFER);
      };
      s.state = &base;
      s.check_height = 5;
    } else if (op == "Commit") {
      s.procedure = [this](Drbg& r) {
        return contract::make_commit_tx(worker, contract_id, auction_id, cred, ceremony.vk,
                                        r);
      };
      s.state = &base;
      s.check_height = 5;
    } else if (op == "Reveal") {
      s.procedure = [this](Drbg& r) {
        return contract::make_reveal_tx(worker, contract_id, auction_id, cred, ceremony.vk,
                                        r);
      };
      s.state = &committed;
      s.check_height = t_commit;
    } else if (op == "Withdraw") {
      s.procedure = [this](Drbg& r) {
        SigningKey payout = SigningKey::generate(r);
        return contract::make_withdraw_tx(worker, contract_id, auction_id, payout, cred,
                                          ceremony.vk, r);
      };
      s.state = &revealed;
      s.check_height = t_reveal;
    } else if (op == "SubmitWork") {
      s.procedure = [this](Drbg& r) {
        crypto::Digest fd = crypto::Sha256::hash(std::string("replica"));
        return contract::make_submit_work_tx(worker, contract_id, auction_id, cred,
                                             ceremony.vk, Bytes(fd.begin(), fd.end()), r);
      };
      s.state = &revealed;
      s.check_height = t_reveal;
    } else {
      throw ParameterError("run_benchmark: unknown operation '" + op + "'");
    }
    return s;
  }
};

}  // namespace

const BenchRow* BenchmarkReport::find(const std::string& op, const std::string& side) const {
  for (const auto& r : rows) {
    if (r.op == op && r.side == side) return &r;
  }
  return nullptr;
}

BenchmarkReport run_benchmark(const std::vector<std::string>& ops, std::size_t iterations,
                              std::size_t threads) {
  if (iterations < 100) {
    throw ParameterError("run_benchmark: iterations must be at least 100");
  }
  if (threads == 0) threads = 1;

  BenchFixture fx;
  BenchmarkReport report;
  report.iterations = iterations;
  report.threads = threads;

  for (const auto& op : ops) {
    auto setup = fx.op_setup(op);

    // procedure: generate the transactions, timing each build
    std::vector<Transaction> txs;
    txs.reserve(iterations);
    std::vector<double> gen_ms;
    gen_ms.reserve(iterations);
    for (std::size_t i = 0; i < iterations; ++i) {
      auto t0 = Clock::now();
      txs.push_back(setup.procedure(fx.rng));
      gen_ms.push_back(ms_since(t0));
    }

    // checker: validate each built transaction against the fixed state;
    // checkers are pure, so iterations can fan out across threads
    std::vector<double> check_ms(iterations, 0);
    std::vector<Reason> outcomes(iterations, Reason::MALFORMED);
    auto worker_fn = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        auto t0 = Clock::now();
        outcomes[i] = contract::check_transaction(txs[i], *setup.state, setup.check_height);
        check_ms[i] = ms_since(t0);
      }
    };
    if (threads == 1) {
      worker_fn(0, iterations);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (iterations + threads - 1) / threads;
      for (std::size_t t = 0; t < threads; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(iterations, begin + chunk);
        if (begin < end) pool.emplace_back(worker_fn, begin, end);
      }
      for (auto& th : pool) th.join();
    }
    for (Reason r : outcomes) {
      if (r != Reason::OK) {
        throw IntegrityError(std::string("benchmark checker rejected an honest ") + op +
                             " transaction: " + contract::reason_name(r));
      }
    }

    auto [gmean, gdev] = mean_stddev(gen_ms);
    auto [cmean, cdev] = mean_stddev(check_ms);
    report.rows.push_back(
        {op, "procedure", gmean, gdev, iterations, txs.front().wire_size()});
    report.rows.push_back({op, "checker", cmean, cdev, iterations, 0});
  }
  return report;
}

std::string format_table(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "operation      side        mean [ms]   stddev [ms]   size [bytes]   samples\n";
  out << "-----------------------------------------------------------------------------\n";
  char buf[160];
  for (const auto& r : report.rows) {
    if (r.side == "procedure") {
      std::snprintf(buf, sizeof(buf), "%-14s %-10s %10.3f   %11.3f   %12zu   %7zu\n",
                    r.op.c_str(), r.side.c_str(), r.mean_ms, r.stddev_ms, r.tx_bytes,
                    r.samples);
    } else {
      std::snprintf(buf, sizeof(buf), "%-14s %-10s %10.3f   %11.3f   %12s   %7zu\n",
                    r.op.c_str(), r.side.c_str(), r.mean_ms, r.stddev_ms, "-", r.samples);
    }
    out << buf;
  }
  out << "iterations per row: " << report.iterations << ", checker threads: "
      << report.threads << "\n";
  return out.str();
}

std::string format_tsv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "op\tside\tmean_ms\tstddev_ms\tsize_bytes\tsamples\n";
  for (const auto& r : report.rows) {
    out << r.op << '\t' << r.side << '\t' << r.mean_ms << '\t' << r.stddev_ms << '\t'
        << r.tx_bytes << '\t' << r.samples << '\n';
  }
  return out.str();
}

}  // namespace sealbid::harness
