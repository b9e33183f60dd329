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
//
// sealbid: sealed-bid second-price auctions over threshold blind credentials
// on a simulated ledger.
//
//   sealbid run <scenario.json> [--trace out.trace] [--quiet]
//   sealbid demo [--trace out.trace]
//   sealbid bench [--iterations N] [--ops LIST] [--threads K] [--tsv]
//   sealbid verify-trace <file.trace>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sealbid/harness/bench.hpp"
#include "sealbid/harness/scenario.hpp"

namespace {

using namespace sealbid;

int report_run(const harness::ScenarioResult& result, const std::string& trace_path,
               bool quiet) {
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) {
      std::cerr << "error: cannot write trace file '" << trace_path << "'\n";
      return 2;
    }
    for (const auto& line : result.trace_lines) out << line << '\n';
  }
  if (!quiet) {
    for (const auto& r : result.trace) std::cout << ledger::trace_line(r) << '\n';
    std::cout << "\noutcome: ";
    switch (result.outcome) {
      case contract::AuctionState::Phase::Pending: std::cout << "pending"; break;
      case contract::AuctionState::Phase::Failed: std::cout << "failed"; break;
      case contract::AuctionState::Phase::Won:
        std::cout << "won, clearing price " << result.clearing_price;
        break;
    }
    std::cout << "\nworker credited: " << result.worker_credited << '\n';
    for (const auto& b : result.bidders) {
      std::cout << "bidder " << b.name << ": deposited " << b.deposited << ", withdrew "
                << b.withdrawn << (b.is_winner ? " (winner)" : "") << '\n';
    }
    std::cout << "final state digest: "
              << crypto::hex_encode(ledger::state_digest(result.final_state)) << '\n';
  }
  if (!result.passed()) {
    for (const auto& v : result.violations) std::cerr << "invariant violation: " << v << '\n';
    return 1;
  }
  if (!quiet) std::cout << "invariant sweep: all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sealed-bid second-price auction engine on a simulated ledger"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string trace_path;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--trace", trace_path, "write the replayable trace here");
  run->add_flag("--quiet", quiet, "suppress the per-transaction report");

  std::string demo_trace;
  auto* demo = app.add_subcommand("demo", "run the built-in honest scenario");
  demo->add_option("--trace", demo_trace, "write the replayable trace here");

  std::size_t iterations = 100;
  std::size_t threads = 1;
  std::vector<std::string> ops = harness::all_benchmark_ops();
  bool tsv = false;
  auto* bench = app.add_subcommand("bench", "time procedures and checkers per operation");
  bench->add_option("--iterations", iterations, "samples per operation (>= 100)");
  bench->add_option("--ops", ops, "operations to measure")
      ->check(CLI::IsMember(harness::all_benchmark_ops()));
  bench->add_option("--threads", threads, "checker fan-out threads");
  bench->add_flag("--tsv", tsv, "machine-readable output");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify-trace", "replay a trace and re-check invariants");
  verify->add_option("trace", verify_path, "trace file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      auto scenario = harness::Scenario::from_file(scenario_path);
      return report_run(harness::run_scenario(scenario), trace_path, quiet);
    }
    if (*demo) {
      return report_run(harness::run_scenario(harness::demo_scenario()), demo_trace, false);
    }
    if (*bench) {
      auto report = harness::run_benchmark(ops, iterations, threads);
      std::cout << (tsv ? harness::format_tsv(report) : harness::format_table(report));
      return 0;
    }
    if (*verify) {
      std::ifstream in(verify_path);
      if (!in) {
        std::cerr << "error: cannot read '" << verify_path << "'\n";
        return 2;
      }
      std::vector<std::string> lines;
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
      }
      auto violations = harness::verify_trace(lines);
      if (violations.empty()) {
        std::cout << "trace verified: replay matches and every invariant holds\n";
        return 0;
      }
      for (const auto& v : violations) std::cerr << "verify-trace: " << v << '\n';
      return 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
