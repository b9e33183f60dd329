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

// Per-operation timing of the transaction builder ("procedure") and the
// validation path ("checker"), plus the measured wire size. Deposit is
// omitted: its generation and checking reuse the credential-request path
// measured through the other operations.
struct BenchRow {
  std::string op;    // Create | Commit | Reveal | Withdraw | SubmitWork
  std::string side;  // procedure | checker
  double mean_ms = 0;
  double stddev_ms = 0;
  std::size_t samples = 0;
  std::size_t tx_bytes = 0;  // canonical wire encoding; 0 for checker rows
};

struct BenchmarkReport {
  std::vector<BenchRow> rows;
  std::size_t iterations = 0;
  std::size_t threads = 1;

  const BenchRow* find(const std::string& op, const std::string& side) const;
};

inline const std::vector<std::string>& all_benchmark_ops() {
  static const std::vector<std::string> ops = {"Create", "Commit", "Reveal", "Withdraw",
                                               "SubmitWork"};
  return ops;
}

// iterations >= 100; checker passes may fan out over `threads` with
// per-thread timers merged afterwards.
BenchmarkReport run_benchmark(const std::vector<std::string>& ops, std::size_t iterations,
                              std::size_t threads = 1);

std::string format_table(const BenchmarkReport& report);
std::string format_tsv(const BenchmarkReport& report);

}  // namespace sealbid::harness
