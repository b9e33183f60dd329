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

#include <stdexcept>

namespace sealbid {

// Caller-bug conditions. Protocol-level rejections (bad proofs, deadline
// misses, double spends) are values, not exceptions.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ThresholdError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sealbid
