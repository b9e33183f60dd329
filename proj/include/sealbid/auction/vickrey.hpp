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

#include <cstdint>
#include <vector>

#include "sealbid/crypto/encoding.hpp"
#include "sealbid/errors.hpp"

namespace sealbid::auction {

using crypto::Bytes;

// One revealed bid: the tag that committed it, the disclosed value, and the
// block in which the commit landed (earliest commit wins ties).
struct RevealedBid {
  Bytes zeta;
  std::uint64_t value = 0;
  std::uint64_t commit_height = 0;
};

struct RevealedBidSet {
  std::vector<RevealedBid> bids;
  std::uint64_t reserve = 0;  // worker's opened minimum price v0
};

struct Outcome {
  enum class Kind { NoWinner, Winner };
  Kind kind = Kind::NoWinner;
  Bytes winning_zeta;
  std::uint64_t clearing_price = 0;  // v' = max(v0, second highest v)
  std::uint64_t winning_value = 0;

  bool operator==(const Outcome& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::NoWinner) return true;
    return winning_zeta == o.winning_zeta && clearing_price == o.clearing_price &&
           winning_value == o.winning_value;
  }
};

// Second-price resolution with reserve. Ties on the highest value go to the
// earliest commit block, then to the smallest tag in canonical byte order; a
// lone qualifying bid pays the reserve. Throws ParameterError on duplicate
// tags.
Outcome resolve_vickrey(const RevealedBidSet& bids);

// Independent reference resolution (full sort plus explicit case analysis);
// shares no code with resolve_vickrey and exists to cross-check it.
Outcome vickrey_oracle(const RevealedBidSet& bids);

}  // namespace sealbid::auction
