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

#include "sealbid/auction/vickrey.hpp"

#include <algorithm>
#include <set>

namespace sealbid::auction {

namespace {

void check_distinct_tags(const RevealedBidSet& in) {
  std::set<Bytes> tags;
  for (const auto& b : in.bids) {
    if (!tags.insert(b.zeta).second) {
      throw ParameterError("vickrey: duplicate zeta tag in revealed set");
    }
  }
}

// true when a beats b under the tie rules
bool beats(const RevealedBid& a, const RevealedBid& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.commit_height != b.commit_height) return a.commit_height < b.commit_height;
  return a.zeta < b.zeta;
}

}  // namespace

Outcome resolve_vickrey(const RevealedBidSet& in) {
  check_distinct_tags(in);

  // single pass tracking the best bid and the best losing value
  const RevealedBid* best = nullptr;
  std::uint64_t second_value = 0;
  bool have_second = false;
  for (const auto& bid : in.bids) {
    if (best == nullptr) {
      best = &bid;
      continue;
    }
    if (beats(bid, *best)) {
      second_value = best->value;
      have_second = true;
      best = &bid;
    } else if (!have_second || bid.value > second_value) {
      second_value = bid.value;
      have_second = true;
    }
  }

  Outcome out;
  if (best == nullptr || best->value < in.reserve) {
    return out;  // NoWinner
  }
  out.kind = Outcome::Kind::Winner;
  out.winning_zeta = best->zeta;
  out.winning_value = best->value;
  out.clearing_price = have_second ? std::max(in.reserve, second_value) : in.reserve;
  return out;
}

Outcome vickrey_oracle(const RevealedBidSet& in) {
  check_distinct_tags(in);

  std::vector<RevealedBid> sorted = in.bids;
  std::stable_sort(sorted.begin(), sorted.end(), [](const RevealedBid& a, const RevealedBid& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.commit_height != b.commit_height) return a.commit_height < b.commit_height;
    return a.zeta < b.zeta;
  });

  Outcome out;
  if (sorted.empty()) return out;
  if (sorted.front().value < in.reserve) return out;

  out.kind = Outcome::Kind::Winner;
  out.winning_zeta = sorted.front().zeta;
  out.winning_value = sorted.front().value;
  if (sorted.size() == 1) {
    out.clearing_price = in.reserve;
  } else {
    out.clearing_price = std::max(in.reserve, sorted[1].value);
  }
  return out;
}

}  // namespace sealbid::auction
