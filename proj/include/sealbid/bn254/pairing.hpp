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

#include <utility>
#include <vector>

#include "sealbid/bn254/curve.hpp"

namespace sealbid::bn254 {

// Optimal ate pairing e: G1 x G2 -> GT (subgroup of Fp12*).
Fp12 pairing(const G1& p, const G2& q);

// Product of pairings sharing one final exponentiation:
//   prod_i e(p_i, q_i)
Fp12 pairing_product(const std::vector<std::pair<G1, G2>>& pairs);

// Pairing equality e(a1, a2) == e(b1, b2) via a single product check.
bool pairing_check(const G1& a1, const G2& a2, const G1& b1, const G2& b2);

Fp12 miller_loop(const G1& p, const G2& q);
Fp12 final_exponentiation(const Fp12& f);

}  // namespace sealbid::bn254
