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

#include "sealbid/credentials/keys.hpp"

#include <algorithm>
#include <set>

#include "sealbid/crypto/core.hpp"

namespace sealbid::credentials {

using crypto::ByteReader;
using crypto::ByteWriter;
using crypto::GroupContext;

bool AuthorityKeyShare::consistent() const {
  const auto& g2 = GroupContext::get().g2;
  return alpha == x * g2 && beta_v == y_v * g2 && beta_s == y_s * g2;
}

Bytes AuthorityPublicShare::to_bytes() const {
  ByteWriter w;
  w.u32(index);
  w.bytes(alpha.to_bytes());
  w.bytes(beta_v.to_bytes());
  w.bytes(beta_s.to_bytes());
  return w.take();
}

bool AuthorityPublicShare::from_bytes(ByteReader& r, AuthorityPublicShare& out) {
  if (!r.u32(out.index)) return false;
  Bytes buf;
  auto read_g2 = [&](G2& g) {
    if (!r.bytes(buf)) return false;
    auto p = G2::from_bytes(buf);
    if (!p) return false;
    g = *p;
    return true;
  };
  return read_g2(out.alpha) && read_g2(out.beta_v) && read_g2(out.beta_s);
}

Bytes AggregatedVerificationKey::to_bytes() const {
  ByteWriter w;
  w.str(curve_id);
  w.u32(n);
  w.u32(t);
  w.bytes(alpha.to_bytes());
  w.bytes(beta_v.to_bytes());
  w.bytes(beta_s.to_bytes());
  return w.take();
}

bool AggregatedVerificationKey::from_bytes(ByteReader& r, AggregatedVerificationKey& out) {
  if (!r.str(out.curve_id)) return false;
  if (!r.u32(out.n) || !r.u32(out.t)) return false;
  Bytes buf;
  auto read_g2 = [&](G2& g) {
    if (!r.bytes(buf)) return false;
    auto p = G2::from_bytes(buf);
    if (!p) return false;
    g = *p;
    return true;
  };
  return read_g2(out.alpha) && read_g2(out.beta_v) && read_g2(out.beta_s);
}

crypto::Digest AggregatedVerificationKey::digest() const {
  return crypto::Sha256::hash(to_bytes());
}

std::vector<Fr> lagrange_at_zero(const std::vector<std::uint32_t>& indices) {
  std::set<std::uint32_t> uniq(indices.begin(), indices.end());
  if (uniq.size() != indices.size()) {
    throw ParameterError("lagrange_at_zero: duplicate evaluation points");
  }
  std::vector<Fr> coeffs;
  coeffs.reserve(indices.size());
  for (std::uint32_t i : indices) {
    if (i == 0) throw ParameterError("lagrange_at_zero: points are 1-based");
    Fr num = Fr::one();
    Fr den = Fr::one();
    for (std::uint32_t j : indices) {
      if (j == i) continue;
      num *= Fr::from_u64(j);
      // (x_j - x_i) without leaving the field
      den *= Fr::from_u64(j) - Fr::from_u64(i);
    }
    coeffs.push_back(num * fr_inverse(den));
  }
  return coeffs;
}

Ceremony key_ceremony(std::uint32_t n, std::uint32_t t, Drbg& rng) {
  if (t == 0 || t > n) {
    throw ParameterError("key_ceremony: require 0 < t <= n");
  }
  const auto& ctx = GroupContext::get();

  // degree t-1 polynomials, one per signing exponent
  auto sample_poly = [&rng, t] {
    std::vector<Fr> poly(t);
    for (auto& c : poly) c = rng.nonzero_scalar();
    return poly;
  };
  auto eval = [](const std::vector<Fr>& poly, std::uint32_t at) {
    Fr x = Fr::from_u64(at);
    Fr acc = Fr::zero();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  std::vector<Fr> px = sample_poly();
  std::vector<Fr> pv = sample_poly();
  std::vector<Fr> ps = sample_poly();

  Ceremony out;
  out.shares.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    AuthorityKeyShare share;
    share.index = i;
    share.x = eval(px, i);
    share.y_v = eval(pv, i);
    share.y_s = eval(ps, i);
    share.alpha = G2(share.x * ctx.g2);
    share.beta_v = G2(share.y_v * ctx.g2);
    share.beta_s = G2(share.y_s * ctx.g2);
    out.shares.push_back(share);
  }

  // Aggregate through the public interpolation path rather than reading the
  // polynomial constant terms, so the ceremony exercises the same code the
  // verifiers run.
  std::vector<AuthorityPublicShare> publics;
  for (std::uint32_t i = 0; i < t; ++i) {
    const auto& s = out.shares[i];
    publics.push_back({s.index, s.alpha, s.beta_v, s.beta_s});
  }
  out.vk = aggregate_verification_key(publics, n, t);
  return out;
}

AggregatedVerificationKey aggregate_verification_key(
    const std::vector<AuthorityPublicShare>& shares, std::uint32_t n, std::uint32_t t) {
  if (t == 0 || t > n) {
    throw ParameterError("aggregate_verification_key: require 0 < t <= n");
  }
  if (shares.size() != t) {
    throw ThresholdError("aggregate_verification_key: need exactly t public shares");
  }
  std::vector<std::uint32_t> indices;
  for (const auto& s : shares) indices.push_back(s.index);
  std::vector<Fr> coeffs = lagrange_at_zero(indices);

  AggregatedVerificationKey vk;
  vk.n = n;
  vk.t = t;
  vk.curve_id = crypto::CURVE_ID;
  G2 alpha, beta_v, beta_s;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    alpha = G2(alpha + coeffs[i] * shares[i].alpha);
    beta_v = G2(beta_v + coeffs[i] * shares[i].beta_v);
    beta_s = G2(beta_s + coeffs[i] * shares[i].beta_s);
  }
  vk.alpha = alpha;
  vk.beta_v = beta_v;
  vk.beta_s = beta_s;
  return vk;
}

}  // namespace sealbid::credentials
