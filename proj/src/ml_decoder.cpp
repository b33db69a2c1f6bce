// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <bit>
#include <cmath>
#include <limits>

#include "sdsc/decoder.hpp"
#include "sdsc/error.hpp"

namespace sdsc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MlDecoder::MlDecoder(PolarCode code) : code_(std::move(code)), words_((code_.length() + 63) / 64) {
  const std::size_t k = code_.dimension();
  if (k > kMaxDimension)
    throw GuardError("exhaustive ML refuses K=" + std::to_string(k) + " (limit " +
                     std::to_string(kMaxDimension) + ")");
  // Row r flips data-key bit r; key bit K-1 is the first information index,
  // so integer order on keys is lexicographic order on u.
  const auto& info = code_.info_set();
  rows_.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<std::uint8_t> u(code_.length(), 0);
    u[info[k - 1 - r] - 1] = 1;
    const auto x = polar_transform(u);
    rows_[r].assign(words_, 0);
    for (std::size_t p = 0; p < x.size(); ++p)
      if (x[p]) rows_[r][p / 64] |= std::uint64_t{1} << (p % 64);
  }
}

DecodeResult MlDecoder::decode(const ChannelObservation& obs) const {
  const std::size_t len = code_.length();
  if (obs.size() != len)
    throw InputError("observation has length " + std::to_string(obs.size()) + ", expected " +
                     std::to_string(len));

  // Score = -(sum of per-position penalties), the codeword log-likelihood up
  // to a per-observation constant. Penalties are >= 0 so +inf sums cleanly.
  const std::size_t bytes = (len + 7) / 8;
  std::vector<std::array<double, 256>> table(bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    std::array<double, 8> pen0{}, pen1{};
    for (std::size_t k = 0; k < 8 && b * 8 + k < len; ++k) {
      const double l = obs.llr[b * 8 + k];
      if (std::isnan(l)) throw InputError("observation contains NaN");
      pen0[k] = l < 0.0 ? -l : 0.0;
      pen1[k] = l > 0.0 ? l : 0.0;
    }
    for (unsigned v = 0; v < 256; ++v) {
      double s = 0.0;
      for (unsigned k = 0; k < 8; ++k) s += (v >> k) & 1 ? pen1[k] : pen0[k];
      table[b][v] = s;
    }
  }

  std::vector<std::uint64_t> cw(words_, 0);
  auto score = [&] {
    double s = 0.0;
    for (std::size_t b = 0; b < bytes; ++b) s += table[b][(cw[b / 8] >> (8 * (b % 8))) & 0xff];
    return -s;
  };

  const std::size_t k = code_.dimension();
  std::uint64_t key = 0;
  std::uint64_t best_key = 0;
  double best = score();
  double second = -kInf;
  bool have_second = false;
  bool tie = false;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t t = 1; t < count; ++t) {
    const unsigned r = unsigned(std::countr_zero(t));
    key ^= std::uint64_t{1} << r;
    for (std::size_t w = 0; w < words_; ++w) cw[w] ^= rows_[r][w];
    const double s = score();
    if (s > best) {
      second = best;
      have_second = true;
      best = s;
      best_key = key;
      tie = false;
    } else if (s == best) {
      tie = true;
      second = best;
      have_second = true;
      if (key < best_key) best_key = key;
    } else if (!have_second || s > second) {
      second = s;
      have_second = true;
    }
  }

  DecodeResult res;
  res.u_hat = BitBlock(len, BitRole::estimate);
  const auto& info = code_.info_set();
  for (std::size_t r = 0; r < k; ++r)
    if ((best_key >> r) & 1) res.u_hat[info[k - 1 - r] - 1] = 1;
  res.symbol_metrics = {{best, tie ? 0.0 : (have_second ? best - second : kInf)}};
  if (tie) res.tie_symbols.push_back(0);
  return res;
}

}  // namespace sdsc
