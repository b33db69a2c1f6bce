// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdsc/polar_code.hpp"

namespace sdsc {

/// Per-position LLRs log(P(y|x=0)/P(y|x=1)). On the BEC every entry is
/// +inf, -inf or 0 (erasure).
struct ChannelObservation {
  std::vector<double> llr;

  std::size_t size() const noexcept { return llr.size(); }
};

struct ChannelSpec {
  ChannelKind kind = ChannelKind::bec;
  /// Erasure probability for the BEC, Eb/N0 in dB for AWGN.
  double param = 0.0;
  /// Code rate K/N; converts Eb/N0 into the BPSK noise variance.
  double rate = 1.0;

  /// sigma^2 = 1 / (2 R 10^(EbN0/10)) for unit-energy BPSK.
  double noise_variance() const;
  void validate() const;
};

/// SplitMix64 finalizer chain; derive_seed(m, a, b) = split(split(m, a), b).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);
template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, Rest... rest) {
  return derive_seed(derive_seed(master, stream), std::uint64_t(rest)...);
}

ChannelObservation transmit(const ChannelSpec& spec, const BitBlock& x, std::uint64_t seed);

struct Frame {
  BitBlock u;
  BitBlock x;
  ChannelObservation obs;
};

/// Draws a uniform data word from derive_seed(seed, 0), encodes it and sends
/// it through the channel seeded with derive_seed(seed, 1). The channel rate
/// is taken from the code.
Frame make_frame(const PolarCode& code, ChannelSpec spec, std::uint64_t seed);

/// One LLR per line; accepts inf, +inf, -inf and decimal numerals. Blank
/// lines are ignored.
ChannelObservation parse_observation(std::string_view text);
ChannelObservation load_observation(const std::string& path);

}  // namespace sdsc
