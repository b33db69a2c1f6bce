// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sdsc/channel.hpp"
#include "sdsc/polar_code.hpp"
#include "sdsc/sc_engine.hpp"

namespace sdsc {

/// How equal-metric candidates are resolved. For single-bit decisions both
/// rules pick 0. For M-bit symbols, lexicographic_min takes the smallest
/// string u_{jM+1}..u_{jM+M}; zero takes the lowest Hamming weight and falls
/// back to lexicographic order.
enum class TieBreak { zero, lexicographic_min };

struct DecoderConfig {
  std::size_t symbol_size = 1;
  FRule f_rule = FRule::exact;
  TieBreak tie_break = TieBreak::lexicographic_min;
};

void validate(const DecoderConfig& cfg, const PolarCode& code);

struct SymbolMetric {
  /// Log-probability of the committed candidate given y and the prefix.
  double log_likelihood = 0.0;
  /// Distance to the runner-up candidate; +inf when no rival was possible.
  double gap = 0.0;
};

struct DecodeResult {
  BitBlock u_hat;
  std::vector<SymbolMetric> symbol_metrics;  // one per symbol
  std::vector<std::size_t> tie_symbols;      // 0-based symbol indices
  /// Per-leaf decision LLRs; filled by the bit-decision decoder only.
  std::vector<double> decision_llrs;
  bool contradiction = false;

  bool tied() const noexcept { return !tie_symbols.empty(); }
};

/// Bit-decision successive cancellation: one hard decision per leaf.
class ScBitDecoder {
 public:
  ScBitDecoder(PolarCode code, DecoderConfig cfg = {});
  DecodeResult decode(const ChannelObservation& obs);
  const PolarCode& code() const noexcept { return code_; }

 private:
  PolarCode code_;
  DecoderConfig cfg_;
  ScEngine engine_;
};

/// M-bit symbol-decision successive cancellation.
///
/// Each symbol is decided by a depth-first search over its free bits on top
/// of the SC recursion, scoring a candidate by the sum of per-bit
/// log-probabilities along its own path. Frozen bits inside the symbol are
/// pinned to zero but still score, which is what lets later frozen bits of a
/// symbol inform earlier information bits. The best candidate is committed
/// before the next symbol starts. With M = N this is ML sequence decoding.
class ScSymbolDecoder {
 public:
  ScSymbolDecoder(PolarCode code, DecoderConfig cfg);
  DecodeResult decode(const ChannelObservation& obs);
  const PolarCode& code() const noexcept { return code_; }

 private:
  PolarCode code_;
  DecoderConfig cfg_;
  ScEngine engine_;
};

/// Exhaustive ML over all 2^K codewords. Ties go to the lexicographically
/// smallest data word and are flagged.
class MlDecoder {
 public:
  static constexpr std::size_t kMaxDimension = 24;

  explicit MlDecoder(PolarCode code);
  DecodeResult decode(const ChannelObservation& obs) const;
  const PolarCode& code() const noexcept { return code_; }

 private:
  PolarCode code_;
  std::size_t words_;                                  // 64-bit words per codeword
  std::vector<std::vector<std::uint64_t>> rows_;       // rows_[r]: codeword of info bit r
};

DecodeResult sc_bit_decode(const PolarCode& code, const ChannelObservation& obs, const DecoderConfig& cfg = {});
DecodeResult sc_symbol_decode(const PolarCode& code, const ChannelObservation& obs, const DecoderConfig& cfg);
DecodeResult ml_decode(const PolarCode& code, const ChannelObservation& obs);

struct SegmentErrorStats {
  std::vector<std::uint64_t> trials;
  std::vector<std::uint64_t> errors;

  std::size_t segments() const noexcept { return trials.size(); }
  double rate(std::size_t i) const { return trials[i] ? double(errors[i]) / double(trials[i]) : 0.0; }
};

struct GenieSegmentRates {
  SegmentErrorStats bit_decision;  // p_i: bit-by-bit SC inside the segment
  SegmentErrorStats local_ml;      // p_i': symbol rule inside the segment
};

/// Genie-aided segment error rates: before every M-bit segment the true
/// prefix is forced, then the segment is decoded by both rules on the same
/// observation. Frame f uses the same data word and noise as simulate() with
/// parameter index 0.
GenieSegmentRates genie_segment_rates(const PolarCode& code, const ChannelSpec& spec, const DecoderConfig& cfg,
                                      std::size_t frames, std::uint64_t seed);

}  // namespace sdsc
