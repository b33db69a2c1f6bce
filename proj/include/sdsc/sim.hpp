// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdsc/decoder.hpp"
#include "sdsc/polar_code.hpp"

namespace sdsc {

/// One decoder in a plan. Symbol size 1 selects the bit-decision decoder.
struct DecoderSpec {
  std::size_t symbol_size = 1;
  FRule f_rule = FRule::exact;
  TieBreak tie_break = TieBreak::lexicographic_min;
};

struct SimPlan {
  unsigned n = 5;
  std::size_t k = 16;
  ChannelKind construction = ChannelKind::bec;
  double design_param = 0.5;  // erasure probability, or linear Es/N0

  ChannelKind channel = ChannelKind::bec;
  std::vector<double> params;  // erasure probabilities or Eb/N0 in dB
  std::vector<DecoderSpec> decoders;

  std::uint64_t max_frames = 1000;
  /// Stop a cell once the decoder with the most frame errors reaches this
  /// count; 0 disables early stopping.
  std::uint64_t min_frame_errors = 0;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;  // 0 = hardware concurrency
};

void validate(const SimPlan& plan);

struct SimRecord {
  ChannelKind channel = ChannelKind::bec;
  double channel_param = 0.0;
  DecoderSpec decoder;
  std::uint64_t frames = 0;
  std::uint64_t bit_errors = 0;  // over the K information bits only
  std::uint64_t frame_errors = 0;
  double ber = 0.0;
  double fer = 0.0;
  double fer_ci_low = 0.0;  // 95% Wilson
  double fer_ci_high = 1.0;
  std::uint64_t tie_frames = 0;
  std::uint64_t obs_checksum = 0;
};

/// Per-frame error indicators of one channel parameter, one row per decoder.
struct CellFrames {
  double channel_param = 0.0;
  std::vector<std::vector<std::uint8_t>> frame_errors;
};

struct SimResult {
  SimPlan plan;
  std::vector<SimRecord> records;  // parameter-major, decoders in plan order
  std::vector<CellFrames> cells;
};

/// Frame f of parameter p draws its data word and noise from
/// derive_seed(master_seed, p, f); every decoder sees that same observation.
/// Output does not depend on the worker count.
SimResult run(const SimPlan& plan);
SimResult run(const SimPlan& plan, const PolarCode& code);

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials, double z = 1.959963984540054);

std::string csv_header();
void write_csv(std::ostream& out, const SimResult& result);
std::string to_csv(const SimResult& result);
void write_csv_file(const std::string& path, const SimResult& result);

/// Paired comparison of a decoder expected to be no worse (larger symbol)
/// against a baseline on identical frames.
struct OrderingVerdict {
  double channel_param = 0.0;
  std::size_t candidate = 0;  // decoder index in the plan
  std::size_t baseline = 0;
  std::uint64_t frames = 0;
  std::uint64_t candidate_only = 0;  // frames only the candidate got wrong
  std::uint64_t baseline_only = 0;
  /// FER(candidate) - FER(baseline) and its paired standard deviation.
  double fer_difference = 0.0;
  double sigma = 0.0;
  bool consistent = true;
};

OrderingVerdict paired_compare(const CellFrames& cell, std::size_t candidate, std::size_t baseline,
                               double sigmas = 4.0);

/// Verdicts for every (M, 2M) pair and every (1, M) pair sharing f-rule and
/// tie rule, at every channel parameter. Consistent means
/// FER(candidate) <= FER(baseline) + sigmas * sigma.
std::vector<OrderingVerdict> paired_ordering_report(const SimResult& result, double sigmas = 4.0);

std::string to_string(FRule r);
std::string to_string(TieBreak t);
std::string to_string(ChannelKind k);
FRule parse_f_rule(const std::string& s);
TieBreak parse_tie_break(const std::string& s);
ChannelKind parse_channel_kind(const std::string& s);

}  // namespace sdsc
