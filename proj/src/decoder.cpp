// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "sdsc/decoder.hpp"

#include <cmath>
#include <limits>

#include "sdsc/error.hpp"
#include "symbol_search.hpp"

namespace sdsc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_length(const PolarCode& code, const ChannelObservation& obs) {
  if (obs.size() != code.length())
    throw InputError("observation has length " + std::to_string(obs.size()) + ", expected " +
                     std::to_string(code.length()));
}
}  // namespace

void validate(const DecoderConfig& cfg, const PolarCode& code) {
  if (cfg.symbol_size == 0 || code.length() % cfg.symbol_size != 0)
    throw ConfigError("symbol size " + std::to_string(cfg.symbol_size) + " does not divide N=" +
                      std::to_string(code.length()));
}

ScBitDecoder::ScBitDecoder(PolarCode code, DecoderConfig cfg)
    : code_(std::move(code)), cfg_(cfg), engine_(code_.n(), cfg.f_rule) {
  if (cfg_.symbol_size != 1) throw ConfigError("bit-decision SC requires symbol size 1");
}

DecodeResult ScBitDecoder::decode(const ChannelObservation& obs) {
  check_length(code_, obs);
  engine_.load(obs.llr);
  const std::size_t len = code_.length();
  const auto frozen = code_.frozen_mask();

  DecodeResult r;
  r.u_hat = BitBlock(len, BitRole::estimate);
  r.symbol_metrics.resize(len);
  r.decision_llrs.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    const double l = engine_.leaf_llr(i);
    std::uint8_t bit = 0;
    if (!frozen[i]) {
      // Both tie rules resolve an erased single bit to 0.
      bit = l < 0.0 ? 1 : 0;
      if (l == 0.0) r.tie_symbols.push_back(i);
    }
    r.decision_llrs[i] = l;
    r.symbol_metrics[i] = {llr::bit_log_probability(l, bit), frozen[i] ? kInf : std::fabs(l)};
    r.u_hat[i] = bit;
    engine_.commit(i, bit);
  }
  r.contradiction = engine_.contradiction();
  return r;
}

ScSymbolDecoder::ScSymbolDecoder(PolarCode code, DecoderConfig cfg)
    : code_(std::move(code)), cfg_(cfg), engine_(code_.n(), cfg.f_rule) {
  validate(cfg_, code_);
}

DecodeResult ScSymbolDecoder::decode(const ChannelObservation& obs) {
  check_length(code_, obs);
  engine_.load(obs.llr);
  const std::size_t len = code_.length();
  const std::size_t m = cfg_.symbol_size;

  DecodeResult r;
  r.u_hat = BitBlock(len, BitRole::estimate);
  r.symbol_metrics.resize(len / m);
  detail::SymbolSearch search(engine_, code_.frozen_mask(), cfg_.tie_break);
  for (std::size_t j = 0; j < len / m; ++j) {
    const detail::SymbolChoice c = search.run(j * m, m);
    for (std::size_t t = 0; t < m; ++t) r.u_hat[j * m + t] = c.bits[t];
    r.symbol_metrics[j] = {c.log_likelihood, c.gap};
    if (c.tie) r.tie_symbols.push_back(j);
  }
  r.contradiction = engine_.contradiction();
  return r;
}

DecodeResult sc_bit_decode(const PolarCode& code, const ChannelObservation& obs, const DecoderConfig& cfg) {
  return ScBitDecoder(code, cfg).decode(obs);
}

DecodeResult sc_symbol_decode(const PolarCode& code, const ChannelObservation& obs, const DecoderConfig& cfg) {
  return ScSymbolDecoder(code, cfg).decode(obs);
}

DecodeResult ml_decode(const PolarCode& code, const ChannelObservation& obs) {
  return MlDecoder(code).decode(obs);
}

}  // namespace sdsc
