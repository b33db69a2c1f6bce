// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "sdsc/decoder.hpp"
#include "symbol_search.hpp"

namespace sdsc {

GenieSegmentRates genie_segment_rates(const PolarCode& code, const ChannelSpec& spec, const DecoderConfig& cfg,
                                      std::size_t frames, std::uint64_t seed) {
  validate(cfg, code);
  const std::size_t m = cfg.symbol_size;
  const std::size_t segments = code.length() / m;
  const auto frozen = code.frozen_mask();

  GenieSegmentRates out;
  for (SegmentErrorStats* s : {&out.bit_decision, &out.local_ml}) {
    s->trials.assign(segments, 0);
    s->errors.assign(segments, 0);
  }

  std::vector<std::size_t> free_bits(segments, 0);
  for (std::size_t i = 0; i < code.length(); ++i)
    if (!frozen[i]) ++free_bits[i / m];

  ScEngine engine(code.n(), cfg.f_rule);
  detail::SymbolSearch search(engine, frozen, cfg.tie_break);
  for (std::size_t f = 0; f < frames; ++f) {
    const Frame fr = make_frame(code, spec, derive_seed(seed, 0, f));
    engine.load(fr.obs.llr);
    for (std::size_t j = 0; j < segments; ++j) {
      const std::size_t base = j * m;
      ++out.bit_decision.trials[j];
      ++out.local_ml.trials[j];
      if (free_bits[j] != 0) {
        bool sc_wrong = false;
        for (std::size_t t = 0; t < m; ++t) {
          const double l = engine.leaf_llr(base + t);
          const std::uint8_t b = frozen[base + t] ? 0 : std::uint8_t(l < 0.0);
          sc_wrong |= b != fr.u[base + t];
          engine.commit(base + t, b);
        }
        // The search restarts from the same genie prefix.
        const detail::SymbolChoice c = search.run(base, m);
        bool ml_wrong = false;
        for (std::size_t t = 0; t < m; ++t) ml_wrong |= c.bits[t] != fr.u[base + t];
        out.bit_decision.errors[j] += sc_wrong;
        out.local_ml.errors[j] += ml_wrong;
      }
      // Every leaf has to be visited once so later leaves see fresh LLRs.
      for (std::size_t t = 0; t < m; ++t) {
        engine.leaf_llr(base + t);
        engine.commit(base + t, fr.u[base + t]);
      }
    }
  }
  return out;
}

}  // namespace sdsc
