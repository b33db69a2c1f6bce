// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "sdsc/sdsc.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <variant>

#include "sdsc/channel.hpp"
#include "sdsc/decoder.hpp"
#include "sdsc/error.hpp"
#include "sdsc/patterns.hpp"
#include "sdsc/sim.hpp"

struct sdsc_code {
  sdsc::PolarCode code;
};

struct sdsc_decoder {
  std::variant<sdsc::ScBitDecoder, sdsc::ScSymbolDecoder, sdsc::MlDecoder> impl;
};

struct sdsc_sim_result {
  sdsc::SimResult result;
};

namespace {

thread_local std::string g_last_error;

sdsc_status to_status(sdsc::ErrorCode c) {
  switch (c) {
    case sdsc::ErrorCode::parameter: return SDSC_E_PARAM;
    case sdsc::ErrorCode::input: return SDSC_E_INPUT;
    case sdsc::ErrorCode::config: return SDSC_E_CONFIG;
    case sdsc::ErrorCode::guard: return SDSC_E_GUARD;
    case sdsc::ErrorCode::io: return SDSC_E_IO;
    case sdsc::ErrorCode::internal: return SDSC_E_INTERNAL;
  }
  return SDSC_E_INTERNAL;
}

sdsc_status fail(sdsc_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <typename F>
sdsc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const sdsc::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SDSC_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SDSC_E_INTERNAL, e.what());
  }
}

sdsc_status copy_string(const std::string& s, char* buf, size_t capacity, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf) return SDSC_OK;
  if (capacity < s.size() + 1) return fail(SDSC_E_BUFFER, "buffer holds " + std::to_string(capacity) +
                                                              " bytes, need " + std::to_string(s.size() + 1));
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return SDSC_OK;
}

sdsc::ChannelKind kind_of(sdsc_channel_kind k) {
  if (k != SDSC_BEC && k != SDSC_AWGN) throw sdsc::ConfigError("unknown channel kind");
  return k == SDSC_BEC ? sdsc::ChannelKind::bec : sdsc::ChannelKind::awgn;
}

sdsc::FRule rule_of(sdsc_f_rule r) {
  if (r != SDSC_F_EXACT && r != SDSC_F_MINSUM) throw sdsc::ConfigError("unknown f-rule");
  return r == SDSC_F_EXACT ? sdsc::FRule::exact : sdsc::FRule::min_sum;
}

sdsc::TieBreak tie_of(sdsc_tie_break t) {
  if (t != SDSC_TIE_LEXMIN && t != SDSC_TIE_ZERO) throw sdsc::ConfigError("unknown tie-break");
  return t == SDSC_TIE_ZERO ? sdsc::TieBreak::zero : sdsc::TieBreak::lexicographic_min;
}

sdsc_status new_code(sdsc::PolarCode code, sdsc_code** out) {
  *out = new sdsc_code{std::move(code)};
  return SDSC_OK;
}

sdsc_status export_llr(const sdsc::ChannelObservation& obs, double** llr, size_t* length) {
  auto* buf = static_cast<double*>(std::malloc(std::max<size_t>(1, obs.size()) * sizeof(double)));
  if (!buf) return fail(SDSC_E_INTERNAL, "out of memory");
  std::copy(obs.llr.begin(), obs.llr.end(), buf);
  *llr = buf;
  *length = obs.size();
  return SDSC_OK;
}

#define SDSC_REQUIRE(ptr) \
  if (!(ptr)) return fail(SDSC_E_NULL, #ptr " is NULL")

}  // namespace

extern "C" {

const char* sdsc_last_error(void) { return g_last_error.c_str(); }

const char* sdsc_status_string(sdsc_status status) {
  switch (status) {
    case SDSC_OK: return "ok";
    case SDSC_E_PARAM: return "parameter error";
    case SDSC_E_INPUT: return "input error";
    case SDSC_E_CONFIG: return "configuration error";
    case SDSC_E_GUARD: return "enumeration guard";
    case SDSC_E_IO: return "i/o error";
    case SDSC_E_INTERNAL: return "internal error";
    case SDSC_E_BUFFER: return "buffer too small";
    case SDSC_E_NULL: return "null argument";
  }
  return "unknown status";
}

sdsc_status sdsc_code_construct(unsigned n, size_t k, sdsc_channel_kind kind, double design, sdsc_code** out) {
  SDSC_REQUIRE(out);
  return guarded([&] { return new_code(sdsc::PolarCode::construct(n, k, kind_of(kind), design), out); });
}

sdsc_status sdsc_code_from_info_set(size_t length, const uint32_t* info_set, size_t k, sdsc_code** out) {
  SDSC_REQUIRE(out);
  if (k) SDSC_REQUIRE(info_set);
  return guarded([&] {
    std::vector<std::size_t> info(info_set, info_set + k);
    return new_code(sdsc::PolarCode::from_info_set(length, std::move(info)), out);
  });
}

sdsc_status sdsc_code_parse(const char* text, sdsc_code** out) {
  SDSC_REQUIRE(text);
  SDSC_REQUIRE(out);
  return guarded([&] { return new_code(sdsc::PolarCode::parse(text), out); });
}

sdsc_status sdsc_code_load(const char* path, sdsc_code** out) {
  SDSC_REQUIRE(path);
  SDSC_REQUIRE(out);
  return guarded([&] { return new_code(sdsc::PolarCode::load(path), out); });
}

sdsc_status sdsc_code_save(const sdsc_code* code, const char* path) {
  SDSC_REQUIRE(code);
  SDSC_REQUIRE(path);
  return guarded([&] {
    code->code.save(path);
    return SDSC_OK;
  });
}

sdsc_status sdsc_code_text(const sdsc_code* code, char* buf, size_t capacity, size_t* needed) {
  SDSC_REQUIRE(code);
  return guarded([&] { return copy_string(code->code.to_text(), buf, capacity, needed); });
}

void sdsc_code_free(sdsc_code* code) { delete code; }

size_t sdsc_code_length(const sdsc_code* code) { return code ? code->code.length() : 0; }
size_t sdsc_code_dimension(const sdsc_code* code) { return code ? code->code.dimension() : 0; }

sdsc_status sdsc_code_info_set(const sdsc_code* code, uint32_t* out, size_t capacity) {
  SDSC_REQUIRE(code);
  const auto& info = code->code.info_set();
  if (info.empty()) return SDSC_OK;
  SDSC_REQUIRE(out);
  if (capacity < info.size()) return fail(SDSC_E_BUFFER, "information set needs " + std::to_string(info.size()));
  for (size_t i = 0; i < info.size(); ++i) out[i] = uint32_t(info[i]);
  return SDSC_OK;
}

sdsc_status sdsc_encode(const sdsc_code* code, const uint8_t* u, size_t length, uint8_t* x) {
  SDSC_REQUIRE(code);
  SDSC_REQUIRE(u);
  SDSC_REQUIRE(x);
  return guarded([&] {
    sdsc::BitBlock ub(std::vector<uint8_t>(u, u + length), sdsc::BitRole::data);
    const auto xb = sdsc::encode(code->code, ub);
    std::copy(xb.bits().begin(), xb.bits().end(), x);
    return SDSC_OK;
  });
}

void sdsc_decoder_config_init(sdsc_decoder_config* cfg) {
  if (!cfg) return;
  cfg->kind = SDSC_DECODER_SC;
  cfg->symbol_size = 1;
  cfg->f_rule = SDSC_F_EXACT;
  cfg->tie_break = SDSC_TIE_LEXMIN;
}

sdsc_status sdsc_decoder_create(const sdsc_code* code, const sdsc_decoder_config* cfg, sdsc_decoder** out) {
  SDSC_REQUIRE(code);
  SDSC_REQUIRE(cfg);
  SDSC_REQUIRE(out);
  return guarded([&] {
    if (cfg->kind == SDSC_DECODER_ML) {
      *out = new sdsc_decoder{sdsc::MlDecoder(code->code)};
      return SDSC_OK;
    }
    if (cfg->kind != SDSC_DECODER_SC) throw sdsc::ConfigError("unknown decoder kind");
    const sdsc::DecoderConfig c{cfg->symbol_size, rule_of(cfg->f_rule), tie_of(cfg->tie_break)};
    if (c.symbol_size == 1)
      *out = new sdsc_decoder{sdsc::ScBitDecoder(code->code, c)};
    else
      *out = new sdsc_decoder{sdsc::ScSymbolDecoder(code->code, c)};
    return SDSC_OK;
  });
}

void sdsc_decoder_free(sdsc_decoder* decoder) { delete decoder; }

sdsc_status sdsc_decode(sdsc_decoder* decoder, const double* llr, size_t length, uint8_t* u_hat,
                        sdsc_decode_info* info) {
  SDSC_REQUIRE(decoder);
  SDSC_REQUIRE(llr);
  SDSC_REQUIRE(u_hat);
  return guarded([&] {
    sdsc::ChannelObservation obs{std::vector<double>(llr, llr + length)};
    const sdsc::DecodeResult r = std::visit([&](auto& d) { return d.decode(obs); }, decoder->impl);
    std::copy(r.u_hat.bits().begin(), r.u_hat.bits().end(), u_hat);
    if (info) {
      info->tied_symbols = r.tie_symbols.size();
      info->contradiction = r.contradiction ? 1 : 0;
    }
    return SDSC_OK;
  });
}

sdsc_status sdsc_observation_load(const char* path, double** llr, size_t* length) {
  SDSC_REQUIRE(path);
  SDSC_REQUIRE(llr);
  SDSC_REQUIRE(length);
  return guarded([&] { return export_llr(sdsc::load_observation(path), llr, length); });
}

sdsc_status sdsc_observation_parse(const char* text, double** llr, size_t* length) {
  SDSC_REQUIRE(text);
  SDSC_REQUIRE(llr);
  SDSC_REQUIRE(length);
  return guarded([&] { return export_llr(sdsc::parse_observation(text), llr, length); });
}

void sdsc_llr_free(double* llr) { std::free(llr); }

sdsc_status sdsc_patterns_count_dp2(const sdsc_code* code, size_t symbol_size, size_t* dp2, size_t* total) {
  SDSC_REQUIRE(code);
  SDSC_REQUIRE(dp2);
  SDSC_REQUIRE(total);
  return guarded([&] {
    const auto c = sdsc::count_dp2(code->code, symbol_size);
    *dp2 = c.dp2;
    *total = c.total;
    return SDSC_OK;
  });
}

sdsc_status sdsc_pattern_get(const sdsc_code* code, size_t symbol_size, size_t j, char* buf, size_t capacity,
                             int* is_dp2) {
  SDSC_REQUIRE(code);
  SDSC_REQUIRE(buf);
  return guarded([&] {
    const auto pats = sdsc::classify_patterns(code->code, symbol_size);
    if (j >= pats.size()) throw sdsc::ConfigError("symbol index " + std::to_string(j) + " out of range");
    if (is_dp2) *is_dp2 = pats[j].cls == sdsc::PatternClass::dp2;
    return copy_string(pats[j].pattern, buf, capacity, nullptr);
  });
}

sdsc_status sdsc_simulate(const sdsc_sim_plan* plan, sdsc_sim_result** out) {
  SDSC_REQUIRE(plan);
  SDSC_REQUIRE(out);
  if (plan->num_params) SDSC_REQUIRE(plan->params);
  if (plan->num_decoders) SDSC_REQUIRE(plan->decoders);
  return guarded([&] {
    sdsc::SimPlan p;
    p.n = plan->n;
    p.k = plan->k;
    p.construction = kind_of(plan->construction);
    p.design_param = plan->design;
    p.channel = kind_of(plan->channel);
    p.params.assign(plan->params, plan->params + plan->num_params);
    for (size_t d = 0; d < plan->num_decoders; ++d)
      p.decoders.push_back({plan->decoders[d].symbol_size, rule_of(plan->decoders[d].f_rule),
                            tie_of(plan->decoders[d].tie_break)});
    p.max_frames = plan->max_frames;
    p.min_frame_errors = plan->min_frame_errors;
    p.master_seed = plan->seed;
    p.workers = plan->workers;
    *out = new sdsc_sim_result{sdsc::run(p)};
    return SDSC_OK;
  });
}

void sdsc_sim_result_free(sdsc_sim_result* result) { delete result; }

size_t sdsc_sim_result_num_records(const sdsc_sim_result* result) {
  return result ? result->result.records.size() : 0;
}

sdsc_status sdsc_sim_result_record(const sdsc_sim_result* result, size_t index, sdsc_sim_record* out) {
  SDSC_REQUIRE(result);
  SDSC_REQUIRE(out);
  if (index >= result->result.records.size()) return fail(SDSC_E_CONFIG, "record index out of range");
  const auto& r = result->result.records[index];
  *out = {r.channel_param, r.decoder.symbol_size, r.frames, r.bit_errors, r.frame_errors, r.ber, r.fer,
          r.fer_ci_low, r.fer_ci_high, r.tie_frames, r.obs_checksum};
  return SDSC_OK;
}

sdsc_status sdsc_sim_result_csv(const sdsc_sim_result* result, char* buf, size_t capacity, size_t* needed) {
  SDSC_REQUIRE(result);
  return guarded([&] { return copy_string(sdsc::to_csv(result->result), buf, capacity, needed); });
}

sdsc_status sdsc_sim_result_write_csv(const sdsc_sim_result* result, const char* path) {
  SDSC_REQUIRE(result);
  SDSC_REQUIRE(path);
  return guarded([&] {
    sdsc::write_csv_file(path, result->result);
    return SDSC_OK;
  });
}

sdsc_status sdsc_sim_result_report(const sdsc_sim_result* result, char* buf, size_t capacity, size_t* needed,
                                   size_t* violations) {
  SDSC_REQUIRE(result);
  return guarded([&] {
    const auto& decs = result->result.plan.decoders;
    std::string text;
    size_t bad = 0;
    for (const auto& v : sdsc::paired_ordering_report(result->result)) {
      char line[256];
      std::snprintf(line, sizeof line,
                    "param=%g M=%zu vs M=%zu frames=%llu only_M=%llu only_baseline=%llu "
                    "dFER=%.6g sigma=%.6g %s\n",
                    v.channel_param, decs[v.candidate].symbol_size, decs[v.baseline].symbol_size,
                    static_cast<unsigned long long>(v.frames), static_cast<unsigned long long>(v.candidate_only),
                    static_cast<unsigned long long>(v.baseline_only), v.fer_difference, v.sigma,
                    v.consistent ? "consistent" : "VIOLATION");
      text += line;
      bad += !v.consistent;
    }
    if (violations) *violations = bad;
    return copy_string(text, buf, capacity, needed);
  });
}

}  // extern "C"
