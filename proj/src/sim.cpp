// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "sdsc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>
#include <variant>

#include "sdsc/channel.hpp"
#include "sdsc/error.hpp"

namespace sdsc {

namespace {

constexpr std::uint64_t kChunk = 1024;
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) {
    h ^= (v >> (8 * b)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t observation_hash(const ChannelObservation& obs) {
  std::uint64_t h = kFnvOffset;
  for (double v : obs.llr) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    h = fnv_mix(h, bits);
  }
  return h;
}

using AnyDecoder = std::variant<ScBitDecoder, ScSymbolDecoder>;

AnyDecoder make_decoder(const PolarCode& code, const DecoderSpec& d) {
  const DecoderConfig cfg{d.symbol_size, d.f_rule, d.tie_break};
  if (d.symbol_size == 1) return ScBitDecoder(code, cfg);
  return ScSymbolDecoder(code, cfg);
}

struct FrameOutcome {
  std::vector<std::uint8_t> frame_error;
  std::vector<std::uint32_t> bit_errors;
  std::vector<std::uint8_t> tied;
  std::uint64_t obs_hash = 0;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string to_string(FRule r) { return r == FRule::exact ? "exact" : "minsum"; }
std::string to_string(TieBreak t) { return t == TieBreak::zero ? "zero" : "lexmin"; }
std::string to_string(ChannelKind k) { return k == ChannelKind::bec ? "bec" : "awgn"; }

FRule parse_f_rule(const std::string& s) {
  if (s == "exact") return FRule::exact;
  if (s == "minsum" || s == "min-sum") return FRule::min_sum;
  throw ConfigError("unknown f-rule '" + s + "'");
}

TieBreak parse_tie_break(const std::string& s) {
  if (s == "zero") return TieBreak::zero;
  if (s == "lexmin" || s == "lexicographic-min") return TieBreak::lexicographic_min;
  throw ConfigError("unknown tie-break '" + s + "'");
}

ChannelKind parse_channel_kind(const std::string& s) {
  if (s == "bec") return ChannelKind::bec;
  if (s == "awgn") return ChannelKind::awgn;
  throw ConfigError("unknown channel '" + s + "'");
}

void validate(const SimPlan& plan) {
  if (plan.params.empty()) throw ConfigError("parameter grid is empty");
  if (plan.decoders.empty()) throw ConfigError("decoder list is empty");
  if (plan.max_frames < 1) throw ConfigError("max_frames must be at least 1");
  const std::size_t len = std::size_t{1} << plan.n;
  for (const auto& d : plan.decoders)
    if (d.symbol_size == 0 || len % d.symbol_size != 0)
      throw ConfigError("symbol size " + std::to_string(d.symbol_size) + " does not divide N=" +
                        std::to_string(len));
  for (double p : plan.params) {
    ChannelSpec spec{plan.channel, p, plan.k ? double(plan.k) / double(len) : 0.0};
    spec.validate();
  }
}

WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = double(trials);
  const double p = double(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // Clamp the ends exactly; rounding otherwise leaves residue like 1e-18.
  const double low = errors == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = errors == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

SimResult run(const SimPlan& plan) {
  validate(plan);
  return run(plan, PolarCode::construct(plan.n, plan.k, plan.construction, plan.design_param));
}

SimResult run(const SimPlan& plan, const PolarCode& code) {
  validate(plan);
  if (code.length() != (std::size_t{1} << plan.n) || code.dimension() != plan.k)
    throw ConfigError("code does not match the plan's (N, K)");
  const std::size_t nd = plan.decoders.size();
  unsigned workers = plan.workers ? plan.workers : std::max(1u, std::thread::hardware_concurrency());

  SimResult result;
  result.plan = plan;

  for (std::size_t pi = 0; pi < plan.params.size(); ++pi) {
    const ChannelSpec spec{plan.channel, plan.params[pi], code.rate()};

    CellFrames cell;
    cell.channel_param = spec.param;
    cell.frame_errors.assign(nd, {});
    std::vector<SimRecord> recs(nd);
    std::uint64_t checksum = kFnvOffset;
    std::uint64_t frames_run = 0;
    bool stop = false;

    while (!stop && frames_run < plan.max_frames) {
      const std::uint64_t begin = frames_run;
      const std::uint64_t count = std::min<std::uint64_t>(kChunk, plan.max_frames - begin);
      std::vector<FrameOutcome> outcomes(count);
      std::vector<std::exception_ptr> errors(workers);

      auto work = [&](unsigned w) {
        try {
          std::vector<AnyDecoder> decoders;
          decoders.reserve(nd);
          for (const auto& d : plan.decoders) decoders.push_back(make_decoder(code, d));
          for (std::uint64_t f = w; f < count; f += workers) {
            const Frame fr = make_frame(code, spec, derive_seed(plan.master_seed, pi, begin + f));
            FrameOutcome& out = outcomes[f];
            out.obs_hash = observation_hash(fr.obs);
            out.frame_error.resize(nd);
            out.bit_errors.resize(nd);
            out.tied.resize(nd);
            for (std::size_t d = 0; d < nd; ++d) {
              const DecodeResult r = std::visit([&](auto& dec) { return dec.decode(fr.obs); }, decoders[d]);
              std::uint32_t be = 0;
              for (std::size_t a : code.info_set()) be += r.u_hat[a - 1] != fr.u[a - 1];
              out.bit_errors[d] = be;
              out.frame_error[d] = be != 0;
              out.tied[d] = r.tied();
            }
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      };

      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
      }
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);

      // Sequential fold keeps early stopping and the checksum schedule-free.
      for (std::uint64_t f = 0; f < count && !stop; ++f) {
        const FrameOutcome& out = outcomes[f];
        checksum = fnv_mix(checksum, out.obs_hash);
        std::uint64_t worst = 0;
        for (std::size_t d = 0; d < nd; ++d) {
          recs[d].frame_errors += out.frame_error[d];
          recs[d].bit_errors += out.bit_errors[d];
          recs[d].tie_frames += out.tied[d];
          cell.frame_errors[d].push_back(out.frame_error[d]);
          worst = std::max(worst, recs[d].frame_errors);
        }
        ++frames_run;
        if (plan.min_frame_errors && worst >= plan.min_frame_errors) stop = true;
      }
    }

    for (std::size_t d = 0; d < nd; ++d) {
      SimRecord& r = recs[d];
      r.channel = plan.channel;
      r.channel_param = spec.param;
      r.decoder = plan.decoders[d];
      r.frames = frames_run;
      r.fer = double(r.frame_errors) / double(frames_run);
      r.ber = code.dimension() ? double(r.bit_errors) / (double(code.dimension()) * double(frames_run)) : 0.0;
      const auto ci = wilson_interval(r.frame_errors, frames_run);
      r.fer_ci_low = ci.low;
      r.fer_ci_high = ci.high;
      r.obs_checksum = checksum;
      result.records.push_back(r);
    }
    result.cells.push_back(std::move(cell));
  }
  return result;
}

std::string csv_header() {
  return "channel,param,decoder_M,f_rule,tie_break,frames,bit_errors,frame_errors,ber,fer,fer_ci_low,"
         "fer_ci_high,tie_frames,obs_checksum";
}

void write_csv(std::ostream& out, const SimResult& result) {
  out << csv_header() << '\n';
  for (const auto& r : result.records) {
    char checksum[17];
    std::snprintf(checksum, sizeof checksum, "%016llx", static_cast<unsigned long long>(r.obs_checksum));
    out << to_string(r.channel) << ',' << format_double(r.channel_param) << ',' << r.decoder.symbol_size << ','
        << to_string(r.decoder.f_rule) << ',' << to_string(r.decoder.tie_break) << ',' << r.frames << ','
        << r.bit_errors << ',' << r.frame_errors << ',' << format_double(r.ber) << ',' << format_double(r.fer)
        << ',' << format_double(r.fer_ci_low) << ',' << format_double(r.fer_ci_high) << ',' << r.tie_frames
        << ',' << checksum << '\n';
  }
}

std::string to_csv(const SimResult& result) {
  std::ostringstream ss;
  write_csv(ss, result);
  return ss.str();
}

void write_csv_file(const std::string& path, const SimResult& result) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  write_csv(f, result);
  if (!f) throw IoError("write failed for '" + path + "'");
}

OrderingVerdict paired_compare(const CellFrames& cell, std::size_t candidate, std::size_t baseline,
                               double sigmas) {
  if (candidate >= cell.frame_errors.size() || baseline >= cell.frame_errors.size())
    throw InternalError("decoder index out of range in paired comparison");
  const auto& a = cell.frame_errors[candidate];
  const auto& b = cell.frame_errors[baseline];
  if (a.size() != b.size()) throw InternalError("paired comparison over mismatched frame sets");

  OrderingVerdict v;
  v.channel_param = cell.channel_param;
  v.candidate = candidate;
  v.baseline = baseline;
  v.frames = a.size();
  for (std::size_t f = 0; f < a.size(); ++f) {
    v.candidate_only += a[f] && !b[f];
    v.baseline_only += b[f] && !a[f];
  }
  if (v.frames) {
    const double fr = double(v.frames);
    v.fer_difference = (double(v.candidate_only) - double(v.baseline_only)) / fr;
    v.sigma = std::sqrt(double(v.candidate_only + v.baseline_only)) / fr;
  }
  v.consistent = v.fer_difference <= sigmas * v.sigma;
  return v;
}

std::vector<OrderingVerdict> paired_ordering_report(const SimResult& result, double sigmas) {
  const auto& decs = result.plan.decoders;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t c = 0; c < decs.size(); ++c)
    for (std::size_t b = 0; b < decs.size(); ++b) {
      if (decs[c].f_rule != decs[b].f_rule || decs[c].tie_break != decs[b].tie_break) continue;
      const std::size_t mc = decs[c].symbol_size, mb = decs[b].symbol_size;
      if (mc == 2 * mb || (mb == 1 && mc > 2)) pairs.emplace_back(c, b);
    }
  std::vector<OrderingVerdict> out;
  for (const auto& cell : result.cells)
    for (const auto& [c, b] : pairs) out.push_back(paired_compare(cell, c, b, sigmas));
  return out;
}

}  // namespace sdsc
