// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end; talks to the library only through sdsc.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdsc/sdsc.h"

namespace {

struct CliFailure {
  int exit_code;
};

void check(sdsc_status s) {
  if (s != SDSC_OK) {
    std::cerr << "sdsc: " << sdsc_status_string(s) << ": " << sdsc_last_error() << "\n";
    throw CliFailure{s == SDSC_E_IO ? 3 : 2};
  }
}

struct CodeDeleter {
  void operator()(sdsc_code* c) const { sdsc_code_free(c); }
};
struct DecoderDeleter {
  void operator()(sdsc_decoder* d) const { sdsc_decoder_free(d); }
};
struct ResultDeleter {
  void operator()(sdsc_sim_result* r) const { sdsc_sim_result_free(r); }
};
using CodePtr = std::unique_ptr<sdsc_code, CodeDeleter>;

struct Construction {
  sdsc_channel_kind kind = SDSC_BEC;
  double design = 0.5;  // linear, as the library expects
};

// "bec:EPS" or "awgn:SNR" with the design Es/N0 given in dB.
Construction parse_construction(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--construction", "expected bec:EPS or awgn:SNR");
  const std::string kind = s.substr(0, colon);
  double value = 0.0;
  try {
    value = std::stod(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--construction", "cannot parse value in '" + s + "'");
  }
  if (kind == "bec") return {SDSC_BEC, value};
  if (kind == "awgn") return {SDSC_AWGN, std::pow(10.0, value / 10.0)};
  throw CLI::ValidationError("--construction", "unknown channel '" + kind + "'");
}

sdsc_f_rule parse_rule(const std::string& s) { return s == "minsum" ? SDSC_F_MINSUM : SDSC_F_EXACT; }
sdsc_tie_break parse_tie(const std::string& s) { return s == "zero" ? SDSC_TIE_ZERO : SDSC_TIE_LEXMIN; }

CodePtr load_code(const std::string& path) {
  sdsc_code* c = nullptr;
  check(sdsc_code_load(path.c_str(), &c));
  return CodePtr(c);
}

template <typename T>
std::vector<T> parse_list(const std::string& s, const char* flag) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) throw CLI::ValidationError(flag, "bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar codes with bit- and symbol-decision successive cancellation decoding"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a code and write its description");
  unsigned c_n = 5;
  std::size_t c_k = 16;
  std::string c_construction = "bec:0.5";
  std::string c_out;
  construct->add_option("--n", c_n, "code exponent, N = 2^n")->required();
  construct->add_option("--k", c_k, "information length")->required();
  construct->add_option("--construction", c_construction, "bec:EPS or awgn:SNR_dB")->capture_default_str();
  construct->add_option("--out", c_out, "output file (default stdout)");

  // decode
  auto* decode = app.add_subcommand("decode", "decode one observation");
  std::string d_code, d_obs, d_rule = "exact", d_tie = "lexmin";
  std::size_t d_m = 1;
  bool d_ml = false;
  decode->add_option("--code", d_code, "code description file")->required();
  decode->add_option("--obs", d_obs, "observation file, one LLR per line")->required();
  decode->add_option("--symbol-size", d_m, "symbol size M (1 = bit decisions)")->capture_default_str();
  decode->add_option("--f-rule", d_rule, "exact|minsum")
      ->check(CLI::IsMember({"exact", "minsum"}))
      ->capture_default_str();
  decode->add_option("--tie-break", d_tie, "lexmin|zero")
      ->check(CLI::IsMember({"lexmin", "zero"}))
      ->capture_default_str();
  decode->add_flag("--ml", d_ml, "exhaustive ML instead of SC");

  // patterns
  auto* patterns = app.add_subcommand("patterns", "print per-symbol data patterns");
  std::string p_code;
  std::size_t p_m = 8;
  patterns->add_option("--code", p_code, "code description file")->required();
  patterns->add_option("--symbol-size", p_m, "symbol size M")->required();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo FER/BER sweep");
  unsigned s_n = 5;
  std::size_t s_k = 16;
  std::string s_construction = "bec:0.5", s_channel = "bec", s_params = "0.3,0.4,0.5", s_sizes = "1,2,4,8";
  std::string s_rule = "exact", s_tie = "lexmin", s_out;
  std::uint64_t s_frames = 10000, s_min_errors = 0, s_seed = 1;
  unsigned s_workers = 1;
  bool s_report = false;
  simulate->add_option("--n", s_n, "code exponent")->capture_default_str();
  simulate->add_option("--k", s_k, "information length")->capture_default_str();
  simulate->add_option("--construction", s_construction, "bec:EPS or awgn:SNR_dB")->capture_default_str();
  simulate->add_option("--channel", s_channel, "bec|awgn")
      ->check(CLI::IsMember({"bec", "awgn"}))
      ->capture_default_str();
  simulate->add_option("--params", s_params, "erasure probabilities or Eb/N0 dB, comma-separated")
      ->capture_default_str();
  simulate->add_option("--symbol-sizes", s_sizes, "decoder symbol sizes, comma-separated")->capture_default_str();
  simulate->add_option("--f-rule", s_rule, "exact|minsum")
      ->check(CLI::IsMember({"exact", "minsum"}))
      ->capture_default_str();
  simulate->add_option("--tie-break", s_tie, "lexmin|zero")
      ->check(CLI::IsMember({"lexmin", "zero"}))
      ->capture_default_str();
  simulate->add_option("--frames", s_frames, "maximum frames per parameter")->capture_default_str();
  simulate->add_option("--min-frame-errors", s_min_errors, "stop once the worst decoder has this many (0 = off)")
      ->capture_default_str();
  simulate->add_option("--seed", s_seed, "master seed")->capture_default_str();
  simulate->add_option("--workers", s_workers, "worker threads (0 = all cores)")->capture_default_str();
  simulate->add_option("--out", s_out, "CSV output file (default stdout)");
  simulate->add_flag("--report", s_report, "print paired ordering verdicts to stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      const Construction c = parse_construction(c_construction);
      sdsc_code* raw = nullptr;
      check(sdsc_code_construct(c_n, c_k, c.kind, c.design, &raw));
      CodePtr code(raw);
      if (c_out.empty()) {
        size_t need = 0;
        check(sdsc_code_text(code.get(), nullptr, 0, &need));
        std::string text(need, '\0');
        check(sdsc_code_text(code.get(), text.data(), text.size(), &need));
        std::cout << text.c_str();
      } else {
        check(sdsc_code_save(code.get(), c_out.c_str()));
      }
    } else if (*decode) {
      CodePtr code = load_code(d_code);
      double* llr = nullptr;
      size_t len = 0;
      check(sdsc_observation_load(d_obs.c_str(), &llr, &len));
      std::unique_ptr<double, void (*)(double*)> llr_guard(llr, sdsc_llr_free);

      sdsc_decoder_config cfg;
      sdsc_decoder_config_init(&cfg);
      cfg.kind = d_ml ? SDSC_DECODER_ML : SDSC_DECODER_SC;
      cfg.symbol_size = d_m;
      cfg.f_rule = parse_rule(d_rule);
      cfg.tie_break = parse_tie(d_tie);
      sdsc_decoder* draw = nullptr;
      check(sdsc_decoder_create(code.get(), &cfg, &draw));
      std::unique_ptr<sdsc_decoder, DecoderDeleter> dec(draw);

      std::vector<uint8_t> u(sdsc_code_length(code.get()));
      sdsc_decode_info info{};
      check(sdsc_decode(dec.get(), llr, len, u.data(), &info));
      std::string bits(u.size(), '0');
      for (size_t i = 0; i < u.size(); ++i)
        if (u[i]) bits[i] = '1';
      std::cout << bits << "\n";
      if (info.tied_symbols) std::cerr << "ties in " << info.tied_symbols << " symbol(s)\n";
      if (info.contradiction) std::cerr << "observation contradicted the decoded prefix\n";
    } else if (*patterns) {
      CodePtr code = load_code(p_code);
      size_t dp2 = 0, total = 0;
      check(sdsc_patterns_count_dp2(code.get(), p_m, &dp2, &total));
      std::vector<char> buf(p_m + 1);
      for (size_t j = 0; j < total; ++j) {
        int is_dp2 = 0;
        check(sdsc_pattern_get(code.get(), p_m, j, buf.data(), buf.size(), &is_dp2));
        std::cout << j << ' ' << buf.data() << ' ' << (is_dp2 ? "DP-II" : "DP-I") << '\n';
      }
      std::cout << "DP-II: " << dp2 << " of " << total << '\n';
    } else if (*simulate) {
      const Construction c = parse_construction(s_construction);
      const auto params = parse_list<double>(s_params, "--params");
      const auto sizes = parse_list<std::size_t>(s_sizes, "--symbol-sizes");
      std::vector<sdsc_sim_decoder> decs;
      for (std::size_t m : sizes) decs.push_back({m, parse_rule(s_rule), parse_tie(s_tie)});

      sdsc_sim_plan plan{};
      plan.n = s_n;
      plan.k = s_k;
      plan.construction = c.kind;
      plan.design = c.design;
      plan.channel = s_channel == "awgn" ? SDSC_AWGN : SDSC_BEC;
      plan.params = params.data();
      plan.num_params = params.size();
      plan.decoders = decs.data();
      plan.num_decoders = decs.size();
      plan.max_frames = s_frames;
      plan.min_frame_errors = s_min_errors;
      plan.seed = s_seed;
      plan.workers = s_workers;

      sdsc_sim_result* rraw = nullptr;
      check(sdsc_simulate(&plan, &rraw));
      std::unique_ptr<sdsc_sim_result, ResultDeleter> result(rraw);
      if (s_out.empty()) {
        size_t need = 0;
        check(sdsc_sim_result_csv(result.get(), nullptr, 0, &need));
        std::string text(need, '\0');
        check(sdsc_sim_result_csv(result.get(), text.data(), text.size(), &need));
        std::cout << text.c_str();
      } else {
        check(sdsc_sim_result_write_csv(result.get(), s_out.c_str()));
      }
      if (s_report) {
        size_t need = 0, violations = 0;
        check(sdsc_sim_result_report(result.get(), nullptr, 0, &need, nullptr));
        std::string text(need, '\0');
        check(sdsc_sim_result_report(result.get(), text.data(), text.size(), &need, &violations));
        std::cerr << text.c_str() << "violations: " << violations << '\n';
      }
    }
  } catch (const CliFailure& f) {
    return f.exit_code;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  return 0;
}
