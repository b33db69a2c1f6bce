// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sdsc/error.hpp"
#include "sdsc/sim.hpp"

using namespace sdsc;

namespace {

SimPlan small_plan() {
  SimPlan p;
  p.n = 5;
  p.k = 16;
  p.params = {0.3, 0.45};
  p.decoders = {{1}, {2}, {4}, {8}};
  p.max_frames = 3000;
  p.master_seed = 21;
  return p;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("single noiseless frame") {
  SimPlan p = small_plan();
  p.params = {0.0};
  p.max_frames = 1;
  const auto r = run(p);
  REQUIRE(r.records.size() == 4);
  for (const auto& rec : r.records) {
    CHECK(rec.frames == 1);
    CHECK(rec.frame_errors == 0);
    CHECK(rec.bit_errors == 0);
    CHECK(rec.fer == 0.0);
  }
}

TEST_CASE("output is independent of the worker count") {
  SimPlan p = small_plan();
  p.workers = 1;
  const auto a = to_csv(run(p));
  p.workers = 3;
  const auto b = to_csv(run(p));
  p.workers = 8;
  p.max_frames = 3000;
  const auto c = to_csv(run(p));
  CHECK(a == b);
  CHECK(a == c);
  p.master_seed = 22;
  CHECK(to_csv(run(p)) != a);
}

TEST_CASE("AWGN runs are deterministic too") {
  SimPlan p = small_plan();
  p.channel = ChannelKind::awgn;
  p.params = {1.0, 2.0};
  p.max_frames = 1500;
  p.workers = 1;
  const auto a = to_csv(run(p));
  p.workers = 4;
  CHECK(to_csv(run(p)) == a);
}

TEST_CASE("records and cells") {
  const auto r = run(small_plan());
  REQUIRE(r.records.size() == 8);
  REQUIRE(r.cells.size() == 2);
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    const auto& cell = r.cells[i / 4];
    CHECK(rec.channel_param == cell.channel_param);
    CHECK(rec.decoder.symbol_size == small_plan().decoders[i % 4].symbol_size);
    CHECK(rec.frames == 3000);
    std::uint64_t fe = 0;
    for (auto e : cell.frame_errors[i % 4]) fe += e;
    CHECK(fe == rec.frame_errors);
    CHECK(rec.fer == doctest::Approx(double(fe) / 3000));
    CHECK(rec.bit_errors >= rec.frame_errors);
    CHECK(rec.ber == doctest::Approx(double(rec.bit_errors) / (16.0 * 3000)));
    CHECK(rec.fer_ci_low <= rec.fer);
    CHECK(rec.fer <= rec.fer_ci_high);
    CHECK(rec.obs_checksum == r.records[(i / 4) * 4].obs_checksum);
  }
  CHECK(r.records[0].obs_checksum != r.records[4].obs_checksum);
  // Higher erasure probability, more errors.
  CHECK(r.records[4].frame_errors > r.records[0].frame_errors);
}

TEST_CASE("all-frozen code never errs") {
  SimPlan p = small_plan();
  p.k = 0;
  p.params = {0.2, 0.9};
  p.max_frames = 500;
  for (const auto& rec : run(p).records) {
    CHECK(rec.frame_errors == 0);
    CHECK(rec.ber == 0.0);
  }
}

TEST_CASE("early stop follows the decoder with the most errors") {
  SimPlan p = small_plan();
  p.params = {0.5};
  p.max_frames = 100000;
  p.min_frame_errors = 50;
  const auto r = run(p);
  std::uint64_t worst = 0;
  for (const auto& rec : r.records) {
    worst = std::max(worst, rec.frame_errors);
    CHECK(rec.frames == r.records[0].frames);
  }
  CHECK(worst == 50);
  CHECK(r.records[0].frames < 100000);
  for (const auto& row : r.cells[0].frame_errors) CHECK(row.size() == r.records[0].frames);
  // The stopping frame itself is an error of the worst decoder.
  bool last_error = false;
  for (const auto& row : r.cells[0].frame_errors) last_error |= row.back() != 0;
  CHECK(last_error);
}

TEST_CASE("Wilson interval") {
  const auto zero = wilson_interval(0, 100);
  CHECK(zero.low == 0.0);
  CHECK(zero.high == doctest::Approx(0.036994).epsilon(1e-4));
  const auto half = wilson_interval(50, 100);
  CHECK(half.low == doctest::Approx(0.403832).epsilon(1e-5));
  CHECK(half.high == doctest::Approx(0.596168).epsilon(1e-5));
  const auto all = wilson_interval(10, 10);
  CHECK(all.high == 1.0);
  CHECK(all.low < 1.0);
  const auto none = wilson_interval(0, 0);
  CHECK(none.low == 0.0);
  CHECK(none.high == 1.0);
}

TEST_CASE("CSV layout") {
  CHECK(csv_header() ==
        "channel,param,decoder_M,f_rule,tie_break,frames,bit_errors,frame_errors,ber,fer,fer_ci_low,fer_ci_high,"
        "tie_frames,obs_checksum");
  SimPlan p = small_plan();
  p.decoders = {{1, FRule::exact, TieBreak::zero}, {8, FRule::min_sum, TieBreak::lexicographic_min}};
  p.max_frames = 200;
  const auto r = run(p);
  const auto rows = lines(to_csv(r));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == csv_header());
  CHECK(rows[1].rfind("bec,0.3,1,exact,zero,200,", 0) == 0);
  CHECK(rows[2].rfind("bec,0.3,8,minsum,lexmin,200,", 0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::count(rows[i].begin(), rows[i].end(), ',') == 13);
    CHECK(rows[i].size() - rows[i].rfind(',') - 1 == 16);
  }
  const std::string path = "sim_test_output.csv";
  write_csv_file(path, r);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == to_csv(r));
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_csv_file("/nonexistent/dir/out.csv", r), IoError);
}

TEST_CASE("paired comparisons") {
  const auto r = run(small_plan());
  SUBCASE("self comparison") {
    const auto v = paired_compare(r.cells[0], 2, 2);
    CHECK(v.candidate_only == 0);
    CHECK(v.baseline_only == 0);
    CHECK(v.consistent);
  }
  SUBCASE("report pairs") {
    const auto report = paired_ordering_report(r);
    // (2,1), (4,2), (8,4), (4,1), (8,1) at two parameters.
    CHECK(report.size() == 10);
    for (const auto& v : report) {
      CHECK(v.frames == 3000);
      CHECK(v.fer_difference == doctest::Approx((double(v.candidate_only) - double(v.baseline_only)) / 3000));
      CHECK(v.consistent);
    }
  }
  SUBCASE("mismatched frame sets") {
    CellFrames bad;
    bad.frame_errors = {{0, 1, 0}, {1, 0}};
    CHECK_THROWS_AS(paired_compare(bad, 0, 1), InternalError);
    CHECK_THROWS_AS(paired_compare(bad, 0, 5), InternalError);
  }
  SUBCASE("violation is reported") {
    CellFrames cell;
    cell.frame_errors = {std::vector<std::uint8_t>(100, 1), std::vector<std::uint8_t>(100, 0)};
    const auto v = paired_compare(cell, 0, 1);
    CHECK(v.candidate_only == 100);
    CHECK_FALSE(v.consistent);
  }
}

TEST_CASE("full-length symbols beat bit decisions on (16,8) in aggregate") {
  SimPlan p;
  p.n = 4;
  p.k = 8;
  p.params = {0.4};
  p.decoders = {{1}, {16}};
  p.max_frames = 100000;
  p.workers = 0;
  const auto r = run(p);
  const auto v = paired_compare(r.cells[0], 1, 0);
  CHECK(v.consistent);
  CHECK(r.records[1].frame_errors < r.records[0].frame_errors);
}

TEST_CASE("plan validation") {
  SimPlan p = small_plan();
  p.params = {};
  CHECK_THROWS_AS(run(p), ConfigError);
  p = small_plan();
  p.decoders = {};
  CHECK_THROWS_AS(run(p), ConfigError);
  p = small_plan();
  p.decoders = {{3}};
  CHECK_THROWS_AS(run(p), ConfigError);
  p = small_plan();
  p.max_frames = 0;
  CHECK_THROWS_AS(run(p), ConfigError);
  p = small_plan();
  p.params = {1.2};
  CHECK_THROWS_AS(run(p), ParameterError);
  p = small_plan();
  p.k = 40;
  CHECK_THROWS_AS(run(p), ParameterError);
  CHECK_THROWS_AS(run(small_plan(), PolarCode::construct(5, 15, ChannelKind::bec, 0.5)), ConfigError);
}

TEST_CASE("string conversions") {
  CHECK(parse_f_rule("exact") == FRule::exact);
  CHECK(parse_f_rule("minsum") == FRule::min_sum);
  CHECK(parse_tie_break("zero") == TieBreak::zero);
  CHECK(parse_tie_break("lexmin") == TieBreak::lexicographic_min);
  CHECK(parse_channel_kind("awgn") == ChannelKind::awgn);
  CHECK(to_string(ChannelKind::bec) == "bec");
  CHECK_THROWS_AS(parse_f_rule("sum"), ConfigError);
  CHECK_THROWS_AS(parse_tie_break(""), ConfigError);
  CHECK_THROWS_AS(parse_channel_kind("bsc"), ConfigError);
}
