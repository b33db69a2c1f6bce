// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdsc/decoder.hpp"
#include "sdsc/sc_engine.hpp"

namespace sdsc::detail {

struct SymbolChoice {
  std::vector<std::uint8_t> bits;
  double log_likelihood = 0.0;
  double gap = 0.0;
  bool tie = false;
  bool feasible = true;  // false when every candidate had probability zero
};

/// Local ML over one symbol: depth-first search of the free bits with the
/// per-bit log-probabilities of the SC recursion as path metric. Leaves the
/// engine with the winning candidate committed.
class SymbolSearch {
 public:
  SymbolSearch(ScEngine& engine, std::span<const std::uint8_t> frozen, TieBreak tie_break);

  SymbolChoice run(std::size_t base, std::size_t size);

 private:
  void explore(std::size_t t, double metric);
  void consider(double metric);
  bool prunable(double metric, std::size_t t) const;
  bool preferred_over_best() const;

  ScEngine& engine_;
  std::span<const std::uint8_t> frozen_;
  TieBreak tie_break_;

  std::size_t base_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_bits_;
  std::size_t cur_weight_ = 0;
  std::size_t best_weight_ = 0;
  double best_ = 0.0;
  double second_ = 0.0;
  bool have_best_ = false;
  bool have_second_ = false;
  bool tie_ = false;
};

}  // namespace sdsc::detail
