// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdsc/polar_code.hpp"

namespace sdsc {

/// DP-I: no 'D', or no 'F' after the first 'D'. Everything else is DP-II,
/// i.e. a symbol with a frozen bit after one of its information bits.
enum class PatternClass { dp1, dp2 };

const char* to_string(PatternClass c);

struct SymbolPattern {
  std::size_t index = 0;  // 0-based symbol index j
  std::string pattern;    // 'D'/'F' for u_{jM+1}..u_{jM+M}
  PatternClass cls = PatternClass::dp1;
};

PatternClass classify_pattern(std::string_view pattern);

std::vector<SymbolPattern> classify_patterns(const PolarCode& code, std::size_t symbol_size);

struct Dp2Count {
  std::size_t dp2 = 0;
  std::size_t total = 0;
};

Dp2Count count_dp2(const PolarCode& code, std::size_t symbol_size);

enum class NodeRate { rate0, rate1, rate_r };

const char* to_string(NodeRate r);

struct TreeNodeClass {
  unsigned level = 0;        // 0 = root, n = leaves
  std::size_t position = 0;  // left to right within the level
  NodeRate rate = NodeRate::rate_r;
};

/// All 2N-1 nodes of the decoding tree, root first, level by level.
std::vector<TreeNodeClass> classify_tree(const PolarCode& code);

}  // namespace sdsc
