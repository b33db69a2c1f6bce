// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "sdsc/patterns.hpp"

#include "sdsc/error.hpp"

namespace sdsc {

const char* to_string(PatternClass c) { return c == PatternClass::dp1 ? "DP-I" : "DP-II"; }

const char* to_string(NodeRate r) {
  switch (r) {
    case NodeRate::rate0: return "rate-0";
    case NodeRate::rate1: return "rate-1";
    case NodeRate::rate_r: return "rate-R";
  }
  return "?";
}

PatternClass classify_pattern(std::string_view pattern) {
  const auto first_d = pattern.find('D');
  if (first_d == std::string_view::npos) return PatternClass::dp1;
  return pattern.find('F', first_d) == std::string_view::npos ? PatternClass::dp1 : PatternClass::dp2;
}

std::vector<SymbolPattern> classify_patterns(const PolarCode& code, std::size_t symbol_size) {
  if (symbol_size == 0 || code.length() % symbol_size != 0)
    throw ConfigError("symbol size " + std::to_string(symbol_size) + " does not divide N=" +
                      std::to_string(code.length()));
  const auto frozen = code.frozen_mask();
  std::vector<SymbolPattern> out(code.length() / symbol_size);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j].index = j;
    out[j].pattern.resize(symbol_size);
    for (std::size_t t = 0; t < symbol_size; ++t)
      out[j].pattern[t] = frozen[j * symbol_size + t] ? 'F' : 'D';
    out[j].cls = classify_pattern(out[j].pattern);
  }
  return out;
}

Dp2Count count_dp2(const PolarCode& code, std::size_t symbol_size) {
  Dp2Count c;
  for (const auto& p : classify_patterns(code, symbol_size)) {
    ++c.total;
    c.dp2 += p.cls == PatternClass::dp2;
  }
  return c;
}

std::vector<TreeNodeClass> classify_tree(const PolarCode& code) {
  const unsigned n = code.n();
  const auto frozen = code.frozen_mask();
  // Bottom-up per level, then emitted root first.
  std::vector<std::vector<NodeRate>> levels(n + 1);
  levels[n].resize(code.length());
  for (std::size_t p = 0; p < code.length(); ++p) levels[n][p] = frozen[p] ? NodeRate::rate0 : NodeRate::rate1;
  for (unsigned l = n; l-- > 0;) {
    const auto& below = levels[l + 1];
    levels[l].resize(below.size() / 2);
    for (std::size_t p = 0; p < levels[l].size(); ++p) {
      const NodeRate a = below[2 * p], b = below[2 * p + 1];
      levels[l][p] = a == b && a != NodeRate::rate_r ? a : NodeRate::rate_r;
    }
  }
  std::vector<TreeNodeClass> out;
  out.reserve(2 * code.length() - 1);
  for (unsigned l = 0; l <= n; ++l)
    for (std::size_t p = 0; p < levels[l].size(); ++p) out.push_back({l, p, levels[l][p]});
  return out;
}

}  // namespace sdsc
