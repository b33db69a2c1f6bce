// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sdsc {

enum class FRule { exact, min_sum };

namespace llr {

/// Check-node combine: 2 atanh(tanh(a/2) tanh(b/2)) for the exact rule,
/// sign(a) sign(b) min(|a|,|b|) for min-sum. Infinite inputs are exact.
double f_exact(double a, double b);
double f_min_sum(double a, double b);

/// log P(u = bit | L) for an LLR L = log(P(0)/P(1)); 0 for a certain bit,
/// -inf for an impossible one.
double bit_log_probability(double l, std::uint8_t bit);

}  // namespace llr

/// Lazy successive-cancellation state over the tree of x = u B_N F^{(x)n}.
///
/// Every tree node owns a slice of the level arrays, so revisiting a leaf
/// after exploring other branches only recomputes what the new prefix
/// changes. leaf_llr(i) is valid once leaves 0..i-1 have been committed.
class ScEngine {
 public:
  ScEngine(unsigned n, FRule rule);

  unsigned n() const noexcept { return n_; }
  std::size_t length() const noexcept { return std::size_t{1} << n_; }

  /// Loads codeword LLRs (position 0 = x_1) and clears the contradiction flag.
  void load(std::span<const double> codeword_llr);

  /// Decision LLR of u_{i+1} given the committed prefix.
  double leaf_llr(std::size_t i);

  /// Fixes u_{i+1} and propagates partial sums to completed ancestors.
  void commit(std::size_t i, std::uint8_t bit);

  /// Set when a g-step met opposite certainties (+inf against -inf). That
  /// only happens after the prefix has become inconsistent with the
  /// observation, e.g. a frozen bit contradicted by an earlier tie guess;
  /// the step then yields an erasure (LLR 0).
  bool contradiction() const noexcept { return contradiction_; }
  void set_contradiction(bool value) noexcept { contradiction_ = value; }

 private:
  double f(double a, double b) const;
  double g(double a, double b, std::uint8_t u);

  unsigned n_;
  FRule rule_;
  bool contradiction_ = false;
  // alpha_[l * N + p]: LLR at level l (node size 2^l), position p.
  std::vector<double> alpha_;
  std::vector<std::uint8_t> beta_;
};

}  // namespace sdsc
