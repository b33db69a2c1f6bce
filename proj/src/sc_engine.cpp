// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "sdsc/sc_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "sdsc/error.hpp"
#include "sdsc/polar_code.hpp"

namespace sdsc {

namespace llr {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double f_exact(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double sign = (a > 0) == (b > 0) ? 1.0 : -1.0;
  const double lo = std::min(std::fabs(a), std::fabs(b));
  const double hi = std::max(std::fabs(a), std::fabs(b));
  if (std::isinf(hi)) return sign * lo;
  if (hi < 1.0) return 2.0 * std::atanh(std::tanh(0.5 * a) * std::tanh(0.5 * b));
  // lo + log((1 + e^-(hi+lo)) / (1 + e^-(hi-lo))), numerator difference
  // rewritten as -2 e^-hi sinh(lo) to keep relative accuracy for small lo.
  const double diff = lo < 1.0 ? 2.0 * std::exp(-hi) * std::sinh(lo) : std::exp(lo - hi) - std::exp(-lo - hi);
  const double t = -diff / (1.0 + std::exp(lo - hi));
  return sign * (lo + std::log1p(t));
}

double f_min_sum(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double sign = (a > 0) == (b > 0) ? 1.0 : -1.0;
  return sign * std::min(std::fabs(a), std::fabs(b));
}

double bit_log_probability(double l, std::uint8_t bit) {
  const double s = bit ? -l : l;
  if (s == kInf) return 0.0;
  if (s == -kInf) return -kInf;
  return -(std::max(-s, 0.0) + std::log1p(std::exp(-std::fabs(s))));
}

}  // namespace llr

ScEngine::ScEngine(unsigned n, FRule rule)
    : n_(n), rule_(rule), alpha_((n + 1) * (std::size_t{1} << n)), beta_((n + 1) * (std::size_t{1} << n)) {}

double ScEngine::f(double a, double b) const {
  return rule_ == FRule::exact ? llr::f_exact(a, b) : llr::f_min_sum(a, b);
}

double ScEngine::g(double a, double b, std::uint8_t u) {
  const double sa = u ? -a : a;
  if (std::isinf(sa) && std::isinf(b) && (sa > 0) != (b > 0)) {
    contradiction_ = true;
    return 0.0;
  }
  return b + sa;
}

void ScEngine::load(std::span<const double> codeword_llr) {
  const std::size_t len = length();
  if (codeword_llr.size() != len)
    throw InputError("observation has length " + std::to_string(codeword_llr.size()) + ", expected " +
                     std::to_string(len));
  // x = (u F^{(x)n}) B_N, so w_j = x_{br(j)} is the natural-order codeword.
  double* top = alpha_.data() + std::size_t(n_) * len;
  for (std::size_t j = 0; j < len; ++j) {
    const double v = codeword_llr[bit_reverse(j, n_)];
    if (std::isnan(v)) throw InputError("observation contains NaN");
    top[j] = v;
  }
  contradiction_ = false;
}

double ScEngine::leaf_llr(std::size_t i) {
  const std::size_t len = length();
  // Level from which leaf i starts a fresh node: the right child of the
  // lowest common ancestor with leaf i-1, or the root for leaf 0.
  int level = n_;
  if (i != 0) {
    const unsigned d = unsigned(std::countr_zero(i));
    const std::size_t half = std::size_t{1} << d;
    const std::size_t start = i - half;  // LCA start
    const double* parent = alpha_.data() + std::size_t(d + 1) * len;
    double* child = alpha_.data() + std::size_t(d) * len;
    const std::uint8_t* left_beta = beta_.data() + std::size_t(d) * len;
    for (std::size_t k = 0; k < half; ++k)
      child[start + half + k] = g(parent[start + k], parent[start + half + k], left_beta[start + k]);
    level = int(d);
  }
  for (int l = level - 1; l >= 0; --l) {
    const std::size_t half = std::size_t{1} << l;
    const double* parent = alpha_.data() + std::size_t(l + 1) * len;
    double* child = alpha_.data() + std::size_t(l) * len;
    for (std::size_t k = 0; k < half; ++k) child[i + k] = f(parent[i + k], parent[i + half + k]);
  }
  return alpha_[i];
}

void ScEngine::commit(std::size_t i, std::uint8_t bit) {
  const std::size_t len = length();
  beta_[i] = bit;
  for (unsigned l = 0; l < n_ && ((i >> l) & 1); ++l) {
    const std::size_t half = std::size_t{1} << l;
    const std::size_t start = (i >> (l + 1)) << (l + 1);
    const std::uint8_t* child = beta_.data() + std::size_t(l) * len;
    std::uint8_t* parent = beta_.data() + std::size_t(l + 1) * len;
    for (std::size_t k = 0; k < half; ++k) {
      parent[start + k] = child[start + k] ^ child[start + half + k];
      parent[start + half + k] = child[start + half + k];
    }
  }
}

}  // namespace sdsc
