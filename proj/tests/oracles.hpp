// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

// Reference computations used only by tests. None of these call into the
// SC engine or the butterfly encoder.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "sdsc/polar_code.hpp"

namespace sdsc::oracle {

using Matrix = std::vector<std::vector<std::uint8_t>>;

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.size() * b.size(), std::vector<std::uint8_t>(a[0].size() * b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[0].size(); ++l)
          out[i * b.size() + k][j * b[0].size() + l] = a[i][j] & b[k][l];
  return out;
}

/// Explicit B_N F^{(x)n}: Kronecker power, then rows permuted by enumerated
/// bit reversal.
inline Matrix generator_matrix(unsigned n) {
  const Matrix f = {{1, 0}, {1, 1}};
  Matrix g = {{1}};
  for (unsigned i = 0; i < n; ++i) g = kronecker(g, f);
  const std::size_t len = g.size();
  Matrix b(len, std::vector<std::uint8_t>(len, 0));
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t r = 0;
    for (unsigned k = 0; k < n; ++k)
      if (i & (std::size_t{1} << k)) r |= std::size_t{1} << (n - 1 - k);
    b[i][r] = 1;
  }
  Matrix out(len, std::vector<std::uint8_t>(len, 0));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t k = 0; k < len; ++k)
      if (b[i][k])
        for (std::size_t j = 0; j < len; ++j) out[i][j] ^= g[k][j];
  return out;
}

inline std::vector<std::uint8_t> multiply(const std::vector<std::uint8_t>& u, const Matrix& g) {
  std::vector<std::uint8_t> x(g[0].size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i])
      for (std::size_t j = 0; j < x.size(); ++j) x[j] ^= g[i][j];
  return x;
}

/// log P(y_i | x_i) normalised so that P(0) + P(1) = 1.
inline double position_log_likelihood(double llr, std::uint8_t x) {
  const double s = x ? -llr : llr;
  if (s == std::numeric_limits<double>::infinity()) return 0.0;
  if (s == -std::numeric_limits<double>::infinity()) return -std::numeric_limits<double>::infinity();
  return -std::log1p(std::exp(-s));
}

inline double codeword_log_likelihood(const std::vector<double>& llr, const std::vector<std::uint8_t>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += position_log_likelihood(llr[i], x[i]);
  return s;
}

inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

/// Decision LLR of u_{j+1} given a prefix, summing Pr(y | u) over every
/// suffix (frozen suffix bits included as free).
inline double brute_force_decision_llr(const Matrix& g, const std::vector<double>& llr,
                                       const std::vector<std::uint8_t>& prefix) {
  const std::size_t len = g.size();
  const std::size_t j = prefix.size();
  const std::size_t free_bits = len - j - 1;
  double acc[2] = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  std::vector<std::uint8_t> u(len, 0);
  for (std::size_t i = 0; i < j; ++i) u[i] = prefix[i];
  for (int b = 0; b < 2; ++b) {
    u[j] = std::uint8_t(b);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << free_bits); ++s) {
      for (std::size_t t = 0; t < free_bits; ++t) u[j + 1 + t] = (s >> t) & 1;
      acc[b] = log_add(acc[b], codeword_log_likelihood(llr, multiply(u, g)));
    }
  }
  return acc[0] - acc[1];
}

/// Erasure-channel consistency test by GF(2) elimination: does some
/// completion of `fixed` (the first fixed.size() data bits) reproduce every
/// unerased codeword bit? N <= 64.
class BecConsistency {
 public:
  BecConsistency(const Matrix& g, const std::vector<double>& llr) : len_(g.size()) {
    for (std::size_t k = 0; k < len_; ++k) {
      if (llr[k] == 0.0) continue;
      std::uint64_t col = 0;
      for (std::size_t i = 0; i < len_; ++i)
        if (g[i][k]) col |= std::uint64_t{1} << i;
      cols_.push_back(col);
      rhs_.push_back(llr[k] < 0 ? 1 : 0);
    }
  }

  bool consistent(const std::vector<std::uint8_t>& fixed) const {
    std::uint64_t fixed_mask = 0, fixed_bits = 0;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      fixed_mask |= std::uint64_t{1} << i;
      if (fixed[i]) fixed_bits |= std::uint64_t{1} << i;
    }
    std::vector<std::uint64_t> rows;
    std::vector<std::uint8_t> rhs;
    for (std::size_t e = 0; e < cols_.size(); ++e) {
      rows.push_back(cols_[e] & ~fixed_mask);
      rhs.push_back(rhs_[e] ^ std::uint8_t(std::popcount(cols_[e] & fixed_bits) & 1));
    }
    std::size_t rank = 0;
    for (unsigned bit = 0; bit < 64 && rank < rows.size(); ++bit) {
      const std::uint64_t m = std::uint64_t{1} << bit;
      std::size_t p = rank;
      while (p < rows.size() && !(rows[p] & m)) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      std::swap(rhs[p], rhs[rank]);
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != rank && (rows[r] & m)) {
          rows[r] ^= rows[rank];
          rhs[r] ^= rhs[rank];
        }
      ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rhs[r]) return false;
    return true;
  }

 private:
  std::size_t len_;
  std::vector<std::uint64_t> cols_;
  std::vector<std::uint8_t> rhs_;
};

/// Successive cancellation on the erasure channel by consistency checks
/// alone: u_j is certain when only one value keeps the prefix consistent
/// with the unerased positions, and a tie (resolved to 0) otherwise.
struct BecReference {
  std::vector<std::uint8_t> u_hat;  // decided prefix
  std::vector<int> certainty;       // +1: only 0 fits, -1: only 1 fits, 0: both
  /// True when an earlier decision made a later frozen zero inconsistent;
  /// decisions end at that frozen bit.
  bool inconsistent = false;
};

inline BecReference bec_reference_sc(const PolarCode& code, const Matrix& g, const std::vector<double>& llr) {
  const BecConsistency bec(g, llr);
  BecReference ref;
  for (std::size_t j = 0; j < code.length(); ++j) {
    auto with = ref.u_hat;
    with.push_back(0);
    const bool c0 = bec.consistent(with);
    with.back() = 1;
    const bool c1 = bec.consistent(with);
    ref.certainty.push_back(c0 && c1 ? 0 : (c0 ? 1 : -1));
    const bool frozen = code.is_frozen(j + 1);
    ref.u_hat.push_back(frozen || c0 ? 0 : 1);
    if (frozen && !c0) {
      ref.inconsistent = true;
      break;
    }
  }
  return ref;
}

/// All data words (zero on frozen positions) of a small code.
inline std::vector<std::vector<std::uint8_t>> all_data_words(const PolarCode& code) {
  std::vector<std::vector<std::uint8_t>> out;
  const auto& info = code.info_set();
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << info.size()); ++d) {
    std::vector<std::uint8_t> u(code.length(), 0);
    for (std::size_t r = 0; r < info.size(); ++r) u[info[r] - 1] = (d >> r) & 1;
    out.push_back(std::move(u));
  }
  return out;
}

/// Maximum codeword log-likelihood over the code, by direct enumeration.
inline double ml_best_log_likelihood(const PolarCode& code, const Matrix& g, const std::vector<double>& llr) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& u : all_data_words(code)) best = std::max(best, codeword_log_likelihood(llr, multiply(u, g)));
  return best;
}

}  // namespace sdsc::oracle
