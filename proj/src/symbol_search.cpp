// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "symbol_search.hpp"

#include <algorithm>
#include <limits>

namespace sdsc::detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

SymbolSearch::SymbolSearch(ScEngine& engine, std::span<const std::uint8_t> frozen, TieBreak tie_break)
    : engine_(engine), frozen_(frozen), tie_break_(tie_break) {}

SymbolChoice SymbolSearch::run(std::size_t base, std::size_t size) {
  base_ = base;
  size_ = size;
  cur_.assign(size, 0);
  best_bits_.assign(size, 0);
  cur_weight_ = best_weight_ = 0;
  have_best_ = have_second_ = tie_ = false;
  best_ = second_ = -kInf;

  const bool contradiction_before = engine_.contradiction();
  explore(0, 0.0);
  // Branches that lost may have tripped the flag; the replay below decides.
  engine_.set_contradiction(contradiction_before);

  SymbolChoice out;
  out.feasible = have_best_;
  if (have_best_) {
    for (std::size_t t = 0; t < size_; ++t) {
      engine_.leaf_llr(base_ + t);
      engine_.commit(base_ + t, best_bits_[t]);
    }
    out.bits = best_bits_;
    out.log_likelihood = best_;
    out.gap = have_second_ ? best_ - second_ : kInf;
    out.tie = tie_;
    return out;
  }

  // Every candidate has probability zero: the prefix already contradicts the
  // observation. Fall back to plain bit decisions and flag it.
  out.bits.assign(size_, 0);
  out.log_likelihood = 0.0;
  for (std::size_t t = 0; t < size_; ++t) {
    const double l = engine_.leaf_llr(base_ + t);
    const std::uint8_t b = frozen_[base_ + t] ? 0 : std::uint8_t(l < 0.0);
    out.log_likelihood += llr::bit_log_probability(l, b);
    out.bits[t] = b;
    engine_.commit(base_ + t, b);
  }
  out.gap = 0.0;
  engine_.set_contradiction(true);
  return out;
}

void SymbolSearch::explore(std::size_t t, double metric) {
  if (t == size_) {
    consider(metric);
    return;
  }
  const std::size_t i = base_ + t;
  const double l = engine_.leaf_llr(i);
  std::uint8_t order[2] = {0, 1};
  std::size_t options = 2;
  if (frozen_[i]) {
    options = 1;
  } else if (l < 0.0) {
    order[0] = 1;
    order[1] = 0;
  }
  for (std::size_t o = 0; o < options; ++o) {
    const std::uint8_t b = order[o];
    const double next = metric + llr::bit_log_probability(l, b);
    if (next == -kInf) continue;
    cur_[t] = b;
    cur_weight_ += b;
    if (!prunable(next, t)) {
      engine_.commit(i, b);
      explore(t + 1, next);
    }
    cur_weight_ -= b;
  }
}

bool SymbolSearch::prunable(double metric, std::size_t t) const {
  // Metrics only decrease along a path, so a prefix below the runner-up can
  // change neither the winner nor the gap.
  if (!have_second_) return false;
  if (metric < second_) return true;
  if (metric == second_ && second_ < best_) return true;
  if (metric == best_ && second_ == best_) {
    // Already tied: only a candidate the tie rule prefers is of interest.
    if (tie_break_ == TieBreak::zero) return cur_weight_ > best_weight_;
    const auto cmp = std::lexicographical_compare_three_way(cur_.begin(), cur_.begin() + t + 1,
                                                            best_bits_.begin(), best_bits_.begin() + t + 1);
    return cmp > 0;
  }
  return false;
}

bool SymbolSearch::preferred_over_best() const {
  if (tie_break_ == TieBreak::zero && cur_weight_ != best_weight_) return cur_weight_ < best_weight_;
  return cur_ < best_bits_;
}

void SymbolSearch::consider(double metric) {
  if (!have_best_ || metric > best_) {
    if (have_best_) {
      second_ = best_;
      have_second_ = true;
    }
    best_ = metric;
    best_bits_ = cur_;
    best_weight_ = cur_weight_;
    have_best_ = true;
    tie_ = false;
  } else if (metric == best_) {
    tie_ = true;
    second_ = best_;
    have_second_ = true;
    if (preferred_over_best()) {
      best_bits_ = cur_;
      best_weight_ = cur_weight_;
    }
  } else if (!have_second_ || metric > second_) {
    second_ = metric;
    have_second_ = true;
  }
}

}  // namespace sdsc::detail
