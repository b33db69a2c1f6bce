// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdsc {

enum class ChannelKind { bec, awgn };

enum class BitRole { data, codeword, estimate };

/// A binary vector tagged with what it represents (u, x or û).
/// Element 0 holds index 1.
class BitBlock {
 public:
  BitBlock() = default;
  BitBlock(std::size_t size, BitRole role) : bits_(size, 0), role_(role) {}
  BitBlock(std::vector<std::uint8_t> bits, BitRole role) : bits_(std::move(bits)), role_(role) {}

  std::size_t size() const noexcept { return bits_.size(); }
  BitRole role() const noexcept { return role_; }
  std::uint8_t operator[](std::size_t pos) const { return bits_[pos]; }
  std::uint8_t& operator[](std::size_t pos) { return bits_[pos]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::span<std::uint8_t> bits() noexcept { return bits_; }

  std::string to_string() const;

  friend bool operator==(const BitBlock& a, const BitBlock& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
  BitRole role_ = BitRole::data;
};

/// Reverses the low n bits of a 0-based index.
std::size_t bit_reverse(std::size_t index, unsigned n);

/// Bit-reversal permutation of 1..2^n, 1-based: entry i-1 is the image of i.
std::vector<std::size_t> bit_reversal_permutation(unsigned n);

/// Bhattacharyya parameters of the 2^n synthesized bit-channels, seeded with
/// z0 and split by z- = 2z - z^2, z+ = z^2. Element i belongs to u_{i+1}.
std::vector<double> bhattacharyya_parameters(unsigned n, double z0);

/// An (N, K) polar code: block length N = 2^n and the information set A.
///
/// Index values exposed by the interface (info_set, frozen_set, is_frozen)
/// are 1-based. Span-valued accessors are position-indexed, so position 0 is
/// u_1. Instances are immutable.
class PolarCode {
 public:
  /// Builds the code from Bhattacharyya reliabilities. For the BEC the
  /// design parameter is the erasure probability; for AWGN it is the design
  /// Es/N0 (linear) and the seed is exp(-Es/N0). Ties go to the smaller index.
  static PolarCode construct(unsigned n, std::size_t k, ChannelKind kind, double design_param);

  /// Builds a code from an explicit 1-based information set.
  static PolarCode from_info_set(std::size_t length, std::vector<std::size_t> info_set);

  /// Parses the two-line text format: "N K" then the sorted information set.
  static PolarCode parse(std::string_view text);
  static PolarCode load(const std::string& path);

  std::string to_text() const;
  void save(const std::string& path) const;

  unsigned n() const noexcept { return n_; }
  std::size_t length() const noexcept { return frozen_.size(); }
  std::size_t dimension() const noexcept { return info_.size(); }
  double rate() const noexcept { return double(dimension()) / double(length()); }

  const std::vector<std::size_t>& info_set() const noexcept { return info_; }
  std::vector<std::size_t> frozen_set() const;
  bool is_frozen(std::size_t index) const { return frozen_.at(index - 1) != 0; }

  /// 1 where u_{pos+1} is frozen.
  std::span<const std::uint8_t> frozen_mask() const noexcept { return frozen_; }

  /// Per-index Bhattacharyya parameters; empty for codes built from an
  /// explicit information set.
  const std::vector<double>& reliabilities() const noexcept { return z_; }

 private:
  PolarCode() = default;

  unsigned n_ = 0;
  std::vector<std::size_t> info_;
  std::vector<std::uint8_t> frozen_;
  std::vector<double> z_;
};

/// Computes u B_N F^{(x)n} over GF(2) without checking frozen positions.
std::vector<std::uint8_t> polar_transform(std::span<const std::uint8_t> u);

/// Encodes a data block whose frozen positions are zero.
BitBlock encode(const PolarCode& code, const BitBlock& u);

/// A data block with uniform random information bits and zero frozen bits.
BitBlock random_data_word(const PolarCode& code, std::uint64_t seed);

}  // namespace sdsc
