// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "sdsc/polar_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "sdsc/error.hpp"

namespace sdsc {

namespace {

constexpr unsigned kMaxExponent = 24;

unsigned exponent_of(std::size_t length) {
  if (length == 0 || !std::has_single_bit(length))
    throw ParameterError("block length " + std::to_string(length) + " is not a power of two");
  return unsigned(std::countr_zero(length));
}

}  // namespace

std::string BitBlock::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::size_t bit_reverse(std::size_t index, unsigned n) {
  std::size_t r = 0;
  for (unsigned b = 0; b < n; ++b) {
    r = (r << 1) | (index & 1);
    index >>= 1;
  }
  return r;
}

std::vector<std::size_t> bit_reversal_permutation(unsigned n) {
  std::vector<std::size_t> perm(std::size_t{1} << n);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = bit_reverse(i, n) + 1;
  return perm;
}

std::vector<double> bhattacharyya_parameters(unsigned n, double z0) {
  // z[i] is the parameter of u_{i+1}; the most significant index bit picks
  // the first split applied to the raw channel.
  std::vector<double> z(std::size_t{1} << n);
  z[0] = z0;
  for (unsigned level = 0; level < n; ++level) {
    const std::size_t blocks = std::size_t{1} << level;
    const std::size_t stride = z.size() >> level;
    for (std::size_t b = blocks; b-- > 0;) {
      const double v = z[b * stride];
      z[b * stride] = 2.0 * v - v * v;
      z[b * stride + stride / 2] = v * v;
    }
  }
  return z;
}

PolarCode PolarCode::construct(unsigned n, std::size_t k, ChannelKind kind, double design_param) {
  if (n > kMaxExponent) throw ParameterError("code exponent n=" + std::to_string(n) + " too large");
  const std::size_t length = std::size_t{1} << n;
  if (k > length)
    throw ParameterError("K=" + std::to_string(k) + " exceeds N=" + std::to_string(length));
  if (!(design_param > 0.0) || !std::isfinite(design_param))
    throw ParameterError("design parameter must be positive and finite");

  double z0 = 0.0;
  if (kind == ChannelKind::bec) {
    if (!(design_param < 1.0)) throw ParameterError("design erasure probability must lie in (0,1)");
    z0 = design_param;
  } else {
    z0 = std::exp(-design_param);
  }

  PolarCode code;
  code.n_ = n;
  code.z_ = bhattacharyya_parameters(n, z0);

  std::vector<std::size_t> order(length);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return code.z_[a] < code.z_[b]; });

  code.frozen_.assign(length, 1);
  for (std::size_t r = 0; r < k; ++r) code.frozen_[order[r]] = 0;
  for (std::size_t i = 0; i < length; ++i)
    if (!code.frozen_[i]) code.info_.push_back(i + 1);
  return code;
}

PolarCode PolarCode::from_info_set(std::size_t length, std::vector<std::size_t> info_set) {
  const unsigned n = exponent_of(length);
  if (n > kMaxExponent) throw ParameterError("block length too large");
  std::sort(info_set.begin(), info_set.end());
  if (std::adjacent_find(info_set.begin(), info_set.end()) != info_set.end())
    throw InputError("information set contains duplicate indices");
  if (!info_set.empty() && (info_set.front() < 1 || info_set.back() > length))
    throw InputError("information index out of range 1.." + std::to_string(length));

  PolarCode code;
  code.n_ = n;
  code.frozen_.assign(length, 1);
  for (std::size_t a : info_set) code.frozen_[a - 1] = 0;
  code.info_ = std::move(info_set);
  return code;
}

std::vector<std::size_t> PolarCode::frozen_set() const {
  std::vector<std::size_t> out;
  out.reserve(length() - dimension());
  for (std::size_t i = 0; i < frozen_.size(); ++i)
    if (frozen_[i]) out.push_back(i + 1);
  return out;
}

PolarCode PolarCode::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw InputError("code description is empty");
  std::istringstream hs(header);
  long long length = 0, k = 0;
  if (!(hs >> length >> k) || length <= 0 || k < 0)
    throw InputError("code header must be 'N K' with N > 0 and K >= 0");
  std::string extra;
  if (hs >> extra) throw InputError("unexpected token '" + extra + "' in code header");

  std::vector<std::size_t> info;
  std::string line;
  if (std::getline(in, line)) {
    std::istringstream ls(line);
    long long idx = 0;
    while (ls >> idx) {
      if (idx < 1) throw InputError("information index must be >= 1");
      info.push_back(std::size_t(idx));
    }
    if (!ls.eof()) throw InputError("malformed information set line");
  }
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw InputError("trailing content after information set");

  if (info.size() != std::size_t(k))
    throw InputError("header declares K=" + std::to_string(k) + " but " +
                     std::to_string(info.size()) + " indices were listed");
  if (!std::is_sorted(info.begin(), info.end())) throw InputError("information set is not sorted");
  return from_info_set(std::size_t(length), std::move(info));
}

PolarCode PolarCode::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open code file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::string PolarCode::to_text() const {
  std::string s = std::to_string(length()) + " " + std::to_string(dimension()) + "\n";
  for (std::size_t i = 0; i < info_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(info_[i]);
  }
  s += '\n';
  return s;
}

void PolarCode::save(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write code file '" + path + "'");
  f << to_text();
  if (!f) throw IoError("write failed for '" + path + "'");
}

std::vector<std::uint8_t> polar_transform(std::span<const std::uint8_t> u) {
  const unsigned n = exponent_of(u.size());
  // Explicit B_N first: v_{br(i)} = u_i.
  std::vector<std::uint8_t> x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) x[bit_reverse(i, n)] = u[i] & 1;
  for (std::size_t h = 1; h < x.size(); h <<= 1)
    for (std::size_t b = 0; b < x.size(); b += 2 * h)
      for (std::size_t k = b; k < b + h; ++k) x[k] ^= x[k + h];
  return x;
}

BitBlock encode(const PolarCode& code, const BitBlock& u) {
  if (u.size() != code.length())
    throw InputError("data block has length " + std::to_string(u.size()) + ", expected " +
                     std::to_string(code.length()));
  const auto frozen = code.frozen_mask();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 1) throw InputError("data block holds a non-binary value");
    if (frozen[i] && u[i])
      throw InputError("frozen position " + std::to_string(i + 1) + " carries a nonzero bit");
  }
  return BitBlock(polar_transform(u.bits()), BitRole::codeword);
}

BitBlock random_data_word(const PolarCode& code, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitBlock u(code.length(), BitRole::data);
  for (std::size_t a : code.info_set()) u[a - 1] = std::uint8_t(rng() >> 63);
  return u;
}

}  // namespace sdsc
