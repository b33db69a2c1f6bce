// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#include "sdsc/channel.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "sdsc/error.hpp"

namespace sdsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

double ChannelSpec::noise_variance() const {
  return 1.0 / (2.0 * rate * std::pow(10.0, param / 10.0));
}

void ChannelSpec::validate() const {
  if (kind == ChannelKind::bec) {
    if (!(param >= 0.0 && param <= 1.0)) throw ParameterError("erasure probability must lie in [0,1]");
  } else {
    if (!std::isfinite(param)) throw ParameterError("Eb/N0 must be finite");
    if (!(rate > 0.0 && rate <= 1.0)) throw ParameterError("AWGN needs a code rate in (0,1]");
  }
}

ChannelObservation transmit(const ChannelSpec& spec, const BitBlock& x, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  ChannelObservation obs;
  obs.llr.resize(x.size());
  if (spec.kind == ChannelKind::bec) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const bool erased = unit_uniform(rng) < spec.param;
      obs.llr[i] = erased ? 0.0 : (x[i] ? -kInf : kInf);
    }
  } else {
    const double sigma2 = spec.noise_variance();
    std::normal_distribution<double> noise(0.0, std::sqrt(sigma2));
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double y = (x[i] ? -1.0 : 1.0) + noise(rng);
      obs.llr[i] = 2.0 * y / sigma2;
    }
  }
  return obs;
}

Frame make_frame(const PolarCode& code, ChannelSpec spec, std::uint64_t seed) {
  spec.rate = code.rate();
  Frame fr;
  fr.u = random_data_word(code, derive_seed(seed, 0));
  fr.x = encode(code, fr.u);
  fr.obs = transmit(spec, fr.x, derive_seed(seed, 1));
  return fr;
}

ChannelObservation parse_observation(std::string_view text) {
  ChannelObservation obs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || std::isnan(v))
      throw InputError("observation line " + std::to_string(line_no) + ": cannot parse '" + token + "'");
    obs.llr.push_back(v);
  }
  return obs;
}

ChannelObservation load_observation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open observation file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_observation(ss.str());
}

}  // namespace sdsc
