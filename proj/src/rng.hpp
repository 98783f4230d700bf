// Copyright 2026 The certlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace certlab {

// Seeds are mixed with SplitMix64 so that (seed, stream) pairs give
// decorrelated mt19937_64 streams. Stream 0 is the caller's own stream;
// per-start and per-sample workers derive their own.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    using result_type = std::mt19937_64::result_type;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream),
          engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL))) {}

    // Independent child stream; does not advance this generator.
    Rng split(std::uint64_t child) const {
        return Rng(splitmix64(seed_ ^ (stream_ * 0xD1B54A32D192ED03ULL)), child);
    }

    result_type operator()() { return engine_(); }
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace certlab
