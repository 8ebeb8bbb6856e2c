/*
   Copyright 2026 The lwhss Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LWHSS_RANDOM_HPP
#define LWHSS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "lwhss/galois.hpp"

namespace lwhss {

/// Seeded, platform-independent randomness stream (mt19937_64 plus rejection sampling).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for sub-task `index` (e.g. one Monte Carlo trial) of a seeded experiment.
    static RandomStream derive(std::uint64_t seed, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        RandomStream s(0);
        s.engine_.seed(seq);
        return s;
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    Code element(const Field& f) { return static_cast<Code>(below(f.order())); }

private:
    std::mt19937_64 engine_;
};

}  // namespace lwhss

#endif  // LWHSS_RANDOM_HPP
