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

// Test-side reference implementations, written independently of the library internals.

#ifndef LWHSS_TESTS_ORACLES_HPP
#define LWHSS_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "lwhss/codes.hpp"
#include "lwhss/error.hpp"
#include "lwhss/galois.hpp"

namespace oracle {

using lwhss::Code;

/// Schoolbook product of two packed elements, reduced by the field modulus.
inline Code field_mul(const lwhss::Field& f, Code a, Code b) {
    const std::uint32_t p = f.characteristic();
    const unsigned k = f.degree();
    auto ca = f.coefficients(a);
    auto cb = f.coefficients(b);
    ca.resize(k, 0);
    cb.resize(k, 0);
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
    const auto& m = f.modulus();
    for (std::size_t d = 2 * k; d-- > k;) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        for (unsigned i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
    }
    Code out = 0;
    Code scale = 1;
    for (unsigned i = 0; i < k; ++i) {
        out += static_cast<Code>(prod[i]) * scale;
        scale *= p;
    }
    return out;
}

/// Minimum labelweight by listing every codeword explicitly (no incremental tricks).
inline std::size_t min_labelweight(const lwhss::LabeledCode& code) {
    const auto& f = code.field();
    const std::size_t k = code.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= f.order();
    std::size_t best = code.servers() + 1;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<Code> msg(k);
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < k; ++i) {
            msg[i] = static_cast<Code>(v % f.order());
            v /= f.order();
        }
        std::vector<Code> word(code.length(), 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < code.length(); ++c)
                word[c] = f.add(word[c], f.mul(msg[i], code.generator()(i, c)));
        std::vector<bool> hit(code.servers(), false);
        std::size_t w = 0;
        for (std::size_t c = 0; c < word.size(); ++c)
            if (word[c] != 0 && !hit[code.labeling()[c]]) {
                hit[code.labeling()[c]] = true;
                ++w;
            }
        if (w < best) best = w;
    }
    return best;
}

/// Hamming distance of a code by brute force (identity labeling view).
inline std::size_t min_distance(const lwhss::LabeledCode& code) {
    return oracle::min_labelweight(lwhss::LabeledCode(code.generator(), lwhss::Labeling::identity(code.length())));
}

template <typename F>
lwhss::ErrorKind error_of(F&& f) {
    try {
        f();
    } catch (const lwhss::Error& e) {
        return e.kind();
    }
    throw std::runtime_error("expected an lwhss::Error");
}

/// Labelweight ball size by listing all q^(s*w) words under the balanced labeling.
inline std::uint64_t ball_by_enumeration(std::uint64_t s, std::uint64_t w, std::uint64_t q, std::uint64_t r) {
    const lwhss::Labeling lab = lwhss::Labeling::balanced(s, w);
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < s * w; ++i) total *= q;
    std::uint64_t count = 0;
    std::vector<Code> word(s * w);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (auto& c : word) {
            c = static_cast<Code>(v % q);
            v /= q;
        }
        if (lab.labelweight(word) <= r) ++count;
    }
    return count;
}

}  // namespace oracle

#endif  // LWHSS_TESTS_ORACLES_HPP
