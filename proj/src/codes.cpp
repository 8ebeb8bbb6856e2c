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

#include "lwhss/codes.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lwhss/error.hpp"

namespace lwhss {

LabeledCode::LabeledCode(Matrix generator, Labeling labeling)
    : generator_(std::move(generator)), labeling_(std::move(labeling)) {
    if (labeling_.length() != generator_.cols())
        fail(ErrorKind::DimensionMismatch, "labeling length " + std::to_string(labeling_.length()) +
                                               " differs from code length " + std::to_string(generator_.cols()));
    if (generator_.rows() == 0) fail(ErrorKind::ParameterOutOfRange, "code dimension must be >= 1");
    if (rank(generator_) != generator_.rows())
        fail(ErrorKind::ParameterOutOfRange, "generator matrix does not have full row rank");
}

Rational LabeledCode::rate() const {
    return {static_cast<std::int64_t>(dimension()), static_cast<std::int64_t>(length())};
}

std::size_t labelweight(const LabeledCode& code, std::span<const Code> word) {
    return code.labeling().labelweight(word);
}

namespace {

std::uint64_t message_count(std::uint64_t q, std::size_t k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        count *= q;
    }
    return count;
}

std::size_t enumerate_min(const Matrix& g, const Labeling& labels, std::uint64_t budget, std::size_t stop_at) {
    if (labels.length() != g.cols()) fail(ErrorKind::DimensionMismatch, "labeling length differs from matrix width");
    const std::uint64_t total = message_count(g.field().order(), g.rows());
    if (total > budget)
        fail(ErrorKind::EnumerationBudgetExceeded, "q^dim = " + std::to_string(total) + " codewords exceeds budget " +
                                                       std::to_string(budget));
    const Field& f = g.field();
    const std::uint32_t q = f.order();
    const std::size_t n = g.cols();

    // Odometer over message coefficients; each step adds (new - old) * row_i to the running codeword.
    std::vector<Code> message(g.rows(), 0);
    std::vector<Code> word(n, 0);
    std::vector<std::size_t> support_per_label(labels.servers(), 0);
    std::size_t weight = 0;
    std::size_t best = labels.servers() + 1;

    auto update = [&](std::size_t row, Code delta) {
        const auto gr = g.row(row);
        for (std::size_t c = 0; c < n; ++c) {
            if (gr[c] == 0) continue;
            const Code before = word[c];
            const Code after = f.add(before, f.mul(delta, gr[c]));
            word[c] = after;
            if ((before == 0) == (after == 0)) continue;
            auto& cnt = support_per_label[labels[c]];
            if (after == 0) {
                if (--cnt == 0) --weight;
            } else if (cnt++ == 0) {
                ++weight;
            }
        }
    };

    while (true) {
        std::size_t i = 0;
        for (; i < message.size(); ++i) {
            const Code old = message[i];
            const Code next = old + 1 == q ? 0 : old + 1;
            message[i] = next;
            update(i, f.sub(next, old));
            if (next != 0) break;
        }
        if (i == message.size()) break;
        best = std::min(best, weight);
        if (best <= stop_at) break;
    }
    return best;
}

}  // namespace

std::uint64_t codeword_count(const LabeledCode& code) {
    return message_count(code.field().order(), code.dimension());
}

std::size_t min_labelweight(const LabeledCode& code, std::uint64_t budget) {
    return enumerate_min(code.generator(), code.labeling(), budget, 1);
}

std::size_t min_message_labelweight(const Matrix& generator, const Labeling& labeling, std::uint64_t budget) {
    return enumerate_min(generator, labeling, budget, 0);
}

BigInt ball_volume(std::uint64_t s, std::uint64_t w, std::uint64_t q, std::uint64_t r) {
    if (r > s) fail(ErrorKind::ParameterOutOfRange, "ball radius exceeds number of labels");
    BigInt block = 1;
    for (std::uint64_t i = 0; i < w; ++i) block *= q;
    block -= 1;  // nonzero patterns inside one label's block
    BigInt total = 0;
    BigInt binom = 1;  // C(s, i)
    BigInt power = 1;  // block^i
    for (std::uint64_t i = 0; i <= r; ++i) {
        total += binom * power;
        binom = binom * (s - i) / (i + 1);
        power *= block;
    }
    return total;
}

}  // namespace lwhss
