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

#ifndef LWHSS_LABELING_HPP
#define LWHSS_LABELING_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lwhss/galois.hpp"

namespace lwhss {

/**
 * Surjective map from code coordinates [0, n) onto servers [0, s).
 *
 * Servers and coordinates are zero-based in the API and in every file format.
 */
class Labeling {
public:
    Labeling(std::size_t servers, std::vector<std::size_t> labels);

    /// n coordinates, coordinate r owned by server r.
    static Labeling identity(std::size_t n);
    /// n = s*w coordinates, server j owns the j-th block of w consecutive coordinates.
    static Labeling balanced(std::size_t servers, std::size_t block);

    std::size_t length() const noexcept { return labels_.size(); }
    std::size_t servers() const noexcept { return servers_; }
    std::size_t operator[](std::size_t r) const noexcept { return labels_[r]; }
    std::span<const std::size_t> labels() const noexcept { return labels_; }

    /// Coordinates owned by `server`, increasing.
    const std::vector<std::size_t>& coordinates_of(std::size_t server) const { return owned_.at(server); }

    /// Number of distinct labels on the support of `word`.
    std::size_t labelweight(std::span<const Code> word) const;

    friend bool operator==(const Labeling& a, const Labeling& b) {
        return a.servers_ == b.servers_ && a.labels_ == b.labels_;
    }

private:
    std::size_t servers_;
    std::vector<std::size_t> labels_;
    std::vector<std::vector<std::size_t>> owned_;
};

}  // namespace lwhss

#endif  // LWHSS_LABELING_HPP
