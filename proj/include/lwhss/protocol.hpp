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

/**
 * @file protocol.hpp
 * @brief Message-passing run of a scheme: one input client, s servers, one output client.
 *
 * Frame layout (all integers little-endian):
 *
 *     offset 0  version (0x01)
 *     offset 1  kind (1 input shares, 2 output shares, 3 result)
 *     offset 2  sender id, 2 bytes
 *     offset 4  receiver id, 2 bytes
 *     offset 6  payload length in bytes, 4 bytes
 *     offset 10 payload: field elements, each element_bytes() wide
 *
 * Actor ids: input client 0, servers 1..s, output client s+1.
 */

#ifndef LWHSS_PROTOCOL_HPP
#define LWHSS_PROTOCOL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lwhss/hss.hpp"

namespace lwhss {

inline constexpr std::uint8_t kWireVersion = 0x01;
inline constexpr std::size_t kFrameHeaderBytes = 10;

enum class MessageKind : std::uint8_t { InputShares = 1, OutputShares = 2, Result = 3 };

struct WireMessage {
    MessageKind kind = MessageKind::Result;
    std::uint16_t sender = 0;
    std::uint16_t receiver = 0;
    std::vector<Code> payload;
    friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

std::vector<std::uint8_t> encode(const WireMessage& message, const Field& field);
/// Throws DecodeError on a bad version or kind, truncation, trailing bytes or out-of-field elements.
WireMessage decode(std::span<const std::uint8_t> frame, const Field& field);

struct Transcript {
    Field field = Field::make(2);
    std::vector<std::vector<std::uint8_t>> frames;  ///< in delivery order
    std::map<std::pair<std::uint16_t, std::uint16_t>, std::uint64_t> link_bytes;
    std::uint64_t download_symbols = 0;  ///< field elements received by the output client
    std::size_t instances = 0;

    double download_bits() const { return static_cast<double>(download_symbols) * field.bits_per_symbol(); }
    /// l / download_symbols.
    Rational measured_rate() const;
    std::vector<WireMessage> messages() const;

    /// Header line, field line, then one hex frame per line.
    std::string dump() const;
    static Transcript parse(const std::string& text);
};

struct SimulationOptions {
    /// Evaluate servers on separate threads; results are merged by server id.
    bool parallel = false;
    /// Test hook: may rewrite frame number `index` before delivery.
    std::function<void(std::size_t index, std::vector<std::uint8_t>& frame)> tamper;
};

struct SimulationResult {
    Transcript transcript;
    Vector outputs;
    Vector expected;
    bool pass = false;
};

/// Deterministic protocol run; outputs match run_end_to_end on the same (scheme, secrets, seed).
SimulationResult simulate(const HssScheme& scheme, const std::vector<std::vector<Code>>& secrets,
                          std::uint64_t seed, const SimulationOptions& options = {});

}  // namespace lwhss

#endif  // LWHSS_PROTOCOL_HPP
