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

#include "lwhss/protocol.hpp"

#include <deque>
#include <future>
#include <optional>
#include <sstream>

#include "lwhss/error.hpp"

namespace lwhss {

namespace {

void put_le(std::vector<std::uint8_t>& out, std::uint64_t value, unsigned bytes) {
    for (unsigned b = 0; b < bytes; ++b) out.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset, unsigned bytes) {
    std::uint64_t v = 0;
    for (unsigned b = 0; b < bytes; ++b) v |= std::uint64_t{in[offset + b]} << (8 * b);
    return v;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

std::vector<std::uint8_t> from_hex(const std::string& s) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (s.size() % 2 != 0) fail(ErrorKind::ParseError, "odd-length hex frame");
    std::vector<std::uint8_t> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = nibble(s[2 * i]);
        const int lo = nibble(s[2 * i + 1]);
        if (hi < 0 || lo < 0) fail(ErrorKind::ParseError, "non-hex character in frame");
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

constexpr const char* kTranscriptTag = "labelweight-hss-transcript/v1";

}  // namespace

std::vector<std::uint8_t> encode(const WireMessage& message, const Field& field) {
    const unsigned width = field.element_bytes();
    const std::uint64_t length = std::uint64_t{width} * message.payload.size();
    if (length > 0xffffffffu) fail(ErrorKind::ParameterOutOfRange, "payload exceeds 4 GiB");
    std::vector<std::uint8_t> out;
    out.reserve(kFrameHeaderBytes + length);
    out.push_back(kWireVersion);
    out.push_back(static_cast<std::uint8_t>(message.kind));
    put_le(out, message.sender, 2);
    put_le(out, message.receiver, 2);
    put_le(out, length, 4);
    for (Code c : message.payload) {
        if (!field.contains(c)) fail(ErrorKind::ParameterOutOfRange, "payload element outside the field");
        put_le(out, c, width);
    }
    return out;
}

WireMessage decode(std::span<const std::uint8_t> frame, const Field& field) {
    if (frame.size() < kFrameHeaderBytes)
        fail(ErrorKind::DecodeError, "frame of " + std::to_string(frame.size()) + " bytes is shorter than the header");
    if (frame[0] != kWireVersion) fail(ErrorKind::DecodeError, "unsupported wire version " + std::to_string(frame[0]));
    if (frame[1] < 1 || frame[1] > 3) fail(ErrorKind::DecodeError, "unknown message kind " + std::to_string(frame[1]));
    WireMessage m;
    m.kind = static_cast<MessageKind>(frame[1]);
    m.sender = static_cast<std::uint16_t>(get_le(frame, 2, 2));
    m.receiver = static_cast<std::uint16_t>(get_le(frame, 4, 2));
    const std::uint64_t length = get_le(frame, 6, 4);
    if (frame.size() - kFrameHeaderBytes != length)
        fail(ErrorKind::DecodeError, "payload length field says " + std::to_string(length) + " bytes, frame carries " +
                                         std::to_string(frame.size() - kFrameHeaderBytes));
    const unsigned width = field.element_bytes();
    if (length % width != 0) fail(ErrorKind::DecodeError, "payload is not a whole number of elements");
    m.payload.reserve(length / width);
    for (std::size_t off = kFrameHeaderBytes; off < frame.size(); off += width) {
        const std::uint64_t v = get_le(frame, off, width);
        if (v >= field.order()) fail(ErrorKind::DecodeError, "payload element " + std::to_string(v) + " outside the field");
        m.payload.push_back(static_cast<Code>(v));
    }
    return m;
}

Rational Transcript::measured_rate() const {
    if (download_symbols == 0) fail(ErrorKind::Degenerate, "nothing was downloaded");
    return {static_cast<std::int64_t>(instances), static_cast<std::int64_t>(download_symbols)};
}

std::vector<WireMessage> Transcript::messages() const {
    std::vector<WireMessage> out;
    out.reserve(frames.size());
    for (const auto& f : frames) out.push_back(decode(f, field));
    return out;
}

std::string Transcript::dump() const {
    std::ostringstream os;
    os << kTranscriptTag << '\n';
    os << "field " << field.to_string() << '\n';
    os << "instances " << instances << '\n';
    for (const auto& f : frames) os << to_hex(f) << '\n';
    return os.str();
}

Transcript Transcript::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != kTranscriptTag) fail(ErrorKind::ParseError, "missing transcript header");
    Transcript t;
    if (!std::getline(is, line) || line.rfind("field ", 0) != 0) fail(ErrorKind::ParseError, "missing field line");
    t.field = Field::parse(line.substr(6));
    if (!std::getline(is, line) || line.rfind("instances ", 0) != 0)
        fail(ErrorKind::ParseError, "missing instances line");
    try {
        t.instances = std::stoull(line.substr(10));
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad instances line");
    }
    std::optional<std::uint16_t> output_client;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto frame = from_hex(line);
        const WireMessage m = decode(frame, t.field);
        t.link_bytes[{m.sender, m.receiver}] += frame.size();
        if (m.kind == MessageKind::OutputShares) t.download_symbols += m.payload.size();
        t.frames.push_back(std::move(frame));
    }
    return t;
}

SimulationResult simulate(const HssScheme& scheme, const std::vector<std::vector<Code>>& secrets,
                          std::uint64_t seed, const SimulationOptions& options) {
    const auto& p = scheme.params();
    const Field& field = scheme.field();
    if (p.servers + 2 > 0xffff) fail(ErrorKind::ParameterOutOfRange, "too many servers for 2-byte ids");
    const auto s = static_cast<std::uint16_t>(p.servers);
    const std::uint16_t input_id = 0;
    const std::uint16_t output_id = static_cast<std::uint16_t>(s + 1);

    SimulationResult result;
    result.transcript.field = field;
    result.transcript.instances = p.instances;
    std::vector<std::deque<std::vector<std::uint8_t>>> inbox(s + 2);

    auto send = [&](const WireMessage& m) {
        auto frame = encode(m, field);
        if (options.tamper) options.tamper(result.transcript.frames.size(), frame);
        result.transcript.link_bytes[{m.sender, m.receiver}] += frame.size();
        result.transcript.frames.push_back(frame);
        inbox[m.receiver].push_back(std::move(frame));
    };

    // Input client: share every secret and ship each server its fragments.
    {
        RandomStream rng(seed);
        const auto views = share_inputs(scheme, secrets, rng);
        for (std::uint16_t j = 0; j < s; ++j) {
            WireMessage m{MessageKind::InputShares, input_id, static_cast<std::uint16_t>(j + 1), {}};
            for (const auto& frag : views[j].secrets) m.payload.insert(m.payload.end(), frag.begin(), frag.end());
            send(m);
        }
    }

    // Servers: rebuild the view from the frame, evaluate, answer the output client.
    const std::size_t per_secret = scheme.subsets().held_by(0).size();
    auto run_server = [&](std::uint16_t id) -> std::vector<Vector> {
        std::vector<Vector> answers;
        for (const auto& frame : inbox[id]) {
            const WireMessage m = decode(frame, field);
            if (m.kind != MessageKind::InputShares || m.receiver != id)
                fail(ErrorKind::DecodeError, "server " + std::to_string(id) + " got an unexpected message");
            if (m.payload.size() != p.instances * p.variables * per_secret)
                fail(ErrorKind::MissingShare, "server " + std::to_string(id) + " received a short share vector");
            ServerView view{static_cast<std::size_t>(id - 1), {}};
            for (std::size_t k = 0; k < p.instances * p.variables; ++k)
                view.secrets.emplace_back(m.payload.begin() + k * per_secret, m.payload.begin() + (k + 1) * per_secret);
            answers.push_back(eval_server(scheme, view));
        }
        return answers;
    };
    std::vector<std::vector<Vector>> answers(s);
    if (options.parallel) {
        std::vector<std::future<std::vector<Vector>>> jobs;
        for (std::uint16_t j = 0; j < s; ++j)
            jobs.push_back(std::async(std::launch::async, run_server, static_cast<std::uint16_t>(j + 1)));
        for (std::uint16_t j = 0; j < s; ++j) answers[j] = jobs[j].get();
    } else {
        for (std::uint16_t j = 0; j < s; ++j) answers[j] = run_server(static_cast<std::uint16_t>(j + 1));
    }
    for (std::uint16_t j = 0; j < s; ++j) {
        inbox[j + 1].clear();
        for (auto& z : answers[j])
            send({MessageKind::OutputShares, static_cast<std::uint16_t>(j + 1), output_id, std::move(z)});
    }

    // Output client: merge by sender id, reconstruct, report back to the input client.
    OutputShares shares;
    shares.per_server.resize(s);
    std::vector<bool> seen(s, false);
    for (const auto& frame : inbox[output_id]) {
        const WireMessage m = decode(frame, field);
        if (m.kind != MessageKind::OutputShares || m.sender < 1 || m.sender > s || seen[m.sender - 1])
            fail(ErrorKind::DecodeError, "output client got an unexpected message");
        seen[m.sender - 1] = true;
        result.transcript.download_symbols += m.payload.size();
        shares.per_server[m.sender - 1] = m.payload;
    }
    inbox[output_id].clear();
    for (std::uint16_t j = 0; j < s; ++j)
        if (!seen[j]) fail(ErrorKind::MissingShare, "no output shares from server " + std::to_string(j + 1));
    result.outputs = reconstruct(scheme, shares.assemble(scheme.code().labeling()));
    send({MessageKind::Result, output_id, input_id, result.outputs});

    const WireMessage final_message = decode(inbox[input_id].back(), field);
    result.expected = expected_outputs(scheme, secrets);
    result.pass = final_message.payload == result.expected;
    return result;
}

}  // namespace lwhss
