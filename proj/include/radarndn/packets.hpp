#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radarndn/names.hpp"

namespace radarndn {

using Bytes = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

inline constexpr std::size_t kDefaultChunkSize = 8192;

// Simulator size model: every packet pays a fixed header in addition to its
// variable parts. Keeps bandwidth arithmetic auditable.
inline constexpr std::size_t kPacketHeaderBytes = 64;

enum class InterestKind { Init, Data };

/// Request for a named piece of content.
struct InterestPacket {
    Name name;
    std::uint64_t nonce = 0;
    double lifetime_ms = 4000.0;
    InterestKind kind = InterestKind::Data;

    std::size_t wire_size() const { return kPacketHeaderBytes + name.str().size(); }
};

/// Builds an Interest; kind derives from the name grammar.
InterestPacket make_interest(const Name& name, std::uint64_t nonce, double lifetime_ms = 4000.0);

/// One segment of named content, integrity-protected, optionally announcing
/// the next file name in its metadata.
struct DataPacket {
    Name name;
    Bytes payload;
    std::optional<std::uint64_t> final_block;
    std::optional<Name> piggyback_next;
    Digest digest{};

    std::size_t wire_size() const {
        std::size_t n = kPacketHeaderBytes + payload.size();
        if (piggyback_next) n += piggyback_next->str().size();
        return n;
    }
};

/// Digest over (name, payload, piggyback_next). 32 bytes, SHA-256.
Digest compute_digest(const DataPacket& p);

/// Builds a Data packet with its digest already computed.
DataPacket make_data(Name name, Bytes payload, std::optional<std::uint64_t> final_block = std::nullopt,
                     std::optional<Name> piggyback_next = std::nullopt);

/// Splits `content` into chunk-sized Data packets named base/_segment=k.
/// Empty content yields one packet with an empty payload.
std::vector<DataPacket> segment_file(const RadarDataName& base, const Bytes& content,
                                     std::size_t chunk_size = kDefaultChunkSize);

/// Returns a copy of `p` carrying `next` as its piggybacked announcement,
/// with the digest recomputed.
DataPacket attach_piggyback(const DataPacket& p, const Name& next);

/// True iff the stored digest matches the packet content.
bool verify_digest(const DataPacket& p);

/// Radar state snapshot returned for an initialization Interest.
struct InitResponse {
    std::string radar_id;
    std::uint64_t current_round = 0;
    std::uint64_t current_seq = 1;
    std::uint64_t number_of_files = 0;

    auto operator<=>(const InitResponse&) const = default;
};

Bytes encode_init_response(const InitResponse& r);
InitResponse decode_init_response(const Bytes& payload);

/// One-line tab-separated debug rendering for trace dumps.
std::string debug_line(const InterestPacket& p);
std::string debug_line(const DataPacket& p);

}  // namespace radarndn
