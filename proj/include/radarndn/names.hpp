#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radarndn {

/// Raised when a string does not match the grammar of the name type being parsed.
class MalformedName : public std::runtime_error {
public:
    explicit MalformedName(const std::string& what) : std::runtime_error(what) {}
};

/// Hierarchical name: an ordered list of non-empty components, none containing '/'.
/// Canonical string form is "/c1/c2/.../cn".
struct Name {
    std::vector<std::string> components;

    Name() = default;
    explicit Name(std::vector<std::string> comps) : components(std::move(comps)) {}

    std::string str() const;
    bool empty() const { return components.empty(); }
    std::size_t size() const { return components.size(); }

    // True if `prefix` equals the first prefix.size() components of *this.
    bool has_prefix(const Name& prefix) const;

    auto operator<=>(const Name&) const = default;
};

Name parse_name(const std::string& s);
std::string format_name(const Name& n);

/// Timestamp carried inside a data name, informational only.
struct NameTimestamp {
    std::string date;  // YYYYMMDD
    std::string time;  // HHMMSS

    auto operator<=>(const NameTimestamp&) const = default;
};

/// Round/sequence name of one radar data file (optionally one segment of it).
/// Canonical form: /data/<radar_id>/_round=<round>/_seq=<seq>[/<YYYYMMDD>/<HHMMSS>][/_segment=<k>]
struct RadarDataName {
    std::string radar_id;
    std::uint64_t round = 0;
    std::uint64_t seq = 1;  // 1-based within round
    std::optional<NameTimestamp> timestamp;
    std::optional<std::uint64_t> segment;  // 0-based chunk index

    Name to_name(bool alpha_seq = false) const;
    std::string str(bool alpha_seq = false) const { return to_name(alpha_seq).str(); }

    RadarDataName with_segment(std::uint64_t k) const;
    RadarDataName without_segment() const;

    // Identity of a file (and segment) ignores the informational timestamp.
    friend bool operator==(const RadarDataName& a, const RadarDataName& b) {
        return a.radar_id == b.radar_id && a.round == b.round && a.seq == b.seq &&
               a.segment == b.segment;
    }
    friend auto operator<=>(const RadarDataName& a, const RadarDataName& b) {
        if (auto c = a.radar_id <=> b.radar_id; c != 0) return c;
        if (auto c = a.round <=> b.round; c != 0) return c;
        if (auto c = a.seq <=> b.seq; c != 0) return c;
        return a.segment <=> b.segment;
    }
};

RadarDataName make_data_name(const std::string& radar_id, std::uint64_t round, std::uint64_t seq,
                             std::optional<NameTimestamp> timestamp = std::nullopt);

/// Parses a canonical data name. Throws MalformedName if `n` is not one.
RadarDataName parse_data_name(const Name& n);
RadarDataName parse_data_name(const std::string& s);
bool is_data_name(const Name& n);

/// Name advancement: seq+1 within the round, wrapping to (round+1, seq=1).
/// `n` must not carry a segment component.
RadarDataName next_data_name(const RadarDataName& n, std::uint64_t seqs_per_round);

/// Bootstrap query name: /Interest/<radar_id>/_current_round/current_seq/number_of_files
struct InitInterestName {
    std::string radar_id;

    Name to_name() const;
    std::string str() const { return to_name().str(); }

    auto operator<=>(const InitInterestName&) const = default;
};

bool is_init_name(const Name& n);
InitInterestName parse_init_name(const Name& n);

/// Legacy time-based file name: <location>.<state>-<YYYYMMDD>-<HHMMSS>.<suffix>
struct LegacyFileName {
    std::string location;
    std::string state;
    std::string date;  // YYYYMMDD
    std::string time;  // HHMMSS
    std::string format_suffix;

    std::string str() const;

    auto operator<=>(const LegacyFileName&) const = default;
};

LegacyFileName parse_legacy(const std::string& s);

/// Round derived from a clock: floor(epoch/duration), optionally mod n.
std::uint64_t current_round(std::uint64_t epoch_seconds, std::uint64_t round_duration_s,
                            std::optional<std::uint64_t> n_modulus = std::nullopt);

/// Spreadsheet-style alpha rendering of a 1-based sequence (1->A, 26->Z, 27->AA).
std::string alpha_seq(std::uint64_t seq);

}  // namespace radarndn
