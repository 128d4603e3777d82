#include "radarndn/names.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace radarndn {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw MalformedName(std::string("not an unsigned integer in ") + what + ": '" + s + "'");
    return v;
}

// Component of the form "<marker><value>", e.g. "_round=15".
std::optional<std::uint64_t> marker_value(const std::string& comp, const std::string& marker) {
    if (comp.size() <= marker.size() || comp.compare(0, marker.size(), marker) != 0)
        return std::nullopt;
    return parse_u64(comp.substr(marker.size()), marker.c_str());
}

}  // namespace

std::string Name::str() const {
    std::string out;
    for (const auto& c : components) {
        out += '/';
        out += c;
    }
    return out;
}

bool Name::has_prefix(const Name& prefix) const {
    if (prefix.components.size() > components.size()) return false;
    return std::equal(prefix.components.begin(), prefix.components.end(), components.begin());
}

Name parse_name(const std::string& s) {
    if (s.empty()) throw MalformedName("empty name string");
    if (s.front() != '/') throw MalformedName("name must start with '/': '" + s + "'");
    Name n;
    std::size_t pos = 1;
    while (pos <= s.size()) {
        std::size_t slash = s.find('/', pos);
        std::size_t end = (slash == std::string::npos) ? s.size() : slash;
        if (end == pos) throw MalformedName("empty component in '" + s + "'");
        n.components.emplace_back(s.substr(pos, end - pos));
        if (slash == std::string::npos) break;
        pos = slash + 1;
        if (pos >= s.size())  // trailing '/'
            throw MalformedName("empty component in '" + s + "'");
    }
    return n;
}

std::string format_name(const Name& n) { return n.str(); }

std::string alpha_seq(std::uint64_t seq) {
    // 1 -> A ... 26 -> Z, 27 -> AA (bijective base 26)
    std::string out;
    while (seq > 0) {
        std::uint64_t rem = (seq - 1) % 26;
        out.insert(out.begin(), static_cast<char>('A' + rem));
        seq = (seq - 1) / 26;
    }
    return out.empty() ? "A" : out;
}

Name RadarDataName::to_name(bool alpha) const {
    Name n;
    n.components.push_back("data");
    n.components.push_back(radar_id);
    n.components.push_back("_round=" + std::to_string(round));
    n.components.push_back("_seq=" + (alpha ? alpha_seq(seq) : std::to_string(seq)));
    if (timestamp) {
        n.components.push_back(timestamp->date);
        n.components.push_back(timestamp->time);
    }
    if (segment) n.components.push_back("_segment=" + std::to_string(*segment));
    return n;
}

RadarDataName RadarDataName::with_segment(std::uint64_t k) const {
    RadarDataName out = *this;
    out.segment = k;
    return out;
}

RadarDataName RadarDataName::without_segment() const {
    RadarDataName out = *this;
    out.segment.reset();
    return out;
}

RadarDataName make_data_name(const std::string& radar_id, std::uint64_t round, std::uint64_t seq,
                             std::optional<NameTimestamp> timestamp) {
    RadarDataName n;
    n.radar_id = radar_id;
    n.round = round;
    n.seq = seq;
    n.timestamp = std::move(timestamp);
    return n;
}

bool is_data_name(const Name& n) {
    if (n.components.size() < 4 || n.components[0] != "data") return false;
    return n.components[2].starts_with("_round=") && n.components[3].starts_with("_seq=");
}

RadarDataName parse_data_name(const Name& n) {
    if (n.components.size() < 4 || n.components[0] != "data")
        throw MalformedName("not a data name: '" + n.str() + "'");
    RadarDataName out;
    out.radar_id = n.components[1];
    auto round = marker_value(n.components[2], "_round=");
    auto seq = marker_value(n.components[3], "_seq=");
    if (!round || !seq) throw MalformedName("missing _round/_seq markers in '" + n.str() + "'");
    out.round = *round;
    out.seq = *seq;

    std::size_t i = 4;
    if (i < n.components.size() && all_digits(n.components[i])) {
        if (n.components[i].size() != 8 || i + 1 >= n.components.size() ||
            !all_digits(n.components[i + 1]) || n.components[i + 1].size() != 6)
            throw MalformedName("bad timestamp components in '" + n.str() + "'");
        out.timestamp = NameTimestamp{n.components[i], n.components[i + 1]};
        i += 2;
    }
    if (i < n.components.size()) {
        auto seg = marker_value(n.components[i], "_segment=");
        if (!seg) throw MalformedName("unexpected component '" + n.components[i] + "' in '" + n.str() + "'");
        out.segment = *seg;
        ++i;
    }
    if (i != n.components.size())
        throw MalformedName("trailing components in '" + n.str() + "'");
    return out;
}

RadarDataName parse_data_name(const std::string& s) { return parse_data_name(parse_name(s)); }

RadarDataName next_data_name(const RadarDataName& n, std::uint64_t seqs_per_round) {
    RadarDataName out = n;
    out.timestamp.reset();
    if (n.seq < seqs_per_round) {
        out.seq = n.seq + 1;
    } else {
        out.round = n.round + 1;
        out.seq = 1;
    }
    return out;
}

Name InitInterestName::to_name() const {
    return Name{{"Interest", radar_id, "_current_round", "current_seq", "number_of_files"}};
}

bool is_init_name(const Name& n) {
    return n.components.size() == 5 && n.components[0] == "Interest" &&
           n.components[2] == "_current_round" && n.components[3] == "current_seq" &&
           n.components[4] == "number_of_files";
}

InitInterestName parse_init_name(const Name& n) {
    if (!is_init_name(n)) throw MalformedName("not an init interest name: '" + n.str() + "'");
    return InitInterestName{n.components[1]};
}

std::string LegacyFileName::str() const {
    return location + "." + state + "-" + date + "-" + time + "." + format_suffix;
}

LegacyFileName parse_legacy(const std::string& s) {
    // <location>.<state>-<YYYYMMDD>-<HHMMSS>.<suffix>; suffix may contain dots.
    std::size_t dot = s.find('.');
    if (dot == std::string::npos || dot == 0) throw MalformedName("legacy name without location: '" + s + "'");
    std::size_t dash1 = s.find('-', dot + 1);
    if (dash1 == std::string::npos || dash1 == dot + 1)
        throw MalformedName("legacy name without state: '" + s + "'");
    LegacyFileName out;
    out.location = s.substr(0, dot);
    out.state = s.substr(dot + 1, dash1 - dot - 1);
    if (out.state.find('.') != std::string::npos)
        throw MalformedName("legacy state contains '.': '" + s + "'");
    std::size_t dash2 = s.find('-', dash1 + 1);
    if (dash2 == std::string::npos) throw MalformedName("legacy name without time: '" + s + "'");
    out.date = s.substr(dash1 + 1, dash2 - dash1 - 1);
    std::size_t dot2 = s.find('.', dash2 + 1);
    if (dot2 == std::string::npos) throw MalformedName("legacy name without suffix: '" + s + "'");
    out.time = s.substr(dash2 + 1, dot2 - dash2 - 1);
    out.format_suffix = s.substr(dot2 + 1);
    if (out.date.size() != 8 || !all_digits(out.date))
        throw MalformedName("legacy date not YYYYMMDD: '" + s + "'");
    if (out.time.size() != 6 || !all_digits(out.time))
        throw MalformedName("legacy time not HHMMSS: '" + s + "'");
    if (out.format_suffix.empty()) throw MalformedName("legacy suffix empty: '" + s + "'");
    return out;
}

std::uint64_t current_round(std::uint64_t epoch_seconds, std::uint64_t round_duration_s,
                            std::optional<std::uint64_t> n_modulus) {
    std::uint64_t r = epoch_seconds / round_duration_s;
    if (n_modulus) r %= *n_modulus;
    return r;
}

}  // namespace radarndn
