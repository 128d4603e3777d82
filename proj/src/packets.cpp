#include "radarndn/packets.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <sstream>
#include <stdexcept>

namespace radarndn {

InterestPacket make_interest(const Name& name, std::uint64_t nonce, double lifetime_ms) {
    InterestPacket p;
    p.name = name;
    p.nonce = nonce;
    p.lifetime_ms = lifetime_ms;
    p.kind = is_init_name(name) ? InterestKind::Init : InterestKind::Data;
    return p;
}

Digest compute_digest(const DataPacket& p) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    Digest out{};
    unsigned int len = 0;
    const std::string name = p.name.str();
    const std::string pb = p.piggyback_next ? p.piggyback_next->str() : std::string{};
    // Length-delimited fields so (name, payload, piggyback) boundaries are unambiguous.
    auto put_u64 = [&](std::uint64_t v) {
        std::uint8_t buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
        EVP_DigestUpdate(ctx, buf, sizeof buf);
    };
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("EVP_DigestInit_ex failed");
    }
    put_u64(name.size());
    EVP_DigestUpdate(ctx, name.data(), name.size());
    put_u64(p.payload.size());
    if (!p.payload.empty()) EVP_DigestUpdate(ctx, p.payload.data(), p.payload.size());
    put_u64(pb.size());
    if (!pb.empty()) EVP_DigestUpdate(ctx, pb.data(), pb.size());
    EVP_DigestFinal_ex(ctx, out.data(), &len);
    EVP_MD_CTX_free(ctx);
    if (len != out.size()) throw std::runtime_error("unexpected digest length");
    return out;
}

DataPacket make_data(Name name, Bytes payload, std::optional<std::uint64_t> final_block,
                     std::optional<Name> piggyback_next) {
    DataPacket p;
    p.name = std::move(name);
    p.payload = std::move(payload);
    p.final_block = final_block;
    p.piggyback_next = std::move(piggyback_next);
    p.digest = compute_digest(p);
    return p;
}

std::vector<DataPacket> segment_file(const RadarDataName& base, const Bytes& content,
                                     std::size_t chunk_size) {
    if (chunk_size == 0) throw std::invalid_argument("chunk_size must be >= 1");
    std::size_t k = content.empty() ? 1 : (content.size() + chunk_size - 1) / chunk_size;
    std::vector<DataPacket> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t begin = i * chunk_size;
        std::size_t end = std::min(content.size(), begin + chunk_size);
        Bytes chunk(content.begin() + begin, content.begin() + end);
        out.push_back(make_data(base.with_segment(i).to_name(), std::move(chunk), k - 1));
    }
    return out;
}

DataPacket attach_piggyback(const DataPacket& p, const Name& next) {
    DataPacket out = p;
    out.piggyback_next = next;
    out.digest = compute_digest(out);
    return out;
}

bool verify_digest(const DataPacket& p) { return compute_digest(p) == p.digest; }

Bytes encode_init_response(const InitResponse& r) {
    std::string s = r.radar_id + " " + std::to_string(r.current_round) + " " +
                    std::to_string(r.current_seq) + " " + std::to_string(r.number_of_files);
    return Bytes(s.begin(), s.end());
}

InitResponse decode_init_response(const Bytes& payload) {
    std::istringstream is(std::string(payload.begin(), payload.end()));
    InitResponse r;
    if (!(is >> r.radar_id >> r.current_round >> r.current_seq >> r.number_of_files))
        throw std::runtime_error("malformed init response payload");
    return r;
}

std::string debug_line(const InterestPacket& p) {
    std::ostringstream os;
    os << "I\t" << p.name.str() << "\t" << p.nonce << "\t" << p.lifetime_ms << "\t"
       << (p.kind == InterestKind::Init ? "init" : "data");
    return os.str();
}

std::string debug_line(const DataPacket& p) {
    std::ostringstream os;
    os << "D\t" << p.name.str() << "\t" << p.payload.size() << "\t";
    if (p.final_block)
        os << *p.final_block;
    else
        os << "-";
    os << "\t" << (p.piggyback_next ? p.piggyback_next->str() : "-");
    return os.str();
}

}  // namespace radarndn
