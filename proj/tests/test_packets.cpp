#include "radarndn/packets.hpp"

#include <doctest.h>

#include "radarndn/rng.hpp"

using namespace radarndn;

namespace {

Bytes pattern_bytes(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Bytes b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng.next());
    return b;
}

// Independent reassembly oracle: slice sizes by plain ceil arithmetic.
std::vector<std::size_t> expected_slice_sizes(std::size_t total, std::size_t chunk) {
    if (total == 0) return {0};
    std::vector<std::size_t> sizes;
    for (std::size_t off = 0; off < total; off += chunk)
        sizes.push_back(std::min(chunk, total - off));
    return sizes;
}

}  // namespace

TEST_SUITE("packets") {

TEST_CASE("segment_file slices and marks the final block") {
    auto base = make_data_name("radar1", 1, 1);
    auto content = pattern_bytes(20000, 1);
    auto pkts = segment_file(base, content, 8192);

    // frozen from the ceil/slice oracle: ceil(20000/8192) = 3
    REQUIRE(pkts.size() == 3);
    CHECK(pkts[0].payload.size() == 8192);
    CHECK(pkts[1].payload.size() == 8192);
    CHECK(pkts[2].payload.size() == 3616);
    auto sizes = expected_slice_sizes(20000, 8192);
    for (std::size_t i = 0; i < pkts.size(); ++i) {
        CHECK(pkts[i].payload.size() == sizes[i]);
        CHECK(pkts[i].final_block == 2);
        CHECK(parse_data_name(pkts[i].name).segment == i);
        CHECK(verify_digest(pkts[i]));
    }
}

TEST_CASE("segment_file edge cases") {
    auto base = make_data_name("radar1", 1, 1);

    auto empty = segment_file(base, {}, 8192);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].payload.empty());
    CHECK(empty[0].final_block == 0);

    auto exact = segment_file(base, pattern_bytes(8192, 2), 8192);
    REQUIRE(exact.size() == 1);
    CHECK(exact[0].final_block == 0);
}

TEST_CASE("reassembly property: concatenated payloads equal the content") {
    Rng rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t size = rng.next() % (512 * 1024);
        std::size_t chunk = 1 + rng.next() % 9000;
        auto content = pattern_bytes(size, rng.next());
        auto pkts = segment_file(make_data_name("r", 3, 2), content, chunk);
        CHECK(pkts.size() == expected_slice_sizes(size, chunk).size());
        Bytes joined;
        std::uint64_t final_block = pkts.front().final_block.value();
        for (const auto& p : pkts) {
            CHECK(p.final_block == final_block);  // same on every segment
            joined.insert(joined.end(), p.payload.begin(), p.payload.end());
        }
        CHECK(joined == content);
    }

    // one large file at the invariant's stated scale
    auto big = pattern_bytes(16 * 1024 * 1024, 9);
    auto pkts = segment_file(make_data_name("r", 1, 1), big, kDefaultChunkSize);
    Bytes joined;
    for (const auto& p : pkts) joined.insert(joined.end(), p.payload.begin(), p.payload.end());
    CHECK(joined == big);
}

TEST_CASE("attach_piggyback sets the field and refreshes the digest") {
    auto pkt = make_data(make_data_name("radar1", 1, 3).with_segment(0).to_name(),
                         pattern_bytes(100, 3), 0);
    Name next = make_data_name("radar1", 2, 1).to_name();

    auto with = attach_piggyback(pkt, next);
    CHECK(with.piggyback_next == next);
    CHECK(verify_digest(with));
    CHECK(with.wire_size() - pkt.wire_size() == next.str().size());

    Name next2 = make_data_name("radar1", 2, 2).to_name();
    auto overwritten = attach_piggyback(with, next2);
    CHECK(overwritten.piggyback_next == next2);
    CHECK(verify_digest(overwritten));
}

TEST_CASE("verify_digest detects tampering") {
    auto pkt = make_data(make_data_name("radar1", 1, 1).with_segment(0).to_name(),
                         pattern_bytes(256, 4), 0, make_data_name("radar1", 1, 2).to_name());
    CHECK(verify_digest(pkt));

    auto flipped = pkt;
    flipped.payload[17] ^= 0x01;
    CHECK_FALSE(verify_digest(flipped));

    auto swapped = pkt;
    swapped.piggyback_next = make_data_name("radar9", 1, 2).to_name();
    CHECK_FALSE(verify_digest(swapped));

    auto renamed = pkt;
    renamed.name = make_data_name("radar1", 1, 2).with_segment(0).to_name();
    CHECK_FALSE(verify_digest(renamed));
}

TEST_CASE("digest is deterministic") {
    auto a = make_data(make_data_name("r", 1, 1).to_name(), pattern_bytes(64, 5), 0);
    auto b = make_data(make_data_name("r", 1, 1).to_name(), pattern_bytes(64, 5), 0);
    CHECK(a.digest == b.digest);
}

TEST_CASE("interest kind follows the name grammar") {
    auto init = make_interest(InitInterestName{"radar1"}.to_name(), 1);
    CHECK(init.kind == InterestKind::Init);
    auto data = make_interest(make_data_name("radar1", 1, 1).with_segment(0).to_name(), 2);
    CHECK(data.kind == InterestKind::Data);
    CHECK(data.wire_size() == kPacketHeaderBytes + data.name.str().size());
}

TEST_CASE("init response codec round-trips") {
    InitResponse r{"radar2", 15, 7, 3};
    CHECK(decode_init_response(encode_init_response(r)) == r);
    InitResponse fresh{"radar1", 0, 1, 0};
    CHECK(decode_init_response(encode_init_response(fresh)) == fresh);
}

TEST_CASE("debug lines are one record per line") {
    auto pkt = make_data(make_data_name("r", 1, 1).with_segment(0).to_name(), {}, 0);
    CHECK(debug_line(pkt).find('\n') == std::string::npos);
    auto i = make_interest(make_data_name("r", 1, 1).to_name(), 7);
    CHECK(debug_line(i).find('\t') != std::string::npos);
}

}  // TEST_SUITE
