#pragma once

#include <cstdint>
#include <list>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "radarndn/packets.hpp"

namespace radarndn {

using FaceId = std::int32_t;
using SimTime = double;  // seconds

/// Per-node counters exported to the metrics sink.
struct NodeCounters {
    std::uint64_t interests_in = 0;
    std::uint64_t interests_out = 0;
    std::uint64_t data_in = 0;
    std::uint64_t data_out = 0;
    std::uint64_t cs_hits = 0;
    std::uint64_t cs_evictions = 0;
    std::uint64_t pit_expirations = 0;
    std::uint64_t drops_no_route = 0;
    std::uint64_t drops_unsolicited = 0;
};

/// Exact-name packet cache with LRU replacement. Lookup hits refresh recency.
class ContentStore {
public:
    explicit ContentStore(std::size_t capacity) : capacity_(capacity) {}

    const DataPacket* lookup(const Name& name);
    void insert(const DataPacket& p);
    std::size_t size() const { return lru_.size(); }
    std::size_t capacity() const { return capacity_; }
    std::uint64_t evictions() const { return evictions_; }

private:
    using LruList = std::list<std::pair<std::string, DataPacket>>;  // front = most recent
    std::size_t capacity_;
    LruList lru_;
    std::map<std::string, LruList::iterator> index_;
    std::uint64_t evictions_ = 0;
};

struct PitEntry {
    Name name;
    std::set<FaceId> downstream_faces;
    std::set<std::uint64_t> nonces;
    SimTime expiry = 0;
};

/// Name-prefix routing table with longest-prefix match. Equal-cost faces keep
/// registration order; lookups return faces cost-ascending.
class FibTable {
public:
    void add_route(const Name& prefix, FaceId face, int cost = 0);
    std::vector<FaceId> lookup(const Name& name) const;
    bool empty() const { return routes_.empty(); }

private:
    struct Route {
        FaceId face;
        int cost;
    };
    struct Entry {
        Name prefix;
        std::vector<Route> routes;  // registration order
    };
    std::map<std::string, Entry> routes_;  // keyed by canonical prefix string
};

/// A packet the node must place on a face.
struct Emission {
    FaceId face;
    std::variant<InterestPacket, DataPacket> packet;
};

/// One node's NDN forwarding plane: CS + PIT + FIB, Interest aggregation and
/// Data fan-out. Owned by a single simulation loop; no internal locking.
class Forwarder {
public:
    explicit Forwarder(std::string node_id, std::size_t cs_capacity = kDefaultCsCapacity)
        : node_id_(std::move(node_id)), cs_(cs_capacity) {}

    static constexpr std::size_t kDefaultCsCapacity = 4096;

    std::vector<Emission> on_interest(const InterestPacket& i, FaceId ingress, SimTime now);
    std::vector<Emission> on_data(const DataPacket& d, FaceId ingress, SimTime now);

    /// Removes every PIT entry with expiry <= now; returns how many.
    std::size_t expire_pit(SimTime now);

    FibTable& fib() { return fib_; }
    ContentStore& cs() { return cs_; }
    const std::string& node_id() const { return node_id_; }
    const NodeCounters& counters() const { return counters_; }

    std::size_t pit_size() const { return pit_.size(); }
    const PitEntry* pit_find(const Name& name) const;

private:
    std::string node_id_;
    ContentStore cs_;
    std::map<std::string, PitEntry> pit_;
    FibTable fib_;
    NodeCounters counters_;
};

}  // namespace radarndn
