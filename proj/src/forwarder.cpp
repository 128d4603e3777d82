#include "radarndn/forwarder.hpp"

#include <algorithm>

namespace radarndn {

const DataPacket* ContentStore::lookup(const Name& name) {
    auto it = index_.find(name.str());
    if (it == index_.end()) return nullptr;
    lru_.splice(lru_.begin(), lru_, it->second);  // refresh recency
    return &lru_.front().second;
}

void ContentStore::insert(const DataPacket& p) {
    if (capacity_ == 0) return;
    std::string key = p.name.str();
    auto it = index_.find(key);
    if (it != index_.end()) {
        it->second->second = p;
        lru_.splice(lru_.begin(), lru_, it->second);
        return;
    }
    if (lru_.size() >= capacity_) {
        index_.erase(lru_.back().first);
        lru_.pop_back();
        ++evictions_;
    }
    lru_.emplace_front(key, p);
    index_[key] = lru_.begin();
}

void FibTable::add_route(const Name& prefix, FaceId face, int cost) {
    auto& entry = routes_[prefix.str()];
    entry.prefix = prefix;
    entry.routes.push_back({face, cost});
}

std::vector<FaceId> FibTable::lookup(const Name& name) const {
    const Entry* best = nullptr;
    for (const auto& [key, entry] : routes_) {
        if (!name.has_prefix(entry.prefix)) continue;
        if (!best || entry.prefix.size() > best->prefix.size()) best = &entry;
    }
    if (!best) return {};
    auto routes = best->routes;
    std::stable_sort(routes.begin(), routes.end(),
                     [](const Route& a, const Route& b) { return a.cost < b.cost; });
    std::vector<FaceId> faces;
    faces.reserve(routes.size());
    for (const auto& r : routes) faces.push_back(r.face);
    return faces;
}

std::vector<Emission> Forwarder::on_interest(const InterestPacket& i, FaceId ingress, SimTime now) {
    ++counters_.interests_in;

    if (const DataPacket* cached = cs_.lookup(i.name)) {
        ++counters_.cs_hits;
        ++counters_.data_out;
        return {{ingress, *cached}};
    }

    const std::string key = i.name.str();
    auto it = pit_.find(key);
    if (it != pit_.end() && it->second.expiry <= now) {
        pit_.erase(it);
        ++counters_.pit_expirations;
        it = pit_.end();
    }

    auto forward_upstream = [&]() -> std::vector<Emission> {
        for (FaceId f : fib_.lookup(i.name)) {
            if (f == ingress) continue;
            ++counters_.interests_out;
            return {{f, i}};
        }
        ++counters_.drops_no_route;
        return {};
    };

    if (it != pit_.end()) {
        PitEntry& entry = it->second;
        if (entry.nonces.count(i.nonce)) return {};  // loop suppression
        entry.nonces.insert(i.nonce);
        entry.expiry = std::max(entry.expiry, now + i.lifetime_ms / 1000.0);
        if (!entry.downstream_faces.count(ingress)) {
            entry.downstream_faces.insert(ingress);  // aggregation
            return {};
        }
        // Fresh nonce from a face already waiting on this name: consumer
        // retransmission. Forward upstream again so loss can be recovered.
        return forward_upstream();
    }

    auto emissions = forward_upstream();
    if (emissions.empty()) return emissions;  // no route: nothing pending

    PitEntry entry;
    entry.name = i.name;
    entry.downstream_faces.insert(ingress);
    entry.nonces.insert(i.nonce);
    entry.expiry = now + i.lifetime_ms / 1000.0;
    pit_.emplace(key, std::move(entry));
    return emissions;
}

std::vector<Emission> Forwarder::on_data(const DataPacket& d, FaceId ingress, SimTime now) {
    (void)ingress;
    ++counters_.data_in;

    auto it = pit_.find(d.name.str());
    if (it == pit_.end() || it->second.expiry <= now) {
        if (it != pit_.end()) {
            pit_.erase(it);
            ++counters_.pit_expirations;
        }
        ++counters_.drops_unsolicited;  // unsolicited Data is never cached
        return {};
    }

    std::vector<Emission> out;
    for (FaceId f : it->second.downstream_faces) {
        ++counters_.data_out;
        out.push_back({f, d});
    }
    pit_.erase(it);
    std::uint64_t before = cs_.evictions();
    cs_.insert(d);
    counters_.cs_evictions += cs_.evictions() - before;
    return out;
}

std::size_t Forwarder::expire_pit(SimTime now) {
    std::size_t n = 0;
    for (auto it = pit_.begin(); it != pit_.end();) {
        if (it->second.expiry <= now) {
            it = pit_.erase(it);
            ++n;
        } else {
            ++it;
        }
    }
    counters_.pit_expirations += n;
    return n;
}

const PitEntry* Forwarder::pit_find(const Name& name) const {
    auto it = pit_.find(name.str());
    return it == pit_.end() ? nullptr : &it->second;
}

}  // namespace radarndn
