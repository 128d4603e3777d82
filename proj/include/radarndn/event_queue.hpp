#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "radarndn/forwarder.hpp"  // SimTime

namespace radarndn {

/// Min-ordered event collection. Ties on timestamp dispatch in insertion
/// order (sequence number), so runs are reproducible.
class EventQueue {
public:
    void schedule(SimTime t, std::function<void()> fn) {
        heap_.push(Event{t, next_seq_++, std::move(fn)});
    }

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    SimTime next_time() const { return heap_.top().t; }

    /// Pops and runs the earliest event; returns its timestamp.
    SimTime dispatch_next() {
        Event ev = heap_.top();
        heap_.pop();
        ev.fn();
        return ev.t;
    }

private:
    struct Event {
        SimTime t;
        std::uint64_t seq;
        std::function<void()> fn;
    };
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.t != b.t) return a.t > b.t;
            return a.seq > b.seq;
        }
    };
    std::priority_queue<Event, std::vector<Event>, Later> heap_;
    std::uint64_t next_seq_ = 0;
};

}  // namespace radarndn
