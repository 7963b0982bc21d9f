#pragma once

#include "manetsim/types.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <queue>
#include <vector>

namespace manetsim {

// Discrete-event scheduling core. Events fire in (time, insertion-sequence)
// order; ties are broken by insertion order, which makes every run fully
// deterministic. Single-threaded: one kernel per run.
class Kernel {
    struct Event {
        SimTime at;
        std::uint64_t seq;
        std::function<void()> fn;
        bool cancelled = false;
    };

public:
    // Permits cancellation of a pending event. Default-constructed handles
    // are inert.
    class EventHandle {
    public:
        EventHandle() = default;

        // Returns true if the event was still pending and is now cancelled.
        bool cancel() {
            auto ev = event_.lock();
            if (!ev || ev->cancelled)
                return false;
            ev->cancelled = true;
            return true;
        }

        bool pending() const {
            auto ev = event_.lock();
            return ev && !ev->cancelled;
        }

    private:
        friend class Kernel;
        explicit EventHandle(std::weak_ptr<Event> ev) : event_(std::move(ev)) {}
        std::weak_ptr<Event> event_;
    };

    SimTime now() const { return clock_; }

    EventHandle schedule(SimTime at, std::function<void()> fn) {
        if (at < clock_)
            throw std::logic_error("Kernel::schedule: event time lies in the past");
        auto ev = std::make_shared<Event>(Event{at, next_seq_++, std::move(fn)});
        queue_.push(ev);
        return EventHandle(ev);
    }

    EventHandle schedule_in(double delay, std::function<void()> fn) {
        return schedule(clock_ + delay, std::move(fn));
    }

    // Executes every event with time <= t_end, then advances the clock to
    // t_end. Returns the number of events executed (cancelled ones do not
    // count).
    std::size_t run_until(SimTime t_end) {
        if (t_end < clock_)
            throw std::logic_error("Kernel::run_until: t_end lies in the past");
        std::size_t executed = 0;
        while (!queue_.empty() && queue_.top()->at <= t_end) {
            auto ev = queue_.top();
            queue_.pop();
            if (ev->cancelled)
                continue;
            clock_ = ev->at;
            ev->fn();
            ++executed;
        }
        clock_ = t_end;
        return executed;
    }

    std::size_t pending_count() const { return queue_.size(); }

private:
    struct Later {
        bool operator()(const std::shared_ptr<Event>& a, const std::shared_ptr<Event>& b) const {
            if (a->at != b->at)
                return a->at > b->at;
            return a->seq > b->seq;
        }
    };

    SimTime clock_ = 0.0;
    std::uint64_t next_seq_ = 0;
    std::priority_queue<std::shared_ptr<Event>, std::vector<std::shared_ptr<Event>>, Later> queue_;
};

} // namespace manetsim
