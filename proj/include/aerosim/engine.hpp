#ifndef AEROSIM_ENGINE_HPP
#define AEROSIM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace aerosim {

/// Simulation time in seconds.
using SimTime = double;

enum class EventKind {
    MessageDue,
    FrameStart,
    SlotStart,
    ReceptionComplete,
    SimEnd,
};

/// Deterministic discrete-event core. Events execute in (time, sequence)
/// order; the sequence number breaks ties FIFO among equal times. A single
/// simulation is strictly single-threaded.
class Simulation {
public:
    explicit Simulation(SimTime end) : end_(end) {
        if (end < 0.0)
            throw std::invalid_argument("simulation end time must be non-negative");
    }

    SimTime now() const { return now_; }
    SimTime end() const { return end_; }

    void schedule(SimTime t, EventKind kind, std::function<void()> action) {
        if (t < now_)
            throw std::logic_error("schedule: event time " + std::to_string(t) +
                                   " is in the past (now=" + std::to_string(now_) + ")");
        queue_.push(Event{t, next_seq_++, kind, std::move(action)});
    }

    /// Executes all events with time <= end, in order. The clock never runs
    /// backwards and finishes exactly at end.
    void run() {
        while (!queue_.empty() && queue_.top().time <= end_) {
            Event ev = queue_.top();
            queue_.pop();
            now_ = ev.time;
            ev.action();
        }
        now_ = end_;
    }

    /// Executes the single next event, if any is due. Test hook.
    std::optional<std::pair<SimTime, EventKind>> step() {
        if (queue_.empty() || queue_.top().time > end_)
            return std::nullopt;
        Event ev = queue_.top();
        queue_.pop();
        now_ = ev.time;
        ev.action();
        return std::make_pair(ev.time, ev.kind);
    }

    std::size_t pending() const { return queue_.size(); }

private:
    struct Event {
        SimTime time;
        std::uint64_t sequence;
        EventKind kind;
        std::function<void()> action;
    };
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time != b.time) return a.time > b.time;
            return a.sequence > b.sequence;
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    std::uint64_t next_seq_ = 0;
    SimTime now_ = 0.0;
    SimTime end_;
};

} // namespace aerosim

#endif
