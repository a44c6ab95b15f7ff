#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace domlab {

/// Thrown by a search when its Deadline passes.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// Optional wall-clock deadline polled by long searches.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    static Deadline after(std::chrono::milliseconds ms) { return Deadline(Clock::now() + ms); }
    static Deadline after_ms(std::int64_t ms) {
        return ms > 0 ? after(std::chrono::milliseconds(ms)) : Deadline();
    }

    bool unlimited() const { return !at_; }

    /// Cheap enough for inner loops: reads the clock every 1024 calls.
    void poll() const {
        if (!at_) return;
        if ((++ticks_ & 1023u) != 0) return;
        if (Clock::now() > *at_) throw BudgetExceeded();
    }

private:
    explicit Deadline(Clock::time_point at) : at_(at) {}

    std::optional<Clock::time_point> at_;
    mutable std::uint32_t ticks_ = 0;
};

}  // namespace domlab
