#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace shadowchi {

// Wall-clock limit shared by the exhaustive searches. A default-constructed
// budget never expires.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    Budget() = default;

    static Budget unlimited() { return Budget{}; }

    static Budget milliseconds(std::int64_t ms) {
        Budget b;
        b.deadline_ = Clock::now() + std::chrono::milliseconds(ms);
        return b;
    }

    // Reads SHADOWCHI_BUDGET_MS; unlimited when unset or unparsable.
    static Budget from_environment();

    bool limited() const { return deadline_.has_value(); }

    bool expired() const { return deadline_ && Clock::now() >= *deadline_; }

private:
    std::optional<Clock::time_point> deadline_;
};

// Amortizes clock reads in tight search loops.
class BudgetProbe {
public:
    explicit BudgetProbe(const Budget& budget) : budget_(budget) {}

    bool tick() {
        if (!budget_.limited()) return false;
        if ((++counter_ & 0x3ff) != 0) return tripped_;
        tripped_ = tripped_ || budget_.expired();
        return tripped_;
    }

    bool tripped() const { return tripped_; }

private:
    const Budget& budget_;
    std::uint32_t counter_ = 0;
    bool tripped_ = false;
};

}  // namespace shadowchi
