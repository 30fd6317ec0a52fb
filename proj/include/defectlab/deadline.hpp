#pragma once

#include <chrono>

#include "defectlab/errors.hpp"

namespace defectlab {

class Deadline {
  public:
    using Clock = std::chrono::steady_clock;

    // No limit.
    Deadline() = default;
    explicit Deadline(std::chrono::duration<double> budget)
        : limited_(budget.count() > 0),
          at_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}

    static Deadline seconds(double s) { return Deadline(std::chrono::duration<double>(s)); }

    bool expired() const { return limited_ && Clock::now() >= at_; }

    // Cheap enough to call from inner loops: the clock is read every 1024 calls.
    void check() {
        if (!limited_ || (++ticks_ & 1023U) != 0) return;
        if (Clock::now() >= at_) throw Inconclusive();
    }

  private:
    bool limited_ = false;
    Clock::time_point at_{};
    unsigned ticks_ = 0;
};

}  // namespace defectlab
