#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>

#include "ccmo/types.hpp"

namespace ccmo {

class Problem;

enum class Phase { Decomposition, Optimization };

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("fitness evaluation budget exhausted") {}
};

/// Monotone counter of objective-set evaluations, split between the
/// decomposition and optimization stages. The sum never exceeds the limit.
class EvaluationBudget {
public:
    static constexpr std::int64_t unlimited = std::numeric_limits<std::int64_t>::max();

    explicit EvaluationBudget(std::int64_t limit = unlimited);

    [[nodiscard]] std::int64_t limit() const noexcept { return limit_; }
    [[nodiscard]] std::int64_t used() const noexcept { return decomposition_ + optimization_; }
    [[nodiscard]] std::int64_t used(Phase phase) const noexcept
    {
        return phase == Phase::Decomposition ? decomposition_ : optimization_;
    }
    [[nodiscard]] std::int64_t remaining() const noexcept { return limit_ - used(); }
    [[nodiscard]] bool exhausted() const noexcept { return remaining() <= 0; }

    // Returns false and leaves the counters untouched when fewer than n remain.
    bool try_charge(Phase phase, std::int64_t n = 1) noexcept;
    void charge(Phase phase, std::int64_t n = 1);

private:
    std::int64_t limit_;
    std::int64_t decomposition_ = 0;
    std::int64_t optimization_ = 0;
};

/// Charges one evaluation to `budget` and evaluates. Throws BudgetExhausted
/// without evaluating when nothing remains.
ObjectiveVector evaluate(Problem const& problem, std::span<double const> x, EvaluationBudget& budget, Phase phase);

} // namespace ccmo
