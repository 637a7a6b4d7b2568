#include "ccmo/budget.hpp"

#include "ccmo/problems.hpp"

namespace ccmo {

EvaluationBudget::EvaluationBudget(std::int64_t limit) : limit_(limit)
{
    if (limit < 0) { throw std::invalid_argument("budget limit must be non-negative"); }
}

bool EvaluationBudget::try_charge(Phase phase, std::int64_t n) noexcept
{
    if (n < 0 || remaining() < n) { return false; }
    (phase == Phase::Decomposition ? decomposition_ : optimization_) += n;
    return true;
}

void EvaluationBudget::charge(Phase phase, std::int64_t n)
{
    if (!try_charge(phase, n)) { throw BudgetExhausted{}; }
}

ObjectiveVector evaluate(Problem const& problem, std::span<double const> x, EvaluationBudget& budget, Phase phase)
{
    if (x.size() != problem.dim()) { throw std::invalid_argument("decision vector length does not match problem dimension"); }
    budget.charge(phase);
    return problem.evaluate(x);
}

} // namespace ccmo
