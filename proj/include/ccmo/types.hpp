#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ccmo {

using Vector = std::vector<double>;
using ObjectiveVector = std::vector<double>;
using Front = std::vector<ObjectiveVector>;

// Every stochastic component draws from one of these, seeded per run.
using Rng = std::mt19937_64;

} // namespace ccmo
