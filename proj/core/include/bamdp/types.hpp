#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace bamdp {

using StateIndex = std::size_t;
using ActionIndex = std::size_t;

/// Bernoulli reward outcome; only 0 and 1 are valid.
using Reward = int;

/// The single random source type threaded through sampling code.
using Rng = std::mt19937_64;

inline constexpr double kStochasticTolerance = 1e-9;
inline constexpr double kSolverTolerance = 1e-6;

} // namespace bamdp
