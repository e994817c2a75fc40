#pragma once

#include <cstdint>

#include "cubehit/network.hpp"
#include "cubehit/vertex.hpp"

namespace cubehit {

struct MCEstimate {
    std::uint64_t trials = 0;
    std::uint64_t hits_b = 0;
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t max_steps_hit = 0;  // longest trial, in steps
};

// Runs `trials` independent walks from x, each stepping to a uniformly
// chosen neighbor until absorption at a or b. Deterministic given
// (seed, trials, problem, x); trial t draws from a substream derived from
// (seed, t). A per-trial step cap of 2^n * 10^6 guards against a broken
// loop; hitting it throws rather than producing data.
MCEstimate simulate_hitting(const HittingProblem& problem, const Vertex& x,
                            std::uint64_t trials, std::uint64_t seed);

}  // namespace cubehit
