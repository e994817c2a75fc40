#include "cubehit/mc.hpp"

#include <cmath>
#include <stdexcept>

#include "cubehit/rng.hpp"

namespace cubehit {

MCEstimate simulate_hitting(const HittingProblem& problem, const Vertex& x,
                            std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("simulate_hitting: trials must be >= 1");
    if (x.n != problem.n)
        throw std::invalid_argument("simulate_hitting: vertex dimension mismatch");
    const int n = problem.n;
    const std::uint64_t a = problem.a.bits, b = problem.b.bits;
    const std::uint64_t step_cap = (1ull << n) * 1000000ull;

    std::uint64_t hits = 0;
    std::uint64_t longest = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = trial_stream(seed, t);
        std::uint64_t v = x.bits;
        std::uint64_t steps = 0;
        while (v != a && v != b) {
            v ^= 1ull << rng.below(static_cast<std::uint64_t>(n));
            if (++steps > step_cap)
                throw std::runtime_error(
                    "simulate_hitting: per-trial step cap exceeded (trial " +
                    std::to_string(t) + ")");
        }
        longest = std::max(longest, steps);
        if (v == b) ++hits;
    }

    MCEstimate est;
    est.trials = trials;
    est.hits_b = hits;
    est.seed = seed;
    est.max_steps_hit = longest;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    est.std_err =
        std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
    return est;
}

}  // namespace cubehit
