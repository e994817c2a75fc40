#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubehit/rational.hpp"

namespace cubehit {

inline constexpr int kOccupationMaxDimension = 30;
inline constexpr long kOccupationMaxTime = 10000;

// The eigenvalue factor in the spectral occupation formula. `as_printed`
// uses 1 - 2j/(n+1), which the matrix-power oracle identifies as the lazy
// walk holding with probability 1/(n+1); `simple` uses 1 - 2j/n, the plain
// nearest-neighbor walk. Both are first-class, each checked against its own
// oracle.
enum class WalkVariant { as_printed, simple };

std::string to_string(WalkVariant variant);
WalkVariant parse_walk_variant(const std::string& s);

// Probability that the walk started at the all-zeros vertex sits at any one
// specific vertex of Hamming weight k after N steps; probs is indexed by k.
struct OccupationDistribution {
    int n = 1;
    long N = 0;
    WalkVariant variant = WalkVariant::simple;
    std::vector<Rat> probs;

    std::vector<double> probs_double() const;
};

// Spectral double sum
//   (1/2^n) sum_{j=0}^{n} lambda_j^N sum_{i=0}^{k} (-1)^i C(k,i) C(n-k,j-i)
// evaluated in exact rational arithmetic.
Rat occupation_formula_exact(int n, long N, int k, WalkVariant variant);
double occupation_formula(int n, long N, int k, WalkVariant variant);

// Oracle: exact rational power of the (n+1)-level lumped birth-death chain
// started at level 0, divided per level by C(n,k).
OccupationDistribution occupation_matrix_power(int n, long N,
                                               WalkVariant variant);

// `trials` seeded walks of exactly N steps from the origin; histogram over
// levels, normalized per vertex like the oracles.
OccupationDistribution empirical_occupation(int n, long N, WalkVariant variant,
                                            std::uint64_t trials,
                                            std::uint64_t seed);

}  // namespace cubehit
