#pragma once

#include <vector>

#include "cubehit/rational.hpp"
#include "cubehit/vertex.hpp"

namespace cubehit {

inline constexpr int kExactSolveMaxDimension = 12;
inline constexpr int kFloatSolveMaxDimension = 20;

// Two distinct absorbing vertices on the n-cube.
struct HittingProblem {
    int n;
    Vertex a, b;

    HittingProblem(const Vertex& a_, const Vertex& b_);
};

// Hitting probabilities / voltages for a HittingProblem: values[v.bits] is
// p(v), with p(a) = 0 and p(b) = 1. Exactly one of `values` (rational) or
// `float_values` is populated, per solver.
struct HarmonicSolution {
    HittingProblem problem;
    std::vector<Rat> values;
    std::vector<double> float_values;
    bool exact = true;
    int sweeps = 0;  // Gauss-Seidel sweeps used (float solver only)

    const Rat& at(const Vertex& x) const;
    double value_of(const Vertex& x) const;  // works for either solver
};

// Exact rational elimination on the (2^n - 2)-unknown harmonic system
// n p(x) = sum over neighbors, p(a) = 0, p(b) = 1. Requires n <= 12.
HarmonicSolution solve_exact(const HittingProblem& problem);

// Gauss-Seidel sweeps in vertex numeric order until the max-norm residual
// |p(x) - mean over neighbors| drops to `tolerance`. Requires n <= 20.
// Throws std::runtime_error if max_sweeps is exhausted first.
HarmonicSolution solve_float(const HittingProblem& problem, double tolerance,
                             int max_sweeps);

// Effective resistance between a and b with unit resistors on every edge:
// 1 / (total current into b under the unit-voltage solution).
Rat effective_resistance(const HittingProblem& problem);

}  // namespace cubehit
