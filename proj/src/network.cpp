#include "cubehit/network.hpp"

#include <cmath>
#include <stdexcept>

namespace cubehit {

HittingProblem::HittingProblem(const Vertex& a_, const Vertex& b_)
    : n(a_.n), a(a_), b(b_) {
    if (a.n != b.n)
        throw std::invalid_argument("HittingProblem: dimension mismatch");
    if (a == b)
        throw std::invalid_argument("HittingProblem: a and b must be distinct");
}

const Rat& HarmonicSolution::at(const Vertex& x) const {
    if (!exact)
        throw std::logic_error("HarmonicSolution::at: float solution");
    return values[x.bits];
}

double HarmonicSolution::value_of(const Vertex& x) const {
    return exact ? values[x.bits].get_d() : float_values[x.bits];
}

HarmonicSolution solve_exact(const HittingProblem& problem) {
    const int n = problem.n;
    if (n > kExactSolveMaxDimension)
        throw std::invalid_argument("solve_exact: exact cap is n <= 12");
    const std::size_t V = 1ull << n;
    const std::uint64_t a = problem.a.bits, b = problem.b.bits;

    // Interior unknowns in vertex numeric order.
    std::vector<int> index(V, -1);
    std::vector<std::uint64_t> verts;
    verts.reserve(V - 2);
    for (std::uint64_t v = 0; v < V; ++v)
        if (v != a && v != b) {
            index[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }
    const int N = static_cast<int>(verts.size());

    // Integer augmented matrix for n p(x) - sum_{y~x, y interior} p(y) = #{y~x : y = b}.
    std::vector<std::vector<Int>> A(N, std::vector<Int>(N + 1, 0));
    for (int i = 0; i < N; ++i) {
        std::uint64_t x = verts[i];
        A[i][i] = n;
        for (int c = 0; c < n; ++c) {
            std::uint64_t y = x ^ (1ull << c);
            if (y == b)
                A[i][N] += 1;
            else if (y != a)
                A[i][index[y]] -= 1;
        }
    }

    // Fraction-free (Bareiss) elimination. The matrix is a principal minor
    // of the hypercube Laplacian, hence positive definite in this ordering
    // and every pivot is nonzero.
    Int prev = 1;
    for (int k = 0; k + 1 < N; ++k) {
        const Int& piv = A[k][k];
        for (int i = k + 1; i < N; ++i) {
            if (A[i][k] == 0) {
                for (int j = k + 1; j <= N; ++j) {
                    if (A[i][j] == 0) continue;
                    A[i][j] *= piv;
                    mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(),
                                 prev.get_mpz_t());
                }
            } else {
                for (int j = k + 1; j <= N; ++j) {
                    A[i][j] = A[i][j] * piv - A[i][k] * A[k][j];
                    mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(),
                                 prev.get_mpz_t());
                }
                A[i][k] = 0;
            }
        }
        prev = piv;
    }

    // Back substitution in rationals.
    std::vector<Rat> x(N);
    for (int i = N - 1; i >= 0; --i) {
        Rat s(A[i][N]);
        for (int j = i + 1; j < N; ++j)
            if (A[i][j] != 0) s -= Rat(A[i][j]) * x[j];
        x[i] = s / Rat(A[i][i]);
        x[i].canonicalize();
    }

    HarmonicSolution sol{problem, {}, {}, true, 0};
    sol.values.assign(V, Rat(0));
    sol.values[b] = 1;
    for (int i = 0; i < N; ++i) sol.values[verts[i]] = x[i];
    return sol;
}

HarmonicSolution solve_float(const HittingProblem& problem, double tolerance,
                             int max_sweeps) {
    const int n = problem.n;
    if (n > kFloatSolveMaxDimension)
        throw std::invalid_argument("solve_float: float cap is n <= 20");
    if (tolerance <= 0)
        throw std::invalid_argument("solve_float: tolerance must be positive");
    if (max_sweeps < 1)
        throw std::invalid_argument("solve_float: max_sweeps must be >= 1");
    const std::size_t V = 1ull << n;
    const std::uint64_t a = problem.a.bits, b = problem.b.bits;

    std::vector<double> p(V, 0.0);
    p[b] = 1.0;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double max_residual = 0.0;
        for (std::uint64_t v = 0; v < V; ++v) {
            if (v == a || v == b) continue;
            double mean = 0.0;
            for (int c = 0; c < n; ++c) mean += p[v ^ (1ull << c)];
            mean /= n;
            max_residual = std::max(max_residual, std::fabs(p[v] - mean));
            p[v] = mean;
        }
        if (max_residual <= tolerance) {
            ++sweep;
            break;
        }
        if (sweep + 1 == max_sweeps)
            throw std::runtime_error(
                "solve_float: no convergence within max_sweeps");
    }

    HarmonicSolution sol{problem, {}, {}, false, sweep};
    sol.float_values = std::move(p);
    return sol;
}

Rat effective_resistance(const HittingProblem& problem) {
    HarmonicSolution sol = solve_exact(problem);
    Rat current = 0;
    for (const Vertex& y : neighbors(problem.b))
        current += Rat(1) - sol.values[y.bits];
    return Rat(1) / current;
}

}  // namespace cubehit
