#include "cubehit/occupation.hpp"

#include <bit>
#include <stdexcept>

#include "cubehit/rng.hpp"
#include "cubehit/vertex.hpp"

namespace cubehit {

namespace {

void check_args(int n, long N, int k) {
    if (n < 1 || n > kOccupationMaxDimension)
        throw std::invalid_argument("occupation: dimension cap is n <= 30");
    if (N < 0 || N > kOccupationMaxTime)
        throw std::invalid_argument("occupation: time cap is N <= 10000");
    if (k < 0 || k > n)
        throw std::invalid_argument("occupation: level k must be in 0..n");
}

// lambda_j^N with lambda_j = 1 - 2j/(n+1) (as-printed) or 1 - 2j/n (simple);
// 0^0 = 1 so the N = 0 normalization comes out right.
Rat eigenvalue_power(int n, int j, WalkVariant variant, long N) {
    const int denom = variant == WalkVariant::as_printed ? n + 1 : n;
    Int num_pow, den_pow;
    mpz_pow_ui(num_pow.get_mpz_t(), Int(denom - 2 * j).get_mpz_t(),
               static_cast<unsigned long>(N));
    mpz_pow_ui(den_pow.get_mpz_t(), Int(denom).get_mpz_t(),
               static_cast<unsigned long>(N));
    Rat r(num_pow, den_pow);
    r.canonicalize();
    return r;
}

// sum_{i=0}^{k} (-1)^i C(k,i) C(n-k, j-i)
Int krawtchouk_sum(int n, int k, int j) {
    Int sum = 0;
    for (int i = 0; i <= k; ++i) {
        Int term = binomial(k, i) * binomial(n - k, j - i);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace

std::string to_string(WalkVariant variant) {
    return variant == WalkVariant::as_printed ? "as-printed" : "simple";
}

WalkVariant parse_walk_variant(const std::string& s) {
    if (s == "as-printed") return WalkVariant::as_printed;
    if (s == "simple") return WalkVariant::simple;
    throw std::invalid_argument("unknown walk variant \"" + s +
                                "\" (expected as-printed or simple)");
}

std::vector<double> OccupationDistribution::probs_double() const {
    std::vector<double> out;
    out.reserve(probs.size());
    for (const Rat& p : probs) out.push_back(p.get_d());
    return out;
}

Rat occupation_formula_exact(int n, long N, int k, WalkVariant variant) {
    check_args(n, N, k);
    Rat total = 0;
    for (int j = 0; j <= n; ++j)
        total += eigenvalue_power(n, j, variant, N) * Rat(krawtchouk_sum(n, k, j));
    total /= Rat(pow2(static_cast<unsigned long>(n)));
    total.canonicalize();
    return total;
}

double occupation_formula(int n, long N, int k, WalkVariant variant) {
    return occupation_formula_exact(n, N, k, variant).get_d();
}

OccupationDistribution occupation_matrix_power(int n, long N,
                                               WalkVariant variant) {
    check_args(n, N, 0);
    // Level masses under the lumped chain; level k moves down with k/n and
    // up with (n-k)/n, the lazy variant additionally holds with 1/(n+1).
    std::vector<Rat> mass(static_cast<std::size_t>(n) + 1, 0);
    mass[0] = 1;
    const Rat denom = variant == WalkVariant::as_printed ? Rat(n + 1) : Rat(n);
    for (long t = 0; t < N; ++t) {
        std::vector<Rat> next(static_cast<std::size_t>(n) + 1, 0);
        for (int k = 0; k <= n; ++k) {
            if (mass[k] == 0) continue;
            if (variant == WalkVariant::as_printed)
                next[k] += mass[k] / denom;  // hold
            if (k > 0) next[k - 1] += mass[k] * Rat(k) / denom;
            if (k < n) next[k + 1] += mass[k] * Rat(n - k) / denom;
        }
        mass = std::move(next);
    }
    OccupationDistribution dist;
    dist.n = n;
    dist.N = N;
    dist.variant = variant;
    dist.probs.resize(mass.size());
    for (int k = 0; k <= n; ++k) {
        dist.probs[k] = mass[k] / Rat(binomial(n, k));
        dist.probs[k].canonicalize();
    }
    return dist;
}

OccupationDistribution empirical_occupation(int n, long N, WalkVariant variant,
                                            std::uint64_t trials,
                                            std::uint64_t seed) {
    check_args(n, N, 0);
    if (trials < 1)
        throw std::invalid_argument("empirical_occupation: trials must be >= 1");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t options =
        variant == WalkVariant::as_printed ? static_cast<std::uint64_t>(n) + 1
                                           : static_cast<std::uint64_t>(n);
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = trial_stream(seed, t);
        std::uint64_t v = 0;
        for (long s = 0; s < N; ++s) {
            std::uint64_t r = rng.below(options);
            if (r < static_cast<std::uint64_t>(n)) v ^= 1ull << r;
            // r == n is the lazy hold
        }
        counts[static_cast<std::size_t>(std::popcount(v))] += 1;
    }
    OccupationDistribution dist;
    dist.n = n;
    dist.N = N;
    dist.variant = variant;
    dist.probs.resize(counts.size());
    for (int k = 0; k <= n; ++k) {
        dist.probs[k] = Rat(Int(counts[k]), Int(trials) * binomial(n, k));
        dist.probs[k].canonicalize();
    }
    return dist;
}

}  // namespace cubehit
