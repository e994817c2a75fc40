#include "cubehit/closed_form.hpp"

#include <stdexcept>

#include "cubehit/chain.hpp"

namespace cubehit {

namespace {

void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("dimension must be in 1..64, got " +
                                    std::to_string(n));
}

// S(n, k) = (sum_{i=k+1}^{n} C(n,i)) / (2 (2^n - 1) C(n-1,k)).
Rat half_split(int n, int k) {
    Int tail = 0;
    for (int i = k + 1; i <= n; ++i) tail += binomial(n, i);
    Int denom = 2 * (pow2(static_cast<unsigned long>(n)) - 1) *
                binomial(n - 1, k);
    Rat s(tail, denom);
    s.canonicalize();
    return s;
}

}  // namespace

USequence u_sequence(int n) {
    check_dimension(n);
    Int full_denom = pow2(static_cast<unsigned long>(n) + 1) - 2;
    USequence useq;
    useq.n = n;
    useq.u.reserve(n);
    for (int k = 0; k < n; ++k) {
        Int tail = 0;
        for (int i = k + 1; i <= n; ++i) tail += binomial(n, i);
        Rat u(tail, binomial(n - 1, k) * full_denom);
        u.canonicalize();
        useq.u.push_back(u);
    }
    return useq;
}

Rat adjacent_hitting_probability(int n, const Vertex& x) {
    check_dimension(n);
    if (x.n != n)
        throw std::invalid_argument(
            "adjacent_hitting_probability: vertex dimension mismatch");
    const int k = prefix_weight(x);
    const Rat s = half_split(n, k);
    return x.coord(n) == 0 ? Rat(Rat(1, 2) - s) : Rat(Rat(1, 2) + s);
}

Rat adjacent_hitting_probability_general(const Vertex& a, const Vertex& b,
                                         const Vertex& x) {
    if (a.n != b.n || a.n != x.n)
        throw std::invalid_argument(
            "adjacent_hitting_probability_general: dimension mismatch");
    if (a == b)
        throw std::invalid_argument(
            "adjacent_hitting_probability_general: a and b must be distinct");
    if (hamming_distance(a, b) != 1)
        throw std::invalid_argument(
            "adjacent_hitting_probability_general: a and b must be adjacent");
    const int n = a.n;
    // XOR translation sends a to all-zeros; swapping the differing
    // coordinate with coordinate n then puts b at 0...01. Both maps are
    // hypercube automorphisms, so the walk law is unchanged.
    std::uint64_t diff = a.bits ^ b.bits;
    std::uint64_t y = x.bits ^ a.bits;
    std::uint64_t hi = 1ull << (n - 1);
    if (diff != hi) {
        std::uint64_t lo_bit = (y & diff) ? 1ull : 0ull;
        std::uint64_t hi_bit = (y & hi) ? 1ull : 0ull;
        y &= ~(diff | hi);
        if (hi_bit) y |= diff;
        if (lo_bit) y |= hi;
    }
    return adjacent_hitting_probability(n, Vertex(n, y));
}

Rat antipodal_hitting_probability(int n, const Vertex& x) {
    check_dimension(n);
    if (x.n != n)
        throw std::invalid_argument(
            "antipodal_hitting_probability: vertex dimension mismatch");
    LevelProfile profile = solve_chain(build_antipodal_chain(n));
    return profile.w[hamming_weight(x)];
}

}  // namespace cubehit
