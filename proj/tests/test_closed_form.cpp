#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cubehit/closed_form.hpp"
#include "cubehit/network.hpp"

using namespace cubehit;

namespace {

Vertex canonical_b(int n) {
    return Vertex(n, 1ull << (n - 1));  // 0...01
}

}  // namespace

TEST_CASE("adjacent formula: boundary vertices") {
    for (int n : {1, 2, 3, 7, 20, 64}) {
        CHECK(adjacent_hitting_probability(n, all_zeros(n)) == 0);
        CHECK(adjacent_hitting_probability(n, canonical_b(n)) == 1);
    }
}

TEST_CASE("adjacent formula: values frozen from exact full-graph solves") {
    CHECK(adjacent_hitting_probability(2, Vertex::parse("10", 2)) == Rat(1, 3));
    CHECK(adjacent_hitting_probability(3, Vertex::parse("110", 3)) == Rat(3, 7));
    CHECK(adjacent_hitting_probability(3, Vertex::parse("101", 3)) == Rat(9, 14));
    CHECK(adjacent_hitting_probability(4, Vertex::parse("1110", 4)) == Rat(7, 15));
}

TEST_CASE("adjacent formula: dimension errors") {
    CHECK_THROWS_AS(adjacent_hitting_probability(65, all_zeros(64)),
                    std::invalid_argument);
    CHECK_THROWS_AS(adjacent_hitting_probability(3, Vertex::parse("01", 2)),
                    std::invalid_argument);
}

TEST_CASE("general position reduces to canonical by automorphism") {
    CHECK(adjacent_hitting_probability_general(
              Vertex::parse("11", 2), Vertex::parse("10", 2),
              Vertex::parse("01", 2)) == Rat(1, 3));
    Vertex a = Vertex::parse("1010", 4), b = Vertex::parse("1000", 4);
    CHECK(adjacent_hitting_probability_general(a, b, a) == 0);
    CHECK(adjacent_hitting_probability_general(a, b, b) == 1);
    CHECK_THROWS_AS(adjacent_hitting_probability_general(a, a, b),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        adjacent_hitting_probability_general(a, Vertex::parse("0101", 4), b),
        std::invalid_argument);
}

TEST_CASE("general position agrees with exact solver (exhaustive n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t V = 1ull << n;
        for (std::uint64_t av = 0; av < V; ++av)
            for (int c = 0; c < n; ++c) {
                Vertex a(n, av), b(n, av ^ (1ull << c));
                HarmonicSolution sol = solve_exact(HittingProblem(a, b));
                for (std::uint64_t xv = 0; xv < V; ++xv)
                    CHECK(adjacent_hitting_probability_general(a, b, Vertex(n, xv)) ==
                          sol.values[xv]);
            }
    }
}

TEST_CASE("automorphism invariance under coordinate permutations (n <= 5)") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        Vertex a = all_zeros(n), b(n, 1ull << (n / 2)), x(n, (1ull << n) - 2);
        Rat reference = adjacent_hitting_probability_general(a, b, x);
        do {
            auto apply = [&](const Vertex& v) {
                std::uint64_t bits = 0;
                for (int i = 0; i < n; ++i)
                    if ((v.bits >> i) & 1u) bits |= 1ull << perm[i];
                return Vertex(n, bits);
            };
            CHECK(adjacent_hitting_probability_general(apply(a), apply(b),
                                                       apply(x)) == reference);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("mirror symmetry over levels (n <= 20)") {
    for (int n = 1; n <= 20; ++n) {
        for (int k = 0; k <= n - 1; ++k) {
            Vertex low(n, (1ull << k) - 1);  // prefix weight k, x_n = 0
            Vertex high = low.flipped(n);
            CHECK(adjacent_hitting_probability(n, low) +
                      adjacent_hitting_probability(n, high) == 1);
        }
    }
}

TEST_CASE("half-bound: below 1/2 when x_n = 0, above when x_n = 1") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            Vertex low(n, (1ull << k) - 1);
            CHECK(adjacent_hitting_probability(n, low) <= Rat(1, 2));
            CHECK(adjacent_hitting_probability(n, low.flipped(n)) >= Rat(1, 2));
        }
}

TEST_CASE("u_sequence") {
    USequence u3 = u_sequence(3);
    CHECK(u3.u == std::vector<Rat>{Rat(1, 2), Rat(1, 7), Rat(1, 14)});
    for (int n : {1, 2, 5, 17, 30, 64}) {
        USequence u = u_sequence(n);
        REQUIRE(static_cast<int>(u.u.size()) == n);
        CHECK(u.u[0] == Rat(1, 2));
        CHECK(u.u[n - 1] == Rat(Int(1), pow2(n + 1) - 2));
        for (const Rat& uk : u.u) CHECK(uk >= 0);
    }
    CHECK_THROWS_AS(u_sequence(0), std::invalid_argument);
}

TEST_CASE("u_k decreases strictly (n <= 30)") {
    for (int n = 2; n <= 30; ++n) {
        USequence u = u_sequence(n);
        for (int k = 1; k < n; ++k) CHECK(u.u[k - 1] > u.u[k]);
    }
}

TEST_CASE("antipodal: boundaries and frozen exact values") {
    for (int n : {1, 2, 3, 8}) {
        CHECK(antipodal_hitting_probability(n, all_zeros(n)) == 0);
        CHECK(antipodal_hitting_probability(n, all_ones(n)) == 1);
    }
    CHECK(antipodal_hitting_probability(3, Vertex::parse("100", 3)) == Rat(2, 5));
    CHECK(antipodal_hitting_probability(3, Vertex::parse("110", 3)) == Rat(3, 5));
}

TEST_CASE("antipodal complement identity (n <= 12)") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            Vertex x(n, k == 0 ? 0 : (1ull << k) - 1);
            CHECK(antipodal_hitting_probability(n, x) +
                      antipodal_hitting_probability(n, x.complemented()) == 1);
        }
}

TEST_CASE("antipodal equals exact solver (exhaustive n <= 7)") {
    for (int n = 1; n <= 7; ++n) {
        HarmonicSolution sol =
            solve_exact(HittingProblem(all_zeros(n), all_ones(n)));
        for (std::uint64_t v = 0; v < (1ull << n); ++v)
            CHECK(antipodal_hitting_probability(n, Vertex(n, v)) == sol.values[v]);
    }
}

TEST_CASE("adjacent formula equals exact solver (exhaustive n <= 7)") {
    // the full n <= 10 sweep is acceptance criterion 1
    for (int n = 1; n <= 7; ++n) {
        HarmonicSolution sol =
            solve_exact(HittingProblem(all_zeros(n), canonical_b(n)));
        for (std::uint64_t v = 0; v < (1ull << n); ++v)
            CHECK(adjacent_hitting_probability(n, Vertex(n, v)) == sol.values[v]);
    }
}
