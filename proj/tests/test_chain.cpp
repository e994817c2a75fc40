#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "cubehit/chain.hpp"
#include "cubehit/closed_form.hpp"

using namespace cubehit;

namespace {
// mpq_class(num, den) does not canonicalize; reduce before comparing
Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("build_adjacent_chain rows") {
    ChainSystem s2 = build_adjacent_chain(2);
    REQUIRE(s2.size() == 2);
    CHECK(s2.diag[0] == 1);
    CHECK(s2.rhs[0] == 0);
    CHECK(s2.diag[1] == 3);  // 3 w_1 = w_0 + 1
    CHECK(s2.lower[1] == 1);
    CHECK(s2.upper[1] == 0);
    CHECK(s2.rhs[1] == 1);

    ChainSystem s1 = build_adjacent_chain(1);
    REQUIRE(s1.size() == 1);  // single row w_0 = 0
    CHECK(s1.diag[0] == 1);
    CHECK(s1.rhs[0] == 0);

    ChainSystem s4 = build_adjacent_chain(4);
    CHECK(s4.diag[1] == 5);  // 5 w_1 = w_0 + 2 w_2 + 1
    CHECK(s4.lower[1] == 1);
    CHECK(s4.upper[1] == 2);
    CHECK(s4.rhs[1] == 1);

    CHECK_THROWS_AS(build_adjacent_chain(0), std::invalid_argument);
}

TEST_CASE("build_antipodal_chain rows") {
    ChainSystem s1 = build_antipodal_chain(1);
    REQUIRE(s1.size() == 2);  // p_0 = 0, p_1 = 1
    CHECK(s1.diag[0] == 1);
    CHECK(s1.diag[1] == 1);
    CHECK(s1.rhs[1] == 1);

    ChainSystem s3 = build_antipodal_chain(3);
    CHECK(s3.diag[1] == 3);  // 3 p_1 = p_0 + 2 p_2
    CHECK(s3.lower[1] == 1);
    CHECK(s3.upper[1] == 2);
    CHECK(s3.rhs[1] == 0);
}

TEST_CASE("solve_chain: frozen exact values") {
    CHECK(solve_chain(build_adjacent_chain(2)).w ==
          std::vector<Rat>{Rat(0), Rat(1, 3)});
    CHECK(solve_chain(build_adjacent_chain(3)).w ==
          std::vector<Rat>{Rat(0), Rat(5, 14), Rat(3, 7)});
    CHECK(solve_chain(build_antipodal_chain(3)).w ==
          std::vector<Rat>{Rat(0), Rat(2, 5), Rat(3, 5), Rat(1)});
    CHECK(solve_chain(build_adjacent_chain(1)).w == std::vector<Rat>{Rat(0)});
}

TEST_CASE("u_transform") {
    USequence u = u_transform(solve_chain(build_adjacent_chain(3)));
    CHECK(u.u == std::vector<Rat>{Rat(1, 2), Rat(1, 7), Rat(1, 14)});
    CHECK_THROWS_AS(u_transform(solve_chain(build_antipodal_chain(3))),
                    std::invalid_argument);
    for (int n = 1; n <= 16; ++n) {
        USequence un = u_transform(solve_chain(build_adjacent_chain(n)));
        CHECK(un.u[0] == Rat(1, 2));
        for (const Rat& uk : un.u) CHECK(uk >= 0);
    }
}

TEST_CASE("backward_recurrence: symbolic leading back-steps") {
    CHECK(backward_recurrence(3, Rat(1, 14)).u ==
          std::vector<Rat>{Rat(1, 2), Rat(1, 7), Rat(1, 14)});
    for (int n = 4; n <= 12; ++n) {
        Rat c(7, 13);  // arbitrary scale; the back-steps are linear in c
        USequence u = backward_recurrence(n, c);
        CHECK(u.u[n - 2] == frac(n + 1, n - 1) * c);
        CHECK(u.u[n - 3] == frac(n * n + n + 2, (n - 1) * (n - 2)) * c);
        // third back-step, expanded by hand: (n+1)(n^2-n+6) = n^3+5n+6
        if (n >= 5)
            CHECK(u.u[n - 4] ==
                  frac(n * n * n + 5 * n + 6, (n - 1) * (n - 2) * (n - 3)) * c);
    }
}

TEST_CASE("three routes agree exactly (n <= 30)") {
    for (int n = 1; n <= 30; ++n) {
        USequence closed = u_sequence(n);
        USequence via_chain = u_transform(solve_chain(build_adjacent_chain(n)));
        USequence via_recurrence =
            backward_recurrence(n, Rat(Int(1), pow2(n + 1) - 2));
        CHECK(closed.u == via_chain.u);
        CHECK(closed.u == via_recurrence.u);
        CHECK(via_recurrence.u[0] == Rat(1, 2));  // normalization closes
    }
}

TEST_CASE("induction identity residuals vanish on all routes (n <= 30)") {
    for (int n = 1; n <= 30; ++n) {
        for (const USequence& u :
             {u_sequence(n), u_transform(solve_chain(build_adjacent_chain(n))),
              backward_recurrence(n, Rat(Int(1), pow2(n + 1) - 2))}) {
            for (const Rat& r : induction_identity_residuals(u)) CHECK(r == 0);
        }
    }
}

TEST_CASE("z_sequence") {
    std::vector<Rat> z3 = z_sequence(3);
    REQUIRE(z3.size() == 2);
    CHECK(z3[0] == 1);        // (n-1)!/2
    CHECK(z3[1] == Rat(2, 7));  // (n+1) c
    CHECK_THROWS_AS(z_sequence(1), std::invalid_argument);

    for (int n = 2; n <= 20; ++n) {
        std::vector<Rat> z = z_sequence(n);
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), n - 1);
        Rat half_fact(fact, 2);
        half_fact.canonicalize();
        CHECK(z[0] == half_fact);
        // z_i / ((i+1)...(n-1)) recovers u_i
        USequence u = u_sequence(n);
        for (int i = 0; i <= n - 2; ++i) {
            Int prod = 1;
            for (int f = i + 1; f <= n - 1; ++f) prod *= f;
            CHECK(z[i] == Rat(prod) * u.u[i]);
        }
    }
}

TEST_CASE("adjacent profile bounds and antipodal monotonicity") {
    for (int n = 1; n <= 20; ++n) {
        LevelProfile adj = solve_chain(build_adjacent_chain(n));
        CHECK(adj.w[0] == 0);
        for (const Rat& w : adj.w) {
            CHECK(w >= 0);
            CHECK(w <= Rat(1, 2));
        }
        LevelProfile anti = solve_chain(build_antipodal_chain(n));
        CHECK(anti.w[0] == 0);
        CHECK(anti.w[n] == 1);
        for (int k = 1; k <= n; ++k) CHECK(anti.w[k - 1] < anti.w[k]);
        for (int k = 0; k <= n; ++k) CHECK(anti.w[k] + anti.w[n - k] == 1);
    }
}
