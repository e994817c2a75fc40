#include "cubehit/chain.hpp"

#include <stdexcept>

namespace cubehit {

namespace {

void check_positive_dimension(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
}

}  // namespace

ChainSystem build_adjacent_chain(int n) {
    check_positive_dimension(n);
    ChainSystem sys;
    sys.n = n;
    sys.kind = ChainKind::adjacent_pair;
    sys.diag.assign(n, 0);
    sys.lower.assign(n, 0);
    sys.upper.assign(n, 0);
    sys.rhs.assign(n, 0);
    sys.diag[0] = 1;  // w_0 = 0
    for (int k = 1; k <= n - 2; ++k) {
        sys.diag[k] = n + 1;
        sys.lower[k] = k;
        sys.upper[k] = n - k - 1;
        sys.rhs[k] = 1;
    }
    if (n >= 2) {
        sys.diag[n - 1] = n + 1;
        sys.lower[n - 1] = n - 1;
        sys.rhs[n - 1] = 1;
    }
    return sys;
}

ChainSystem build_antipodal_chain(int n) {
    check_positive_dimension(n);
    ChainSystem sys;
    sys.n = n;
    sys.kind = ChainKind::antipodal;
    sys.diag.assign(n + 1, 0);
    sys.lower.assign(n + 1, 0);
    sys.upper.assign(n + 1, 0);
    sys.rhs.assign(n + 1, 0);
    sys.diag[0] = 1;  // p_0 = 0
    for (int k = 1; k <= n - 1; ++k) {
        sys.diag[k] = n;
        sys.lower[k] = k;
        sys.upper[k] = n - k;
    }
    sys.diag[n] = 1;  // p_n = 1
    sys.rhs[n] = 1;
    return sys;
}

LevelProfile solve_chain(const ChainSystem& sys) {
    const int m = sys.size();
    // Thomas algorithm in exact rationals. Rows are
    //   -lower[k] w_{k-1} + diag[k] w_k - upper[k] w_{k+1} = rhs[k].
    std::vector<Rat> d(sys.diag), r(sys.rhs);
    for (int k = 1; k < m; ++k) {
        if (sys.lower[k] == 0) continue;
        if (d[k - 1] == 0)
            throw std::runtime_error("solve_chain: singular system");
        Rat factor = sys.lower[k] / d[k - 1];
        d[k] = sys.diag[k] - factor * sys.upper[k - 1];
        r[k] = sys.rhs[k] + factor * r[k - 1];
    }
    LevelProfile profile;
    profile.n = sys.n;
    profile.kind = sys.kind;
    profile.w.assign(m, 0);
    if (d[m - 1] == 0) throw std::runtime_error("solve_chain: singular system");
    profile.w[m - 1] = r[m - 1] / d[m - 1];
    for (int k = m - 2; k >= 0; --k) {
        if (d[k] == 0) throw std::runtime_error("solve_chain: singular system");
        profile.w[k] = (r[k] + sys.upper[k] * profile.w[k + 1]) / d[k];
    }
    return profile;
}

USequence u_transform(const LevelProfile& profile) {
    if (profile.kind != ChainKind::adjacent_pair)
        throw std::invalid_argument("u_transform: adjacent-kind profile required");
    USequence useq;
    useq.n = profile.n;
    useq.u.reserve(profile.w.size());
    for (const Rat& w : profile.w) useq.u.push_back(Rat(1, 2) - w);
    return useq;
}

USequence backward_recurrence(int n, const Rat& c) {
    check_positive_dimension(n);
    std::vector<Rat> u(static_cast<std::size_t>(n) + 1, 0);
    u[n] = 0;  // value does not matter, multiplied by zero at k = n-1
    u[n - 1] = c;
    for (int k = n - 1; k >= 1; --k)
        u[k - 1] = ((n + 1) * u[k] - (n - k - 1) * u[k + 1]) / k;
    USequence useq;
    useq.n = n;
    useq.u.assign(u.begin(), u.begin() + n);
    return useq;
}

std::vector<Rat> induction_identity_residuals(const USequence& useq) {
    const int n = useq.n;
    std::vector<Rat> res;
    res.reserve(n);
    for (int i = 1; i <= n; ++i) {
        Rat u_i = (i < n) ? useq.u[i] : Rat(0);
        res.push_back(i * useq.u[i - 1] - n * useq.u[n - 1] - (n - i) * u_i);
    }
    return res;
}

std::vector<Rat> z_sequence(int n) {
    if (n < 2) throw std::invalid_argument("z_sequence requires n >= 2");
    Rat c = Rat(1) / Rat(pow2(static_cast<unsigned long>(n) + 1) - 2);
    std::vector<Rat> z(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j <= n - 1; ++j) {
        Int sum = 0;
        for (int l = 0; l <= j; ++l) sum += binomial(n, j - l);
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j));
        z[n - j - 1] = c * Rat(fact * sum);
        z[n - j - 1].canonicalize();
    }
    return z;
}

}  // namespace cubehit
