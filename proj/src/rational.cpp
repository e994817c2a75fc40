#include "cubehit/rational.hpp"

#include <cstdio>
#include <vector>

namespace cubehit {

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

std::string to_fraction_string(const Rat& q) {
    return q.get_str();
}

std::string to_decimal_string(const Rat& q, int significant_digits) {
    // 256 bits of working precision is plenty for <= ~70 significant digits.
    mpf_class f(q, 256);
    std::vector<char> buf(significant_digits + 64);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits,
                 f.get_mpf_t());
    return std::string(buf.data());
}

double to_double(const Rat& q) {
    return q.get_d();
}

}  // namespace cubehit
