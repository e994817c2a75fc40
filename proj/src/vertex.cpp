#include "cubehit/vertex.hpp"

#include <bit>
#include <stdexcept>

namespace cubehit {

namespace {

void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("dimension must be in 1..64, got " +
                                    std::to_string(n));
}

std::uint64_t mask(int n) {
    return n == 64 ? ~0ull : (1ull << n) - 1;
}

}  // namespace

Vertex::Vertex(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
    check_dimension(n);
    if (bits & ~mask(n))
        throw std::invalid_argument("vertex bits exceed dimension");
}

Vertex Vertex::parse(std::string_view s, int n) {
    check_dimension(n);
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("vertex string \"" + std::string(s) +
                                    "\" has length " +
                                    std::to_string(s.size()) +
                                    ", expected " + std::to_string(n));
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        char c = s[i];
        if (c == '1')
            bits |= 1ull << i;
        else if (c != '0')
            throw std::invalid_argument(
                std::string("vertex string contains non-binary character '") +
                c + "'");
    }
    return Vertex(n, bits);
}

int Vertex::coord(int i) const {
    return static_cast<int>((bits >> (i - 1)) & 1u);
}

Vertex Vertex::flipped(int i) const {
    return Vertex(n, bits ^ (1ull << (i - 1)));
}

Vertex Vertex::complemented() const {
    return Vertex(n, ~bits & mask(n));
}

std::string Vertex::str() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((bits >> i) & 1u) s[i] = '1';
    return s;
}

Vertex all_zeros(int n) {
    return Vertex(n, 0);
}

Vertex all_ones(int n) {
    return Vertex(n, mask(n));
}

int hamming_distance(const Vertex& x, const Vertex& y) {
    if (x.n != y.n)
        throw std::invalid_argument("hamming_distance: dimension mismatch");
    return std::popcount(x.bits ^ y.bits);
}

int hamming_weight(const Vertex& x) {
    return std::popcount(x.bits);
}

int prefix_weight(const Vertex& x) {
    return std::popcount(x.bits & mask(x.n - 1));
}

std::vector<Vertex> neighbors(const Vertex& x) {
    std::vector<Vertex> out;
    out.reserve(x.n);
    for (int i = 1; i <= x.n; ++i) out.push_back(x.flipped(i));
    return out;
}

}  // namespace cubehit
