#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cubehit {

inline constexpr int kMaxDimension = 64;

// A vertex of the n-dimensional hypercube {0,1}^n. Coordinate x_i lives in
// bit position i-1 of `bits`; the string form writes x_1 leftmost.
struct Vertex {
    int n = 1;
    std::uint64_t bits = 0;

    Vertex() = default;
    // Throws std::invalid_argument if n is out of [1,64] or bits has a set
    // bit above position n-1.
    Vertex(int n, std::uint64_t bits);

    // Parses the canonical n-character bit-string, x_1 leftmost.
    static Vertex parse(std::string_view s, int n);

    int coord(int i) const;          // i in 1..n
    Vertex flipped(int i) const;     // flip coordinate i
    Vertex complemented() const;     // flip all coordinates
    std::string str() const;

    bool operator==(const Vertex&) const = default;
};

Vertex all_zeros(int n);
Vertex all_ones(int n);

// Graph distance: number of differing coordinates. Throws on dimension
// mismatch.
int hamming_distance(const Vertex& x, const Vertex& y);

// Total number of 1-coordinates.
int hamming_weight(const Vertex& x);

// x_1 + ... + x_{n-1}; 0 when n = 1.
int prefix_weight(const Vertex& x);

// The n vertices at distance 1, ordered by flipped coordinate 1..n.
std::vector<Vertex> neighbors(const Vertex& x);

}  // namespace cubehit

template <>
struct std::hash<cubehit::Vertex> {
    std::size_t operator()(const cubehit::Vertex& v) const noexcept {
        std::uint64_t h = v.bits * 0x9e3779b97f4a7c15ull;
        return std::hash<std::uint64_t>{}(h ^ static_cast<unsigned>(v.n));
    }
};
