#pragma once

#include <vector>

#include "cubehit/rational.hpp"
#include "cubehit/vertex.hpp"

namespace cubehit {

// u_0..u_{n-1} with the normalization u_0 = 1/2 and u_{n-1} = 1/(2^{n+1}-2).
// u_n is implicitly 0 and never stored.
struct USequence {
    int n = 1;
    std::vector<Rat> u;
};

// Exact u_k = (sum_{i=k+1}^{n} C(n,i)) / (C(n-1,k) * (2^{n+1}-2)).
USequence u_sequence(int n);

// Probability of hitting b = 0...01 strictly before a = 0...00 from x,
// for the simple random walk on the n-cube. Exact rational.
Rat adjacent_hitting_probability(int n, const Vertex& x);

// Same probability for arbitrary adjacent a, b: translate by XOR with a and
// swap the differing coordinate into position n, both hypercube
// automorphisms, then evaluate in canonical position.
Rat adjacent_hitting_probability_general(const Vertex& a, const Vertex& b,
                                         const Vertex& x);

// Probability of hitting all-ones before all-zeros from x; depends on x only
// through its Hamming weight. Solved via the antipodal level chain.
Rat antipodal_hitting_probability(int n, const Vertex& x);

}  // namespace cubehit
