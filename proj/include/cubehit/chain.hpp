#pragma once

#include <vector>

#include "cubehit/closed_form.hpp"
#include "cubehit/rational.hpp"

namespace cubehit {

enum class ChainKind { adjacent_pair, antipodal };

// The lumped one-dimensional system over levels. Row k encodes
//   diag[k] * w_k = lower[k] * w_{k-1} + upper[k] * w_{k+1} + rhs[k].
// Adjacent kind has levels 0..n-1, antipodal kind 0..n.
struct ChainSystem {
    int n = 1;
    ChainKind kind = ChainKind::adjacent_pair;
    std::vector<Rat> diag, lower, upper, rhs;

    int size() const { return static_cast<int>(diag.size()); }
};

// Exact per-level solution of a ChainSystem.
struct LevelProfile {
    int n = 1;
    ChainKind kind = ChainKind::adjacent_pair;
    std::vector<Rat> w;
};

// Adjacent targets a = 0...00, b = 0...01, lumped by prefix weight:
//   w_0 = 0;
//   (n+1) w_k = k w_{k-1} + (n-k-1) w_{k+1} + 1   for k = 1..n-2;
//   (n+1) w_{n-1} = (n-1) w_{n-2} + 1.
ChainSystem build_adjacent_chain(int n);

// Antipodal targets, lumped by Hamming weight:
//   p_0 = 0;  p_n = 1;  n p_k = k p_{k-1} + (n-k) p_{k+1}  for k = 1..n-1.
ChainSystem build_antipodal_chain(int n);

// Exact tridiagonal forward elimination / back substitution.
LevelProfile solve_chain(const ChainSystem& sys);

// u_k = 1/2 - w_k, adjacent-kind profiles only.
USequence u_transform(const LevelProfile& profile);

// Runs u_{k-1} = ((n+1) u_k - (n-k-1) u_{k+1}) / k downward from
// u_{n-1} = c, u_n = 0; returns u_0..u_{n-1}.
USequence backward_recurrence(int n, const Rat& c);

// Residuals of the identity i*u_{i-1} = n*u_{n-1} + (n-i)*u_i for i = 1..n
// (u_n taken as 0); all must be exactly zero for a valid sequence.
std::vector<Rat> induction_identity_residuals(const USequence& useq);

// z_i = (i+1)(i+2)...(n-1) u_i from the closed-form sum
// z_{n-j-1} = c * j! * sum_{l=0}^{j} C(n, j-l) with c = 1/(2^{n+1}-2);
// indices 0..n-2, requires n >= 2.
std::vector<Rat> z_sequence(int n);

}  // namespace cubehit
