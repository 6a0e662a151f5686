#pragma once

#include <vector>

#include "hodgelat/lattice.hpp"

namespace hodgelat {

// The finite quadratic form on A_L = L*/L. Generators are rational vectors
// in the ambient coordinates of L; q-values live in Q/2Z as canonical
// fractions in [0,2), bilinear values in Q/Z as fractions in [0,1).
struct DiscriminantForm {
    std::vector<Int> invariant_factors;      // d1 | d2 | ..., each >= 2
    std::vector<std::vector<Rat>> generators;
    std::vector<Rat> q_values;               // q(g_i) in [0,2)
    RatMatrix b_values;                      // b(g_i,g_j) in [0,1); 1x1 zero matrix when trivial

    Int order() const;
    bool trivial() const { return invariant_factors.empty(); }
};

DiscriminantForm discriminant_form(const Lattice& l);

// q of an arbitrary element sum_i coeffs[i] * g_i via the ambient pairing,
// canonical in [0,2)
Rat q_value(const Lattice& l, const DiscriminantForm& d, const std::vector<Int>& coeffs);

// same value from the stored q/b tables alone:
// q(sum k_i g_i) = sum k_i^2 q(g_i) + 2 sum_{i<j} k_i k_j b(g_i,g_j) mod 2Z
Rat q_of(const DiscriminantForm& d, const std::vector<Int>& coeffs);

// b of two elements given by generator coefficients, canonical in [0,1)
Rat b_of(const DiscriminantForm& d, const std::vector<Int>& x, const std::vector<Int>& y);

// sorted multiset of the q-values of every element of A_L
std::vector<Rat> q_multiset(const DiscriminantForm& d);

}  // namespace hodgelat
