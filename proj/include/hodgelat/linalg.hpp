#pragma once

#include <optional>
#include <vector>

#include "hodgelat/matrix.hpp"

namespace hodgelat {

// fraction-free Bareiss elimination; exact
Int determinant(const IntMatrix& a);

// exact Gaussian elimination over Q
Rat determinant(const RatMatrix& a);

// Gauss-Jordan; signals SingularMatrix on det = 0
RatMatrix inverse(const RatMatrix& a);

// particular solution of a*x = b over Q, or nullopt if inconsistent;
// free variables are set to zero
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const Inertia&) const = default;
};

// Sylvester inertia of a symmetric rational matrix, by symmetric pivoting;
// zero-diagonal blocks are handled through an off-diagonal congruence step.
Inertia rational_inertia(const RatMatrix& g);

// basis (rows) of { x in Z^n : a*x = 0 }; the result spans a primitive
// (saturated) subgroup; nullopt when the kernel is trivial
std::optional<IntMatrix> integer_kernel(const IntMatrix& a);

int rank(const RatMatrix& a);
int rank(const IntMatrix& a);

}  // namespace hodgelat
