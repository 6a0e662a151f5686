#pragma once

#include <vector>

#include "hodgelat/matrix.hpp"

namespace hodgelat {

// left * a * right = diag(diagonal), with left and right unimodular and
// diagonal = d1 | d2 | ... | dr followed by zeros, all di >= 0.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix right;
    std::vector<Int> diagonal;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// invariant factors > 1, in divisibility order
std::vector<Int> invariant_factors(const IntMatrix& a);

}  // namespace hodgelat
