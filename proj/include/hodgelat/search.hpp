#pragma once

#include <optional>

#include "hodgelat/matrix.hpp"

namespace hodgelat {

// First integer matrix h with h^T * a * h = b, every entry in
// [-bound, bound], and h * intertwine = intertwine * h when a constraint is
// supplied. Columns are enumerated depth-first with entries ordered
// 0, 1, -1, 2, -2, ..., so the result is deterministic.
std::optional<IntMatrix> bounded_congruence_search(const IntMatrix& a, const IntMatrix& b,
                                                   int bound,
                                                   const std::optional<RatMatrix>& intertwine);

// Complete backtracking search for positive-definite forms: finds h with
// h^T * a * h = b or proves none exists. Candidate columns are the finitely
// many vectors of each prescribed norm, enumerated exactly.
std::optional<IntMatrix> definite_congruence_search(const IntMatrix& a, const IntMatrix& b);

// All v in Z^n with v^T * g * v = t for positive-definite g, in
// lexicographic order.
std::vector<std::vector<Int>> vectors_of_norm(const IntMatrix& g, const Int& t);

}  // namespace hodgelat
