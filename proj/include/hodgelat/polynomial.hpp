#pragma once

#include <vector>

#include "hodgelat/matrix.hpp"

namespace hodgelat {

// dense univariate polynomial over Q, coefficients low degree first,
// normalized so the leading coefficient is nonzero
using Poly = std::vector<Rat>;

int degree(const Poly& p);
Rat eval(const Poly& p, const Rat& x);
Poly monic_from_matrix_power_relation(const RatMatrix& m);  // see minimal_polynomial

// monic minimal polynomial of a square rational matrix (Krylov on the
// matrix powers, exact)
Poly minimal_polynomial(const RatMatrix& m);

// decides irreducibility over Q of a monic rational polynomial:
// rational-root test settles degrees <= 3; degree >= 4 runs a complete
// Kronecker factor search after integerizing by the substitution x -> y/c
bool irreducible_over_q(const Poly& monic);

// matrix p(m)
RatMatrix eval_at_matrix(const Poly& p, const RatMatrix& m);

}  // namespace hodgelat
