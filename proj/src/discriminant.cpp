#include "hodgelat/discriminant.hpp"

#include <algorithm>

#include "hodgelat/smith.hpp"

namespace hodgelat {

Int DiscriminantForm::order() const {
    Int out(1);
    for (const Int& d : invariant_factors) out *= d;
    return out;
}

namespace {

Rat pairing(const Lattice& l, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat acc(0);
    const IntMatrix& g = l.gram();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) acc += x[i] * Rat(g.at(i, j)) * y[j];
    acc.canonicalize();
    return acc;
}

}  // namespace

DiscriminantForm discriminant_form(const Lattice& l) {
    // A_L is the cokernel of the Gram matrix: with left*G*right = D, the
    // class of gram^{-1} * left^{-1} * e_i generates the Z/d_i factor
    const int n = l.rank();
    SmithDecomposition snf = smith_normal_form(l.gram());
    RatMatrix gram_inv = inverse(to_rational(l.gram()));
    RatMatrix left_inv = inverse(to_rational(snf.left));
    RatMatrix lift = gram_inv * left_inv;

    DiscriminantForm out{{}, {}, {}, RatMatrix(1, 1)};
    for (int i = 0; i < n; ++i) {
        const Int& d = snf.diagonal[i];
        internal_check(d != 0, "nondegenerate lattice has positive elementary divisors");
        if (d == 1) continue;
        out.invariant_factors.push_back(d);
        out.generators.push_back(lift.col(i));
    }
    internal_check(out.order() == l.disc(), "order of A_L must equal disc(L)");

    const int k = static_cast<int>(out.generators.size());
    if (k > 0) {
        out.b_values = RatMatrix(k, k);
        for (int i = 0; i < k; ++i) {
            Rat qi = pairing(l, out.generators[i], out.generators[i]);
            out.q_values.push_back(mod_into(qi, Int(2)));
            for (int j = 0; j < k; ++j) {
                Rat bij = pairing(l, out.generators[i], out.generators[j]);
                out.b_values.at(i, j) = mod_into(bij, Int(1));
            }
        }
    }
    return out;
}

Rat q_value(const Lattice& l, const DiscriminantForm& d, const std::vector<Int>& coeffs) {
    if (coeffs.size() != d.generators.size())
        fail(ErrorCode::DimensionMismatch, "coefficient count must match generator count");
    std::vector<Rat> x(l.rank(), Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (int j = 0; j < l.rank(); ++j) x[j] += Rat(coeffs[i]) * d.generators[i][j];
    return mod_into(pairing(l, x, x), Int(2));
}

Rat q_of(const DiscriminantForm& d, const std::vector<Int>& coeffs) {
    if (coeffs.size() != d.invariant_factors.size())
        fail(ErrorCode::DimensionMismatch, "coefficient count must match generator count");
    Rat acc(0);
    const size_t k = coeffs.size();
    for (size_t i = 0; i < k; ++i) {
        acc += Rat(coeffs[i] * coeffs[i]) * d.q_values[i];
        for (size_t j = i + 1; j < k; ++j)
            acc += Rat(2 * coeffs[i] * coeffs[j]) * d.b_values.at(static_cast<int>(i), static_cast<int>(j));
    }
    return mod_into(acc, Int(2));
}

Rat b_of(const DiscriminantForm& d, const std::vector<Int>& x, const std::vector<Int>& y) {
    if (x.size() != d.invariant_factors.size() || y.size() != d.invariant_factors.size())
        fail(ErrorCode::DimensionMismatch, "coefficient count must match generator count");
    Rat acc(0);
    const size_t k = x.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            acc += Rat(x[i] * y[j]) * d.b_values.at(static_cast<int>(i), static_cast<int>(j));
    return mod_into(acc, Int(1));
}

std::vector<Rat> q_multiset(const DiscriminantForm& d) {
    std::vector<Rat> out;
    if (d.trivial()) {
        out.push_back(Rat(0));
        return out;
    }
    const size_t k = d.invariant_factors.size();
    std::vector<Int> coeffs(k, Int(0));
    for (;;) {
        out.push_back(q_of(d, coeffs));
        size_t pos = 0;
        while (pos < k) {
            if (++coeffs[pos] < d.invariant_factors[pos]) break;
            coeffs[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hodgelat
