#include "hodgelat/lattice.hpp"

#include <numeric>

#include "hodgelat/smith.hpp"

namespace hodgelat {

Lattice Lattice::from_gram(IntMatrix gram, std::optional<std::string> label) {
    if (!gram.square()) fail(ErrorCode::AsymmetricMatrix, "Gram matrix must be square");
    if (!gram.is_symmetric()) fail(ErrorCode::AsymmetricMatrix, "Gram matrix must be symmetric");
    for (int i = 0; i < gram.rows(); ++i)
        if (!divides(Int(2), gram.at(i, i)))
            fail(ErrorCode::OddLattice, "odd lattice: diagonal entry " + to_string(gram.at(i, i)) +
                                            " at index " + std::to_string(i));
    if (determinant(gram) == 0)
        fail(ErrorCode::DegenerateLattice, "degenerate lattice: det(gram) = 0");
    return Lattice(std::move(gram), std::move(label));
}

Int Lattice::det() const { return determinant(gram_); }

Int Lattice::disc() const { return abs(det()); }

Inertia Lattice::signature() const { return rational_inertia(to_rational(gram_)); }

Lattice make_lattice(const IntMatrix& gram, std::optional<std::string> label) {
    return Lattice::from_gram(gram, std::move(label));
}

namespace {

IntMatrix u_gram() { return IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}}; }

// E8 in the simple-root basis: diagonal 2, entry -1 exactly for adjacent
// Dynkin nodes (chain 1-3-4-5-6-7-8, node 2 attached to node 4)
IntMatrix e8_gram() {
    IntMatrix g(8, 8);
    for (int i = 0; i < 8; ++i) g.at(i, i) = 2;
    auto link = [&](int a, int b) {
        g.at(a - 1, b - 1) = -1;
        g.at(b - 1, a - 1) = -1;
    };
    link(1, 3);
    link(3, 4);
    link(4, 5);
    link(5, 6);
    link(6, 7);
    link(7, 8);
    link(2, 4);
    return g;
}

}  // namespace

Lattice catalog(CatalogName name) {
    switch (name) {
        case CatalogName::U:
            return make_lattice(u_gram(), "U");
        case CatalogName::E8:
            return make_lattice(e8_gram(), "E8");
        case CatalogName::E8Minus:
            return make_lattice(e8_gram().scaled(Int(-1)), "E8(-1)");
        case CatalogName::LambdaK3: {
            IntMatrix g = u_gram();
            g = IntMatrix::block_diag(g, u_gram());
            g = IntMatrix::block_diag(g, u_gram());
            IntMatrix e8m = e8_gram().scaled(Int(-1));
            g = IntMatrix::block_diag(g, e8m);
            g = IntMatrix::block_diag(g, e8m);
            return make_lattice(g, "LambdaK3");
        }
    }
    fail(ErrorCode::UnknownCatalogName, "unknown catalog name");
}

Lattice catalog(const std::string& name) {
    if (name == "U") return catalog(CatalogName::U);
    if (name == "E8") return catalog(CatalogName::E8);
    if (name == "E8_minus") return catalog(CatalogName::E8Minus);
    if (name == "LambdaK3") return catalog(CatalogName::LambdaK3);
    fail(ErrorCode::UnknownCatalogName, "unknown catalog name: " + name);
}

Lattice rescale(const Lattice& l, const Int& n) {
    if (n == 0) fail(ErrorCode::ZeroRescale, "rescale by zero is degenerate");
    std::optional<std::string> label;
    if (l.label()) label = *l.label() + "(" + to_string(n) + ")";
    Lattice out = make_lattice(l.gram().scaled(n), label);
    // disc(L(n)) = |n|^rank * disc(L)
    Int expect = l.disc();
    Int a = abs(n);
    for (int i = 0; i < l.rank(); ++i) expect *= a;
    internal_check(out.disc() == expect, "rescale discriminant law violated");
    return out;
}

Lattice direct_sum(const Lattice& l1, const Lattice& l2) {
    return make_lattice(IntMatrix::block_diag(l1.gram(), l2.gram()));
}

Int divisibility(const std::vector<Int>& v, const Lattice& l) {
    bool nonzero = false;
    for (const Int& x : v)
        if (x != 0) { nonzero = true; break; }
    if (!nonzero) fail(ErrorCode::ZeroVector, "divisibility of the zero vector");
    std::vector<Int> pairing = apply(l.gram(), v);
    Int g(0);
    for (const Int& x : pairing) g = gcd(g, x);
    return g;
}

IntMatrix Sublattice::induced_gram() const {
    return basis * ambient.gram() * basis.transpose();
}

Sublattice make_sublattice(const Lattice& ambient, const IntMatrix& basis) {
    if (basis.cols() != ambient.rank())
        fail(ErrorCode::DimensionMismatch, "sublattice basis width must match ambient rank");
    if (basis.rows() > ambient.rank() || rank(basis) != basis.rows())
        fail(ErrorCode::DependentBasis, "sublattice generators must be linearly independent");
    return Sublattice{ambient, basis};
}

Sublattice saturation(const Sublattice& s) {
    // row space over Z of the basis equals the rows of D * R^{-1}; dropping
    // the elementary divisors leaves a primitive basis of the Q-span
    SmithDecomposition snf = smith_normal_form(s.basis);
    int r = 0;
    bool already_primitive = true;
    for (const Int& d : snf.diagonal) {
        if (d != 0) ++r;
        if (d != 1) already_primitive = false;
    }
    if (already_primitive) return s;
    IntMatrix rinv = *to_integral(inverse(to_rational(snf.right)));
    IntMatrix out(r, s.basis.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s.basis.cols(); ++j) out.at(i, j) = rinv.at(i, j);
    return make_sublattice(s.ambient, out);
}

bool is_primitive(const Sublattice& s) {
    for (const Int& d : invariant_factors(s.basis))
        if (d != 1) return false;
    return true;
}

Sublattice orthogonal_complement_sublattice(const Sublattice& s) {
    if (determinant(s.induced_gram()) == 0)
        fail(ErrorCode::DegenerateSublattice, "degenerate sublattice has no complement here");
    IntMatrix constraints = s.basis * s.ambient.gram();
    auto kernel = integer_kernel(constraints);
    if (!kernel)
        fail(ErrorCode::DegenerateSublattice, "orthogonal complement is trivial");
    return make_sublattice(s.ambient, *kernel);
}

Lattice orthogonal_complement(const Sublattice& s) {
    Sublattice comp = orthogonal_complement_sublattice(s);
    return make_lattice(comp.induced_gram());
}

}  // namespace hodgelat
