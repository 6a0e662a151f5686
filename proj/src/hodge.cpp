#include "hodgelat/hodge.hpp"

#include <algorithm>

#include "hodgelat/discriminant.hpp"
#include "hodgelat/search.hpp"
#include "hodgelat/smith.hpp"

namespace hodgelat {

namespace {

RatMatrix gram_q(const HodgeLatticeModel& t) { return to_rational(t.lattice.gram()); }

Rat pow_rat(const Rat& base, int exp) {
    Rat out(1);
    for (int i = 0; i < exp; ++i) out *= base;
    out.canonicalize();
    return out;
}

}  // namespace

HodgeLatticeModel make_hodge_model(const Lattice& lattice, const RatMatrix& endo_generator,
                                   bool irreducible, bool k3_type) {
    if (!endo_generator.square() || endo_generator.rows() != lattice.rank())
        fail(ErrorCode::DimensionMismatch, "endomorphism generator must act on the lattice");
    Poly mp = minimal_polynomial(endo_generator);
    if (!irreducible_over_q(mp))
        fail(ErrorCode::ReducibleGenerator,
             "generator minimal polynomial is reducible over Q, so Q(g) is not a field");
    int deg = degree(mp);
    if (lattice.rank() % deg != 0)
        fail(ErrorCode::GeneratorDegree, "field degree must divide the lattice rank");
    HodgeLatticeModel model{lattice, endo_generator, irreducible, k3_type, mp};
    RatMatrix adj = rosati_adjoint(model, endo_generator);
    if (!algebra_coordinates(model, adj))
        fail(ErrorCode::RosatiNotClosed, "Rosati adjoint of the generator must lie in Q(g)");
    return model;
}

HodgeLatticeModel make_scalar_model(const Lattice& lattice, const Rat& q, bool irreducible,
                                    bool k3_type) {
    RatMatrix g = RatMatrix::identity(lattice.rank());
    for (int i = 0; i < lattice.rank(); ++i) g.at(i, i) = q;
    return make_hodge_model(lattice, g, irreducible, k3_type);
}

HodgeIsomorphism make_hodge_isomorphism(const HodgeLatticeModel& from, const HodgeLatticeModel& to,
                                        const IntMatrix& f) {
    if (!f.square() || f.rows() != from.rank() || to.rank() != from.rank())
        fail(ErrorCode::InvalidIsomorphism, "isomorphism shape mismatch");
    Int d = determinant(f);
    if (d != 1 && d != -1)
        fail(ErrorCode::InvalidIsomorphism, "isomorphism must be unimodular, det = " + to_string(d));
    RatMatrix fr = to_rational(f);
    if (fr * from.endo_generator != to.endo_generator * fr)
        fail(ErrorCode::InvalidIsomorphism, "isomorphism must intertwine the endomorphism data");
    return HodgeIsomorphism{f};
}

RatMatrix rosati_adjoint(const HodgeLatticeModel& t, const RatMatrix& phi) {
    if (!phi.square() || phi.rows() != t.rank())
        fail(ErrorCode::DimensionMismatch, "adjoint of a wrong-sized endomorphism");
    RatMatrix g = gram_q(t);
    return inverse(g) * phi.transpose() * g;
}

std::optional<std::vector<Rat>> algebra_coordinates(const HodgeLatticeModel& t,
                                                    const RatMatrix& phi) {
    if (!phi.square() || phi.rows() != t.rank())
        fail(ErrorCode::DimensionMismatch, "membership test for a wrong-sized endomorphism");
    const int n = t.rank();
    const int deg = t.field_degree();
    RatMatrix sys(n * n, deg);
    RatMatrix power = RatMatrix::identity(n);
    for (int c = 0; c < deg; ++c) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sys.at(i * n + j, c) = power.at(i, j);
        if (c + 1 < deg) power = power * t.endo_generator;
    }
    std::vector<Rat> target(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) target[i * n + j] = phi.at(i, j);
    return solve(sys, target);
}

bool is_rosati_invariant(const HodgeLatticeModel& t, const RatMatrix& phi) {
    if (!algebra_coordinates(t, phi))
        fail(ErrorCode::OutsideEndomorphismAlgebra,
             "endomorphism lies outside the algebra Q(g)");
    RatMatrix g = gram_q(t);
    return phi.transpose() * g == g * phi;
}

const char* twist_reject_name(TwistReject r) {
    switch (r) {
        case TwistReject::None: return "accepted";
        case TwistReject::NotInvertible: return "not invertible";
        case TwistReject::OutsideAlgebra: return "outside endomorphism algebra";
        case TwistReject::NotRosatiInvariant: return "not Rosati-invariant";
        case TwistReject::NotIntegral: return "does not map the lattice into its dual";
        case TwistReject::NotEven: return "twisted form is odd";
    }
    return "?";
}

TwistReject classify_twist(const HodgeLatticeModel& t, const RatMatrix& phi) {
    if (!phi.square() || phi.rows() != t.rank())
        fail(ErrorCode::DimensionMismatch, "twist candidate must act on the lattice");
    if (determinant(phi) == 0) return TwistReject::NotInvertible;
    if (!algebra_coordinates(t, phi)) return TwistReject::OutsideAlgebra;
    RatMatrix g = gram_q(t);
    RatMatrix twisted = phi.transpose() * g;
    if (twisted != g * phi) return TwistReject::NotRosatiInvariant;
    auto integral = to_integral(twisted);
    if (!integral) return TwistReject::NotIntegral;
    for (int i = 0; i < integral->rows(); ++i)
        if (!divides(Int(2), integral->at(i, i))) return TwistReject::NotEven;
    return TwistReject::None;
}

std::optional<HodgeEndomorphism> try_admit_twist(const HodgeLatticeModel& t, const RatMatrix& phi) {
    if (classify_twist(t, phi) != TwistReject::None) return std::nullopt;
    return HodgeEndomorphism{phi, minimal_polynomial(phi), true, true, true};
}

HodgeEndomorphism admit_twist(const HodgeLatticeModel& t, const RatMatrix& phi) {
    TwistReject why = classify_twist(t, phi);
    switch (why) {
        case TwistReject::None:
            return *try_admit_twist(t, phi);
        case TwistReject::NotInvertible:
            fail(ErrorCode::TwistNotInvertible, "twist rejected: endomorphism is singular");
        case TwistReject::OutsideAlgebra:
            fail(ErrorCode::TwistOutsideAlgebra, "twist rejected: outside the algebra Q(g)");
        case TwistReject::NotRosatiInvariant:
            fail(ErrorCode::TwistNotRosatiInvariant, "twist rejected: not Rosati-invariant");
        case TwistReject::NotIntegral:
            fail(ErrorCode::TwistNotIntegral,
                 "twist rejected: does not map the lattice into its dual");
        case TwistReject::NotEven:
            fail(ErrorCode::TwistNotEven, "twist rejected: twisted form has odd diagonal");
    }
    fail(ErrorCode::InternalAssertion, "unreachable");
}

HodgeLatticeModel twist(const HodgeLatticeModel& t, const HodgeEndomorphism& phi) {
    admit_twist(t, phi.matrix);  // throws the precise rejection reason
    RatMatrix twisted = phi.matrix.transpose() * gram_q(t);
    auto gram = to_integral(twisted);
    internal_check(gram.has_value(), "admitted twist must be integral");
    Lattice lat = make_lattice(*gram);
    return make_hodge_model(lat, t.endo_generator, t.irreducible_flag, t.k3_type_flag);
}

FieldNorm field_norm(const HodgeLatticeModel& t, const HodgeEndomorphism& phi) {
    if (!algebra_coordinates(t, phi.matrix))
        fail(ErrorCode::OutsideEndomorphismAlgebra, "norm of an element outside Q(g)");
    const Poly& mp = phi.minimal_polynomial;
    const int dphi = degree(mp);
    const int de = t.field_degree();
    internal_check(de % dphi == 0, "Q(phi) must be a subfield of E");
    Rat sub = mp[0];
    if (dphi % 2 != 0) sub = -sub;  // (-1)^deg * constant coefficient
    sub.canonicalize();
    FieldNorm out;
    out.subfield_norm = sub;
    out.phi_degree = dphi;
    out.norm = pow_rat(sub, de / dphi);
    out.m = t.rank() / de;
    // det(phi) = N_{Q(phi)/Q}(phi)^{rank/deg(phi)} is forced; check it
    Rat det = determinant(phi.matrix);
    internal_check(det == pow_rat(sub, t.rank() / dphi), "norm/determinant consistency violated");
    return out;
}

TwistDiscProof verify_twist_discriminant(const HodgeLatticeModel& t, const HodgeEndomorphism& phi) {
    FieldNorm nm = field_norm(t, phi);
    HodgeLatticeModel twisted = twist(t, phi);
    TwistDiscProof proof;
    proof.norm = nm.norm;
    proof.m = nm.m;
    proof.disc_before = t.lattice.disc();
    proof.disc_after = twisted.lattice.disc();
    Rat absn = nm.norm;
    if (sign(absn) < 0) absn = -absn;
    proof.predicted = pow_rat(absn, nm.m) * Rat(proof.disc_before);
    proof.predicted.canonicalize();
    internal_check(proof.predicted == Rat(proof.disc_after),
                   "twisted discriminant identity |N(phi)|^m * disc(T) = disc(T_phi) violated");
    return proof;
}

HodgeEndomorphism pullback_twist(const HodgeLatticeModel& t1, const HodgeLatticeModel& t2,
                                 const HodgeIsomorphism& f) {
    make_hodge_isomorphism(t1, t2, f.matrix);  // re-validate
    RatMatrix g1 = gram_q(t1);
    RatMatrix g2 = gram_q(t2);
    RatMatrix fr = to_rational(f.matrix);
    RatMatrix phi = inverse(g1) * fr.transpose() * g2 * fr;

    // f carries the twist onto T2: Gram(T1_phi) = phi^T G1 = f^T G2 f
    RatMatrix pulled = fr.transpose() * g2 * fr;
    internal_check(phi.transpose() * g1 == pulled, "pullback Gram identity violated");

    // evenness of f^T G2 f is inherited from T2; admit_twist re-checks it
    HodgeEndomorphism out = admit_twist(t1, phi);
    HodgeLatticeModel twisted = twist(t1, out);
    internal_check(is_hodge_isometry(twisted, t2, HodgeIsomorphism{f.matrix}),
                   "f must be an isometry from the twist onto T2");
    return out;
}

bool is_hodge_isometry(const HodgeLatticeModel& t1, const HodgeLatticeModel& t2,
                       const HodgeIsomorphism& f) {
    make_hodge_isomorphism(t1, t2, f.matrix);  // re-validate
    IntMatrix lhs = f.matrix.transpose() * t2.lattice.gram() * f.matrix;
    return lhs == t1.lattice.gram();
}

TwistEquivalence twists_equivalent(const HodgeLatticeModel& t, const HodgeEndomorphism& phi,
                                   const HodgeEndomorphism& psi, int search_bound) {
    internal_check(classify_twist(t, phi.matrix) == TwistReject::None &&
                       classify_twist(t, psi.matrix) == TwistReject::None,
                   "twists_equivalent requires admitted twists");
    if (phi.matrix == psi.matrix)
        return {TwistEquivalence::State::Equivalent, IntMatrix::identity(t.rank()), "identical"};

    Lattice lphi = twist(t, phi).lattice;
    Lattice lpsi = twist(t, psi).lattice;
    if (lphi.disc() != lpsi.disc())
        return {TwistEquivalence::State::NotEquivalent, std::nullopt, "discriminant"};
    if (!(lphi.signature() == lpsi.signature()))
        return {TwistEquivalence::State::NotEquivalent, std::nullopt, "signature"};
    if (invariant_factors(lphi.gram()) != invariant_factors(lpsi.gram()))
        return {TwistEquivalence::State::NotEquivalent, std::nullopt, "discriminant form"};
    static const Int kFingerprintBound(4096);
    if (lphi.disc() <= kFingerprintBound) {
        if (q_multiset(discriminant_form(lphi)) != q_multiset(discriminant_form(lpsi)))
            return {TwistEquivalence::State::NotEquivalent, std::nullopt, "discriminant form"};
    }

    // h^T * (psi^T G) * h = phi^T G with h commuting with the generator
    auto witness = bounded_congruence_search(lpsi.gram(), lphi.gram(), search_bound,
                                             t.endo_generator);
    if (witness) {
        IntMatrix check = witness->transpose() * lpsi.gram() * *witness;
        internal_check(check == lphi.gram(), "equivalence witness failed re-validation");
        return {TwistEquivalence::State::Equivalent, witness, "witness found"};
    }
    return {TwistEquivalence::State::Unknown, std::nullopt, "search bound exhausted"};
}

std::vector<Rat> enumerate_scalar_twists(const HodgeLatticeModel& t, const Int& target_disc) {
    if (!t.scalar_field())
        fail(ErrorCode::NonScalarGenerator,
             "scalar twist enumeration requires an endomorphism field equal to Q");
    std::vector<Rat> out;
    if (target_disc <= 0) return out;
    // |q|^rank = target / disc forces |q|; check the exact rational root
    Rat ratio = make_rat(target_disc, t.lattice.disc());
    auto num_root = nth_root_exact(ratio.get_num(), t.rank());
    auto den_root = nth_root_exact(ratio.get_den(), t.rank());
    if (!num_root || !den_root) return out;
    Rat magnitude = make_rat(*num_root, *den_root);
    Rat negated = -magnitude;
    for (const Rat& q : {negated, magnitude}) {
        RatMatrix phi = RatMatrix::identity(t.rank());
        for (int i = 0; i < t.rank(); ++i) phi.at(i, i) = q;
        if (classify_twist(t, phi) == TwistReject::None) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hodgelat
