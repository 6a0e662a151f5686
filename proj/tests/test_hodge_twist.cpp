#include "doctest.h"

#include <algorithm>

#include "hodgelat/hodge.hpp"
#include "support.hpp"

using namespace hodgelat;
using namespace hodgelat::testing;

namespace {

RatMatrix scalar_matrix(int n, const Rat& q) {
    RatMatrix m = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = q;
    return m;
}

// rank-2 totally real model: Gram diag(2,4), generator the companion of
// x^2 - 2; its Rosati adjoint equals itself
HodgeLatticeModel companion_model() {
    Lattice l = make_lattice(IntMatrix{{2, 0}, {0, 4}});
    RatMatrix g{{Rat(0), Rat(2)}, {Rat(1), Rat(0)}};
    return make_hodge_model(l, g);
}

// CM-flavored model: Gram 2*I, generator the rotation with g^2 = -1; the
// Rosati involution sends g to -g
HodgeLatticeModel cm_model() {
    Lattice l = make_lattice(IntMatrix{{2, 0}, {0, 2}});
    RatMatrix g{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
    return make_hodge_model(l, g);
}

HodgeLatticeModel scalar_u() { return make_scalar_model(catalog(CatalogName::U)); }

}  // namespace

TEST_CASE("model validation") {
    CHECK(scalar_u().field_degree() == 1);
    CHECK(companion_model().field_degree() == 2);
    CHECK(cm_model().field_degree() == 2);

    // reducible minimal polynomial: nilpotent generator has minpoly x^2
    CHECK_THROWS_AS(make_hodge_model(catalog(CatalogName::U),
                                     RatMatrix{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}),
                    Error);

    // Rosati adjoint escaping Q(g): on U the adjoint of [[1,1],[-1,0]] is
    // [[0,1],[-1,1]], which is not a polynomial in the generator
    try {
        make_hodge_model(catalog(CatalogName::U), RatMatrix{{Rat(1), Rat(1)}, {Rat(-1), Rat(0)}});
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RosatiNotClosed);
    }

    // an irreducible minimal polynomial whose degree does not divide the rank
    Lattice rank3 = make_lattice(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 4}});
    RatMatrix block(3, 3);
    block.at(0, 1) = Rat(2);
    block.at(1, 0) = Rat(1);
    block.at(2, 2) = Rat(3);  // minpoly (x^2 - 2)(x - 3): reducible, rejected
    CHECK_THROWS_AS(make_hodge_model(rank3, block), Error);
}

TEST_CASE("rosati adjoint fixtures") {
    HodgeLatticeModel u = scalar_u();
    RatMatrix id = RatMatrix::identity(2);
    CHECK(rosati_adjoint(u, id) == id);

    RatMatrix phi{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    RatMatrix expected{{Rat(4), Rat(2)}, {Rat(3), Rat(1)}};
    CHECK(rosati_adjoint(u, phi) == expected);

    RatMatrix q = scalar_matrix(2, make_rat(7, 3));
    CHECK(rosati_adjoint(u, q) == q);

    CHECK_THROWS_AS(rosati_adjoint(u, RatMatrix::identity(3)), Error);
}

TEST_CASE("rosati is an involution satisfying the adjoint identity") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Lattice l = random_even_lattice(rng, static_cast<int>(rng.pick(1, 4)), 5);
        HodgeLatticeModel model = make_scalar_model(l);
        const int n = l.rank();
        RatMatrix phi(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) phi.at(i, j) = make_rat(rng.pick(-5, 5), rng.pick(1, 3));
        CHECK(rosati_adjoint(model, rosati_adjoint(model, phi)) == phi);

        RatMatrix adj = rosati_adjoint(model, phi);
        std::vector<Rat> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = Rat(rng.pick(-4, 4));
            y[i] = Rat(rng.pick(-4, 4));
        }
        auto pair_with = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
            Rat acc(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) acc += a[i] * Rat(l.gram().at(i, j)) * b[j];
            return acc;
        };
        CHECK(pair_with(hodgelat::apply(phi, x), y) == pair_with(x, hodgelat::apply(adj, y)));
    }
}

TEST_CASE("membership in the Rosati-invariant subfield") {
    CHECK(is_rosati_invariant(scalar_u(), scalar_matrix(2, make_rat(5, 2))));
    HodgeLatticeModel real = companion_model();
    CHECK(is_rosati_invariant(real, real.endo_generator));
    HodgeLatticeModel cm = cm_model();
    CHECK_FALSE(is_rosati_invariant(cm, cm.endo_generator));
    CHECK_THROWS_AS(is_rosati_invariant(scalar_u(), RatMatrix{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}),
                    Error);
}

TEST_CASE("twist admissibility rejects each condition distinctly") {
    HodgeLatticeModel u = scalar_u();
    CHECK(classify_twist(u, RatMatrix::identity(2)) == TwistReject::None);
    CHECK(classify_twist(u, scalar_matrix(2, Rat(0))) == TwistReject::NotInvertible);
    CHECK(classify_twist(u, RatMatrix{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}}) ==
          TwistReject::OutsideAlgebra);
    CHECK(classify_twist(u, scalar_matrix(2, make_rat(1, 2))) == TwistReject::NotIntegral);

    HodgeLatticeModel two = make_scalar_model(make_lattice(IntMatrix{{2}}));
    CHECK(classify_twist(two, scalar_matrix(1, make_rat(1, 2))) == TwistReject::NotEven);

    HodgeLatticeModel cm = cm_model();
    CHECK(classify_twist(cm, cm.endo_generator) == TwistReject::NotRosatiInvariant);

    try {
        admit_twist(u, scalar_matrix(2, make_rat(1, 2)));
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TwistNotIntegral);
    }
}

TEST_CASE("twist fixtures") {
    HodgeLatticeModel u = scalar_u();
    HodgeEndomorphism two = admit_twist(u, scalar_matrix(2, Rat(2)));
    HodgeLatticeModel u2 = twist(u, two);
    CHECK(u2.lattice.gram() == IntMatrix{{0, 2}, {2, 0}});
    CHECK(u2.lattice.disc() == 4);

    HodgeEndomorphism id = admit_twist(u, RatMatrix::identity(2));
    CHECK(twist(u, id).lattice == u.lattice);

    HodgeLatticeModel e8 = make_scalar_model(catalog(CatalogName::E8));
    HodgeEndomorphism three = admit_twist(e8, scalar_matrix(8, Rat(3)));
    CHECK(twist(e8, three).lattice.disc() == 6561);
}

TEST_CASE("field norms") {
    HodgeLatticeModel e8 = make_scalar_model(catalog(CatalogName::E8));
    FieldNorm n3 = field_norm(e8, admit_twist(e8, scalar_matrix(8, Rat(3))));
    CHECK(n3.norm == Rat(3));
    CHECK(n3.m == 8);

    HodgeLatticeModel real = companion_model();
    FieldNorm ng = field_norm(real, admit_twist(real, real.endo_generator));
    CHECK(ng.norm == Rat(-2));
    CHECK(ng.m == 1);

    HodgeLatticeModel u = scalar_u();
    FieldNorm nid = field_norm(u, admit_twist(u, RatMatrix::identity(2)));
    CHECK(nid.norm == Rat(1));
    CHECK(nid.m == 2);

    // scalar inside a quadratic field: the norm is taken over all of E
    FieldNorm nq = field_norm(real, admit_twist(real, scalar_matrix(2, Rat(2))));
    CHECK(nq.norm == Rat(4));
    CHECK(nq.m == 1);
}

TEST_CASE("twisted discriminant identity") {
    HodgeLatticeModel u = scalar_u();
    TwistDiscProof p = verify_twist_discriminant(u, admit_twist(u, scalar_matrix(2, Rat(2))));
    CHECK(p.disc_after == 4);
    CHECK(p.predicted == Rat(4));

    HodgeLatticeModel e8 = make_scalar_model(catalog(CatalogName::E8));
    CHECK(verify_twist_discriminant(e8, admit_twist(e8, scalar_matrix(8, Rat(3)))).disc_after ==
          6561);

    HodgeLatticeModel real = companion_model();
    TwistDiscProof pg = verify_twist_discriminant(real, admit_twist(real, real.endo_generator));
    CHECK(pg.disc_before == 8);
    CHECK(pg.disc_after == 16);
    CHECK(pg.norm == Rat(-2));
    CHECK(pg.m == 1);
}

TEST_CASE("twists compose like products in the algebra") {
    Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        Lattice l = random_even_lattice(rng, static_cast<int>(rng.pick(1, 3)), 4);
        HodgeLatticeModel model = make_scalar_model(l);
        Rat q1(rng.pick(1, 3));
        Rat q2(rng.pick(1, 3));
        HodgeEndomorphism phi = admit_twist(model, scalar_matrix(l.rank(), q1));
        HodgeLatticeModel once = twist(model, phi);
        HodgeEndomorphism psi = admit_twist(once, scalar_matrix(l.rank(), q2));
        HodgeLatticeModel twice = twist(once, psi);
        HodgeEndomorphism combined = admit_twist(model, scalar_matrix(l.rank(), q1 * q2));
        CHECK(twice.lattice.gram() == twist(model, combined).lattice.gram());
    }
}

TEST_CASE("pullback of a lattice structure along an isomorphism") {
    HodgeLatticeModel u = scalar_u();
    HodgeLatticeModel u2 = make_scalar_model(rescale(catalog(CatalogName::U), Int(2)));

    HodgeIsomorphism id = make_hodge_isomorphism(u, u2, IntMatrix::identity(2));
    HodgeEndomorphism phi = pullback_twist(u, u2, id);
    CHECK(phi.matrix == scalar_matrix(2, Rat(2)));
    CHECK(twist(u, phi).lattice.gram() == u2.lattice.gram());

    HodgeIsomorphism swap = make_hodge_isomorphism(u, u, IntMatrix{{0, 1}, {1, 0}});
    CHECK(pullback_twist(u, u, swap).matrix == RatMatrix::identity(2));

    HodgeEndomorphism same = pullback_twist(u, u, make_hodge_isomorphism(u, u, IntMatrix::identity(2)));
    CHECK(same.matrix == RatMatrix::identity(2));
}

TEST_CASE("pullback round trip on random models") {
    Rng rng(33);
    int done = 0;
    while (done < 40) {
        Lattice l = random_even_lattice(rng, static_cast<int>(rng.pick(2, 4)), 4);
        HodgeLatticeModel t1 = make_scalar_model(l);
        long q = rng.pick(1, 3);
        HodgeEndomorphism prior = admit_twist(t1, scalar_matrix(l.rank(), Rat(q)));
        HodgeLatticeModel twisted = twist(t1, prior);

        IntMatrix p = random_unimodular(rng, l.rank());
        IntMatrix pinv = *to_integral(inverse(to_rational(p)));
        IntMatrix g2 = p.transpose() * twisted.lattice.gram() * p;
        HodgeLatticeModel t2 = make_scalar_model(make_lattice(g2));

        HodgeIsomorphism f = make_hodge_isomorphism(t1, t2, pinv);
        HodgeEndomorphism phi = pullback_twist(t1, t2, f);
        CHECK(phi.matrix == prior.matrix);  // scalar endomorphisms transport exactly
        HodgeLatticeModel recovered = twist(t1, phi);
        CHECK(is_hodge_isometry(recovered, t2, f));
        ++done;
    }
}

TEST_CASE("hodge isometry detection") {
    HodgeLatticeModel u = scalar_u();
    CHECK(is_hodge_isometry(u, u, make_hodge_isomorphism(u, u, IntMatrix::identity(2))));
    CHECK(is_hodge_isometry(u, u, make_hodge_isomorphism(u, u, IntMatrix{{0, 1}, {1, 0}})));
    HodgeLatticeModel u2 = make_scalar_model(rescale(catalog(CatalogName::U), Int(2)));
    CHECK_FALSE(is_hodge_isometry(u, u2, make_hodge_isomorphism(u, u2, IntMatrix::identity(2))));

    CHECK_THROWS_AS(make_hodge_isomorphism(u, u, IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST_CASE("twist equivalence fixtures") {
    HodgeLatticeModel u = scalar_u();
    HodgeEndomorphism id = admit_twist(u, RatMatrix::identity(2));
    HodgeEndomorphism two = admit_twist(u, scalar_matrix(2, Rat(2)));

    TwistEquivalence same = twists_equivalent(u, id, id, 2);
    CHECK(same.state == TwistEquivalence::State::Equivalent);
    CHECK(*same.witness == IntMatrix::identity(2));

    TwistEquivalence diff = twists_equivalent(u, id, two, 2);
    CHECK(diff.state == TwistEquivalence::State::NotEquivalent);
    CHECK(diff.reason == "discriminant");

    // opposite scalar twists are equivalent through diag(1,-1)
    HodgeEndomorphism minus_two = admit_twist(u, scalar_matrix(2, Rat(-2)));
    TwistEquivalence opp = twists_equivalent(u, two, minus_two, 2);
    CHECK(opp.state == TwistEquivalence::State::Equivalent);

    // rank-4 indefinite example: the twist by -1 is equivalent to the twist
    // by +1 through the signature-swapping permutation
    Lattice four = make_lattice(IntMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}});
    HodgeLatticeModel model4 = make_scalar_model(four);
    HodgeEndomorphism plus = admit_twist(model4, RatMatrix::identity(4));
    HodgeEndomorphism minus = admit_twist(model4, scalar_matrix(4, Rat(-1)));
    TwistEquivalence sw = twists_equivalent(model4, plus, minus, 1);
    REQUIRE(sw.state == TwistEquivalence::State::Equivalent);
    IntMatrix perm(4, 4);
    perm.at(0, 2) = 1;
    perm.at(1, 3) = 1;
    perm.at(2, 0) = 1;
    perm.at(3, 1) = 1;
    // the explicit permutation satisfies the same congruence the witness does
    IntMatrix a = four.gram().scaled(Int(-1));  // psi^T G for psi = -id
    CHECK(perm.transpose() * a * perm == four.gram());
    CHECK(sw.witness->transpose() * a * *sw.witness == four.gram());
}

TEST_CASE("scalar twist enumeration") {
    HodgeLatticeModel u = scalar_u();
    CHECK(enumerate_scalar_twists(u, Int(1)) == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(enumerate_scalar_twists(u, Int(4)) == std::vector<Rat>{Rat(-2), Rat(2)});
    CHECK(enumerate_scalar_twists(u, Int(2)).empty());

    HodgeLatticeModel u2 = make_scalar_model(rescale(catalog(CatalogName::U), Int(2)));
    CHECK(enumerate_scalar_twists(u2, Int(1)) ==
          std::vector<Rat>{make_rat(-1, 2), make_rat(1, 2)});

    CHECK_THROWS_AS(enumerate_scalar_twists(companion_model(), Int(1)), Error);
}

TEST_CASE("scalar models admit only +-1 as rational isometries") {
    Rng rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        Lattice l = random_even_lattice(rng, static_cast<int>(rng.pick(1, 3)), 4);
        for (long num = -10; num <= 10; ++num)
            for (long den = 1; den <= 10; ++den) {
                if (num == 0) continue;
                Rat q = make_rat(num, den);
                bool isometry = true;
                for (int i = 0; i < l.rank() && isometry; ++i)
                    for (int j = 0; j < l.rank() && isometry; ++j)
                        isometry = (q * q * Rat(l.gram().at(i, j)) == Rat(l.gram().at(i, j)));
                CHECK(isometry == (q == 1 || q == -1));
            }
    }
}

TEST_CASE("rank-4 twist orbits match the sign pattern") {
    Lattice four = make_lattice(IntMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}});
    HodgeLatticeModel model = make_scalar_model(four);
    std::vector<Rat> scalars;
    for (long q = -3; q <= 3; ++q) {
        if (q == 0) continue;
        if (classify_twist(model, scalar_matrix(4, Rat(q))) == TwistReject::None)
            scalars.push_back(Rat(q));
    }
    REQUIRE(scalars.size() == 6);
    for (const Rat& a : scalars)
        for (const Rat& b : scalars) {
            HodgeEndomorphism pa = admit_twist(model, scalar_matrix(4, a));
            HodgeEndomorphism pb = admit_twist(model, scalar_matrix(4, b));
            TwistEquivalence eq = twists_equivalent(model, pa, pb, 1);
            bool expect = (a == b) || (a == -b);
            CHECK(expect == (eq.state == TwistEquivalence::State::Equivalent));
            if (eq.state == TwistEquivalence::State::Equivalent) {
                IntMatrix lhs = eq.witness->transpose() *
                                *to_integral(pb.matrix.transpose() * to_rational(four.gram())) *
                                *eq.witness;
                CHECK(lhs == *to_integral(pa.matrix.transpose() * to_rational(four.gram())));
            }
        }
}

TEST_CASE("desk-scale twist bijection on U") {
    // all admissible scalar twists of height <= 3 on U are the nonzero
    // integers; distinct ones are equivalent exactly when they differ by sign
    HodgeLatticeModel u = scalar_u();
    std::vector<Rat> admissible;
    for (long num = -3; num <= 3; ++num)
        for (long den = 1; den <= 3; ++den) {
            if (num == 0) continue;
            Rat q = make_rat(num, den);
            if (std::find(admissible.begin(), admissible.end(), q) != admissible.end()) continue;
            if (classify_twist(u, scalar_matrix(2, q)) == TwistReject::None) admissible.push_back(q);
        }
    std::sort(admissible.begin(), admissible.end());
    CHECK(admissible == std::vector<Rat>{Rat(-3), Rat(-2), Rat(-1), Rat(1), Rat(2), Rat(3)});

    for (const Rat& a : admissible)
        for (const Rat& b : admissible) {
            HodgeEndomorphism pa = admit_twist(u, scalar_matrix(2, a));
            HodgeEndomorphism pb = admit_twist(u, scalar_matrix(2, b));
            TwistEquivalence eq = twists_equivalent(u, pa, pb, 2);
            bool expect_equivalent = (a == b) || (a == -b);
            if (expect_equivalent) {
                REQUIRE(eq.state == TwistEquivalence::State::Equivalent);
                // the witness exhibits phi = h * psi at the Gram level
                IntMatrix lhs = eq.witness->transpose() *
                                (*to_integral(pb.matrix.transpose() * to_rational(u.lattice.gram()))) *
                                *eq.witness;
                CHECK(lhs == *to_integral(pa.matrix.transpose() * to_rational(u.lattice.gram())));
            } else {
                CHECK(eq.state == TwistEquivalence::State::NotEquivalent);
            }
        }
}
