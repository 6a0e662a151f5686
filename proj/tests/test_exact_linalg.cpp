#include "doctest.h"

#include "hodgelat/linalg.hpp"
#include "hodgelat/smith.hpp"
#include "support.hpp"

using namespace hodgelat;
using namespace hodgelat::testing;

TEST_CASE("smith normal form of small fixtures") {
    auto diag_of = [](const IntMatrix& a) { return smith_normal_form(a).diagonal; };
    CHECK(diag_of(IntMatrix{{1, 0}, {0, 1}}) == std::vector<Int>{1, 1});
    // [[0,2],[2,0]]: swap rows, then the hand reduction leaves diag (2,2)
    CHECK(diag_of(IntMatrix{{0, 2}, {2, 0}}) == std::vector<Int>{2, 2});
    // [[2,1],[1,2]]: pivot 1 clears to a single 3
    CHECK(diag_of(IntMatrix{{2, 1}, {1, 2}}) == std::vector<Int>{1, 3});
}

TEST_CASE("smith transforms are unimodular and reproduce the diagonal") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng.pick(2, 6));
        int m = static_cast<int>(rng.pick(2, 6));
        IntMatrix a = random_int_matrix(rng, m, n, 9);
        SmithDecomposition snf = smith_normal_form(a);
        Int dl = determinant(snf.left);
        Int dr = determinant(snf.right);
        CHECK((dl == 1 || dl == -1));
        CHECK((dr == 1 || dr == -1));
        for (size_t k = 0; k + 1 < snf.diagonal.size(); ++k) {
            if (snf.diagonal[k + 1] != 0) {
                REQUIRE(snf.diagonal[k] != 0);
                CHECK(divides(snf.diagonal[k], snf.diagonal[k + 1]));
            }
        }
    }
}

TEST_CASE("product of elementary divisors equals |det| for square input") {
    Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng.pick(2, 6));
        IntMatrix a = random_int_matrix(rng, n, n, 9);
        Int det = determinant(a);
        if (det == 0) continue;
        Int prod(1);
        for (const Int& d : smith_normal_form(a).diagonal) prod *= d;
        CHECK(prod == abs(det));
    }
}

TEST_CASE("determinant against the cofactor oracle") {
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix::identity(8)) == 1);
    CHECK(determinant(IntMatrix{{0, 2}, {2, 0}}) == -4);

    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.pick(1, 5));
        IntMatrix a = random_int_matrix(rng, n, n, 9);
        CHECK(determinant(a) == cofactor_determinant(a));
    }
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), Error);
}

TEST_CASE("rational determinant matches the integer one") {
    Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.pick(1, 5));
        IntMatrix a = random_int_matrix(rng, n, n, 9);
        CHECK(determinant(to_rational(a)) == Rat(determinant(a)));
    }
}

TEST_CASE("inverse fixtures and the involution property") {
    RatMatrix id2 = RatMatrix::identity(2);
    CHECK(inverse(id2) == id2);
    RatMatrix swap{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(inverse(swap) == swap);
    RatMatrix twos{{Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
    RatMatrix halves{{make_rat(1, 2), Rat(0)}, {Rat(0), make_rat(1, 2)}};
    CHECK(inverse(twos) == halves);

    RatMatrix singular{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_AS(inverse(singular), Error);
    try {
        inverse(singular);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularMatrix);
    }

    Rng rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(rng.pick(1, 5));
        IntMatrix a = random_int_matrix(rng, n, n, 9);
        if (determinant(a) == 0) continue;
        RatMatrix ar = to_rational(a);
        CHECK(inverse(inverse(ar)) == ar);
        CHECK(ar * inverse(ar) == RatMatrix::identity(n));
    }
}

TEST_CASE("rational inertia fixtures") {
    RatMatrix u{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(rational_inertia(u) == Inertia{1, 1, 0});
    RatMatrix zero1(1, 1);
    CHECK(rational_inertia(zero1) == Inertia{0, 0, 1});
    CHECK_THROWS_AS(rational_inertia(RatMatrix{{Rat(0), Rat(1)}, {Rat(2), Rat(0)}}), Error);
}

TEST_CASE("inertia sums to dimension and adds over block sums") {
    Rng rng(16);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.pick(1, 5));
        int m = static_cast<int>(rng.pick(1, 4));
        IntMatrix a = random_symmetric_even(rng, n, 9);
        IntMatrix b = random_symmetric_even(rng, m, 9);
        Inertia ia = rational_inertia(to_rational(a));
        Inertia ib = rational_inertia(to_rational(b));
        CHECK(ia.positive + ia.negative + ia.zero == n);
        Inertia both = rational_inertia(to_rational(IntMatrix::block_diag(a, b)));
        CHECK(both.positive == ia.positive + ib.positive);
        CHECK(both.negative == ia.negative + ib.negative);
        CHECK(both.zero == ia.zero + ib.zero);
    }
}

TEST_CASE("integer kernel is the saturated null space") {
    IntMatrix a{{1, 1, 0}, {0, 0, 2}};
    auto k = integer_kernel(a);
    REQUIRE(k.has_value());
    CHECK(k->rows() == 1);
    // kernel basis pairs to zero and is primitive
    IntMatrix prod = a * k->transpose();
    CHECK(prod.is_zero());
    std::vector<Int> factors = invariant_factors(*k);
    CHECK(factors.empty());
}
