#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "hodgelat/lattice.hpp"
#include "hodgelat/numeric.hpp"
#include "hodgelat/smith.hpp"

namespace hodgelat::testing {

// deterministic rng for reproducible property tests
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(uint64_t seed) : eng(seed) {}

    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> dist(lo, hi);
        return dist(eng);
    }
};

// expansion by minors; the independent determinant oracle
inline Int cofactor_determinant(const IntMatrix& a) {
    const int n = a.rows();
    if (n == 1) return a.at(0, 0);
    Int acc(0);
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        Int term = a.at(0, j) * cofactor_determinant(minor);
        if (j % 2) acc -= term; else acc += term;
    }
    return acc;
}

inline IntMatrix random_symmetric_even(Rng& rng, int n, long bound) {
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
        g.at(i, i) = 2 * rng.pick(-bound / 2 - 1, bound / 2 + 1);
        for (int j = i + 1; j < n; ++j) {
            g.at(i, j) = rng.pick(-bound, bound);
            g.at(j, i) = g.at(i, j);
        }
    }
    return g;
}

inline Lattice random_even_lattice(Rng& rng, int n, long bound = 9) {
    for (;;) {
        IntMatrix g = random_symmetric_even(rng, n, bound);
        if (determinant(g) != 0) return make_lattice(g);
    }
}

// product of random elementary operations; exactly unimodular
inline IntMatrix random_unimodular(Rng& rng, int n, int ops = 6) {
    IntMatrix m = IntMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rng.pick(0, n - 1));
        int j = static_cast<int>(rng.pick(0, n - 1));
        switch (rng.pick(0, 2)) {
            case 0:
                if (i != j) {
                    Int c(rng.pick(-2, 2));
                    for (int col = 0; col < n; ++col) m.at(i, col) += c * m.at(j, col);
                }
                break;
            case 1:
                if (i != j)
                    for (int col = 0; col < n; ++col) std::swap(m.at(i, col), m.at(j, col));
                break;
            default:
                for (int col = 0; col < n; ++col) m.at(i, col) = -m.at(i, col);
        }
    }
    return m;
}

inline IntMatrix random_int_matrix(Rng& rng, int rows, int cols, long bound) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.pick(-bound, bound);
    return m;
}

// Brute-force enumeration of L*/L, independent of the Smith-form route: scan
// integer vectors k with G^{-1} k inside the unit box [0,1)^n; each coset of
// the dual modulo L has exactly one representative there.
struct CosetOracle {
    Int count = 0;
    std::vector<Int> orders;    // sorted multiset of element orders
    std::vector<Rat> q_values;  // sorted multiset of q-values in [0,2)
};

inline CosetOracle enumerate_dual_cosets(const Lattice& l) {
    const int n = l.rank();
    const IntMatrix& g = l.gram();
    const Int det = determinant(g);
    const Int dabs = abs(det);
    RatMatrix inv = inverse(to_rational(g));
    IntMatrix adj(n, n);  // det * G^{-1}, integral
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = inv.at(i, j) * Rat(det);
            v.canonicalize();
            internal_check(is_integer(v), "adjugate must be integral");
            adj.at(i, j) = v.get_num();
        }
    std::vector<Int> lo(n, Int(0)), hi(n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (g.at(i, j) < 0) lo[i] += g.at(i, j);
            if (g.at(i, j) > 0) hi[i] += g.at(i, j);
        }
    CosetOracle oracle;
    std::vector<Int> k = lo;
    for (;;) {
        std::vector<Int> v = hodgelat::apply(adj, k);
        bool inside = true;
        for (int i = 0; i < n && inside; ++i)
            inside = det > 0 ? (v[i] >= 0 && v[i] < det) : (v[i] > det && v[i] <= 0);
        if (inside) {
            ++oracle.count;
            Int order(1);
            for (int i = 0; i < n; ++i)
                if (v[i] != 0) order = lcm(order, dabs / gcd(dabs, v[i]));
            oracle.orders.push_back(order);
            Int quad(0);
            for (int i = 0; i < n; ++i) quad += k[i] * v[i];  // k^T adj k = det * q
            oracle.q_values.push_back(mod_into(make_rat(quad, det), Int(2)));
        }
        int pos = 0;
        while (pos < n) {
            if (++k[pos] <= hi[pos]) break;
            k[pos] = lo[pos];
            ++pos;
        }
        if (pos == n) break;
    }
    std::sort(oracle.orders.begin(), oracle.orders.end());
    std::sort(oracle.q_values.begin(), oracle.q_values.end());
    return oracle;
}

// Overlattice of S + T generated by one rational glue vector (coordinates in
// the block basis of S + T). Returns the abstract lattice H together with the
// bases of S and T inside it.
struct GluedOverlattice {
    Lattice h;
    IntMatrix s_basis;
    IntMatrix t_basis;
};

inline GluedOverlattice glue_overlattice(const Lattice& s, const Lattice& t,
                                         const std::vector<Rat>& glue) {
    const int n = s.rank() + t.rank();
    internal_check(static_cast<int>(glue.size()) == n, "glue vector length");
    IntMatrix gram_m = IntMatrix::block_diag(s.gram(), t.gram());

    Int c(1);
    for (const Rat& v : glue) c = lcm(c, v.get_den());
    IntMatrix gens(n + 1, n);
    for (int i = 0; i < n; ++i) gens.at(i, i) = c;
    for (int j = 0; j < n; ++j) {
        Rat scaled = glue[j] * Rat(c);
        scaled.canonicalize();
        internal_check(is_integer(scaled), "scaled glue must be integral");
        gens.at(n, j) = scaled.get_num();
    }
    // integral basis of the row space of `gens`, then divide the scale back out
    SmithDecomposition snf = smith_normal_form(gens);
    IntMatrix rinv = *to_integral(inverse(to_rational(snf.right)));
    RatMatrix basis_h(n, n);
    for (int i = 0; i < n; ++i) {
        internal_check(snf.diagonal[i] != 0, "overlattice basis must have full rank");
        for (int j = 0; j < n; ++j)
            basis_h.at(i, j) = make_rat(snf.diagonal[i] * rinv.at(i, j), c);
    }
    RatMatrix gram_h = basis_h * to_rational(gram_m) * basis_h.transpose();
    auto gram_int = to_integral(gram_h);
    internal_check(gram_int.has_value(), "glued overlattice must be integral");
    Lattice h = make_lattice(*gram_int);

    RatMatrix binv = inverse(basis_h);
    auto embed = [&](int row0, int count) {
        IntMatrix out(count, n);
        for (int r = 0; r < count; ++r)
            for (int jc = 0; jc < n; ++jc) {
                const Rat& v = binv.at(row0 + r, jc);
                internal_check(is_integer(v), "block basis must embed integrally");
                out.at(r, jc) = v.get_num();
            }
        return out;
    };
    return {h, embed(0, s.rank()), embed(s.rank(), t.rank())};
}

}  // namespace hodgelat::testing
