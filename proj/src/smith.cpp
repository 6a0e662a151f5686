#include "hodgelat/smith.hpp"

#include <algorithm>

#include "hodgelat/error.hpp"

namespace hodgelat {

namespace {

struct Worker {
    IntMatrix d;
    IntMatrix left;
    IntMatrix right;

    explicit Worker(const IntMatrix& a)
        : d(a), left(IntMatrix::identity(a.rows())), right(IntMatrix::identity(a.cols())) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < left.cols(); ++c) std::swap(left.at(i, c), left.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < right.rows(); ++r) std::swap(right.at(r, i), right.at(r, j));
    }
    void add_row(int dst, int src, const Int& c) {  // row_dst += c * row_src
        if (c == 0) return;
        for (int j = 0; j < d.cols(); ++j) d.at(dst, j) += c * d.at(src, j);
        for (int j = 0; j < left.cols(); ++j) left.at(dst, j) += c * left.at(src, j);
    }
    void add_col(int dst, int src, const Int& c) {  // col_dst += c * col_src
        if (c == 0) return;
        for (int i = 0; i < d.rows(); ++i) d.at(i, dst) += c * d.at(i, src);
        for (int i = 0; i < right.rows(); ++i) right.at(i, dst) += c * right.at(i, src);
    }
    void negate_row(int i) {
        for (int j = 0; j < d.cols(); ++j) d.at(i, j) = -d.at(i, j);
        for (int j = 0; j < left.cols(); ++j) left.at(i, j) = -left.at(i, j);
    }

    // smallest-|v| nonzero entry of the trailing submatrix, or false
    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                const Int& v = d.at(i, j);
                if (v == 0) continue;
                Int a = abs(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    Worker w(a);
    const int m = a.rows(), n = a.cols();
    const int steps = std::min(m, n);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            int pi, pj;
            if (!w.find_pivot(t, pi, pj)) goto done;  // trailing block is zero
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                Int q = floor_div(w.d.at(i, t), w.d.at(t, t));
                w.add_row(i, t, -q);
                if (w.d.at(i, t) != 0) clean = false;  // remainder is a smaller pivot
            }
            for (int j = t + 1; j < n; ++j) {
                Int q = floor_div(w.d.at(t, j), w.d.at(t, t));
                w.add_col(j, t, -q);
                if (w.d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the trailing block for d1 | d2 | ... to hold
            bool fixed = false;
            for (int i = t + 1; i < m && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j)
                    if (!divides(w.d.at(t, t), w.d.at(i, j))) {
                        w.add_row(t, i, Int(1));
                        fixed = true;
                    }
            if (fixed) continue;
            break;
        }
        if (w.d.at(t, t) < 0) w.negate_row(t);
    }
done:
    SmithDecomposition out{w.left, w.right, {}};
    out.diagonal.reserve(steps);
    for (int t = 0; t < steps; ++t) out.diagonal.push_back(w.d.at(t, t));

    // left * a * right must reproduce the diagonal exactly
    IntMatrix check = out.left * a * out.right;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Int expect = (i == j && i < steps) ? out.diagonal[i] : Int(0);
            internal_check(check.at(i, j) == expect, "smith transform identity violated");
        }
    for (size_t k = 0; k + 1 < out.diagonal.size(); ++k) {
        if (out.diagonal[k + 1] != 0)
            internal_check(out.diagonal[k] != 0 && divides(out.diagonal[k], out.diagonal[k + 1]),
                           "smith divisibility chain violated");
    }
    return out;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    std::vector<Int> out;
    for (const Int& d : snf.diagonal)
        if (d > 1) out.push_back(d);
    return out;
}

}  // namespace hodgelat
