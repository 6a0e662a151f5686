#include "hodgelat/linalg.hpp"

#include "hodgelat/smith.hpp"

namespace hodgelat {

Int determinant(const IntMatrix& a) {
    if (!a.square()) fail(ErrorCode::DimensionMismatch, "determinant needs a square matrix");
    int n = a.rows();
    IntMatrix w = a;
    Int prev(1);
    int swaps = 0;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            ++swaps;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                // Bareiss: division by the previous pivot is exact
                w.at(i, j) = v / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    Int det = w.at(n - 1, n - 1);
    return (swaps % 2) ? Int(-det) : det;
}

Rat determinant(const RatMatrix& a) {
    if (!a.square()) fail(ErrorCode::DimensionMismatch, "determinant needs a square matrix");
    int n = a.rows();
    RatMatrix w = a;
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            det = -det;
        }
        det *= w.at(k, k);
        Rat inv_piv = Rat(1) / w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k) == 0) continue;
            Rat factor = w.at(i, k) * inv_piv;
            for (int j = k; j < n; ++j) w.at(i, j) -= factor * w.at(k, j);
        }
    }
    det.canonicalize();
    return det;
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.square()) fail(ErrorCode::DimensionMismatch, "inverse needs a square matrix");
    int n = a.rows();
    RatMatrix w = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) fail(ErrorCode::SingularMatrix, "singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Rat inv_piv = Rat(1) / w.at(k, k);
        for (int j = 0; j < n; ++j) {
            w.at(k, j) *= inv_piv;
            inv.at(k, j) *= inv_piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Rat factor = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= factor * w.at(k, j);
                inv.at(i, j) -= factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        fail(ErrorCode::DimensionMismatch, "solve shape");
    int m = a.rows(), n = a.cols();
    RatMatrix w(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n) = b[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (w.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j <= n; ++j) std::swap(w.at(row, j), w.at(piv, j));
        Rat inv_piv = Rat(1) / w.at(row, col);
        for (int j = col; j <= n; ++j) w.at(row, j) *= inv_piv;
        for (int i = 0; i < m; ++i) {
            if (i == row || w.at(i, col) == 0) continue;
            Rat factor = w.at(i, col);
            for (int j = col; j <= n; ++j) w.at(i, j) -= factor * w.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (w.at(i, n) != 0) return std::nullopt;
    std::vector<Rat> x(n, Rat(0));
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) x[pivot_col[r]] = w.at(r, n);
    return x;
}

Inertia rational_inertia(const RatMatrix& g) {
    if (!g.square()) fail(ErrorCode::AsymmetricMatrix, "inertia needs a square matrix");
    if (!g.is_symmetric()) fail(ErrorCode::AsymmetricMatrix, "inertia needs a symmetric matrix");
    int n = g.rows();
    RatMatrix w = g;
    std::vector<bool> done(n, false);
    Inertia out;
    for (int step = 0; step < n; ++step) {
        // nonzero diagonal pivot if one exists
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && w.at(i, i) != 0) { p = i; break; }
        if (p < 0) {
            // all active diagonal zero: a nonzero off-diagonal pair (i,j)
            // gives a hyperbolic block; the congruence e_i -> e_i + e_j
            // produces a nonzero diagonal entry 2*w(i,j)
            int bi = -1, bj = -1;
            for (int i = 0; i < n && bi < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (w.at(i, j) != 0) { bi = i; bj = j; break; }
                }
            }
            if (bi < 0) {
                for (int i = 0; i < n; ++i)
                    if (!done[i]) ++out.zero;
                return out;
            }
            for (int j = 0; j < n; ++j)
                if (!done[j]) w.at(bi, j) += w.at(bj, j);
            for (int i = 0; i < n; ++i)
                if (!done[i]) w.at(i, bi) += w.at(i, bj);
            p = bi;
        }
        const Rat pivot = w.at(p, p);
        if (sign(pivot) > 0) ++out.positive; else ++out.negative;
        done[p] = true;
        // Schur complement on the active block
        for (int i = 0; i < n; ++i) {
            if (done[i] || w.at(i, p) == 0) continue;
            Rat factor = w.at(i, p) / pivot;
            for (int j = 0; j < n; ++j) {
                if (done[j]) continue;
                w.at(i, j) -= factor * w.at(p, j);
            }
        }
        for (int i = 0; i < n; ++i) {
            if (!done[i]) { w.at(i, p) = Rat(0); w.at(p, i) = Rat(0); }
        }
    }
    return out;
}

std::optional<IntMatrix> integer_kernel(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    int n = a.cols();
    int r = 0;
    for (const Int& d : snf.diagonal)
        if (d != 0) ++r;
    if (r == n) return std::nullopt;
    // columns r..n-1 of `right` span the kernel; emit them as rows
    IntMatrix out(n - r, n);
    for (int k = r; k < n; ++k)
        for (int i = 0; i < n; ++i) out.at(k - r, i) = snf.right.at(i, k);
    return out;
}

int rank(const RatMatrix& a) {
    int m = a.rows(), n = a.cols();
    RatMatrix w = a;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (w.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < n; ++j) std::swap(w.at(row, j), w.at(piv, j));
        Rat inv_piv = Rat(1) / w.at(row, col);
        for (int i = row + 1; i < m; ++i) {
            if (w.at(i, col) == 0) continue;
            Rat factor = w.at(i, col) * inv_piv;
            for (int j = col; j < n; ++j) w.at(i, j) -= factor * w.at(row, j);
        }
        ++row;
    }
    return row;
}

int rank(const IntMatrix& a) { return rank(to_rational(a)); }

}  // namespace hodgelat
