#include "hodgelat/polynomial.hpp"

#include <algorithm>

#include "hodgelat/error.hpp"
#include "hodgelat/linalg.hpp"

namespace hodgelat {

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rat eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    acc.canonicalize();
    return acc;
}

RatMatrix eval_at_matrix(const Poly& p, const RatMatrix& m) {
    if (!m.square()) fail(ErrorCode::DimensionMismatch, "polynomial of a non-square matrix");
    RatMatrix acc = RatMatrix::zero(m.rows(), m.cols());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i) acc.at(i, i) += *it;
    }
    return acc;
}

Poly minimal_polynomial(const RatMatrix& m) {
    if (!m.square()) fail(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
    const int n = m.rows();
    const int dim = n * n;
    std::vector<std::vector<Rat>> powers;  // vec(m^k)
    RatMatrix cur = RatMatrix::identity(n);
    auto flatten = [&](const RatMatrix& a) {
        std::vector<Rat> v(dim);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
        return v;
    };
    powers.push_back(flatten(cur));
    for (int k = 1; k <= n; ++k) {
        cur = cur * m;
        std::vector<Rat> target = flatten(cur);
        RatMatrix sys(dim, k);
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < dim; ++r) sys.at(r, c) = powers[c][r];
        if (auto coeffs = solve(sys, target)) {
            Poly p(k + 1, Rat(0));
            for (int c = 0; c < k; ++c) p[c] = -(*coeffs)[c];
            p[k] = Rat(1);
            return p;
        }
        powers.push_back(std::move(target));
    }
    fail(ErrorCode::InternalAssertion, "matrix satisfies no monic relation up to its dimension");
}

namespace {

std::vector<Int> positive_divisors(const Int& v) {
    std::vector<Int> out;
    Int a = abs(v);
    for (Int d(1); d * d <= a; ++d) {
        if (!divides(d, a)) continue;
        out.push_back(d);
        Int q = a / d;
        if (q != d) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int eval_int(const std::vector<Int>& p, const Int& x) {
    Int acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// exact division test for integer polynomials (monic divisor)
bool divides_poly(const std::vector<Int>& dividend, const std::vector<Int>& divisor) {
    std::vector<Int> rem = dividend;
    int dd = static_cast<int>(divisor.size()) - 1;
    while (static_cast<int>(rem.size()) - 1 >= dd) {
        Int lead = rem.back();
        int shift = static_cast<int>(rem.size()) - 1 - dd;
        for (int i = 0; i <= dd; ++i) rem[shift + i] -= lead * divisor[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) return true;
        if (static_cast<int>(rem.size()) - 1 < dd) break;
    }
    return rem.empty();
}

// Kronecker: does the monic integer polynomial p have a monic factor of
// degree d? Interpolates candidate factors through divisor tuples of the
// values p(0), p(1), p(-1), ...
bool has_monic_factor(const std::vector<Int>& p, int d) {
    std::vector<Int> points;
    for (int k = 0; static_cast<int>(points.size()) < d + 1; ++k) {
        if (k == 0) points.push_back(Int(0));
        else {
            points.push_back(Int(k));
            if (static_cast<int>(points.size()) < d + 1) points.push_back(Int(-k));
        }
    }
    std::vector<std::vector<Int>> choices(d + 1);
    for (int i = 0; i <= d; ++i) {
        Int v = eval_int(p, points[i]);
        // integer roots were excluded before this runs
        for (const Int& div : positive_divisors(v)) {
            choices[i].push_back(div);
            choices[i].push_back(-div);
        }
    }
    std::vector<int> idx(d + 1, 0);
    std::vector<Rat> xs(d + 1), ys(d + 1);
    for (int i = 0; i <= d; ++i) xs[i] = Rat(points[i]);
    for (;;) {
        for (int i = 0; i <= d; ++i) ys[i] = Rat(choices[i][idx[i]]);
        // Lagrange interpolation through (xs, ys)
        std::vector<Rat> acc(1, Rat(0));
        for (int i = 0; i <= d; ++i) {
            std::vector<Rat> basis(1, Rat(1));
            Rat denom(1);
            for (int j = 0; j <= d; ++j) {
                if (j == i) continue;
                std::vector<Rat> next(basis.size() + 1, Rat(0));
                for (size_t t = 0; t < basis.size(); ++t) {
                    next[t] -= basis[t] * xs[j];
                    next[t + 1] += basis[t];
                }
                basis = std::move(next);
                denom *= xs[i] - xs[j];
            }
            Rat scale = ys[i] / denom;
            if (acc.size() < basis.size()) acc.resize(basis.size(), Rat(0));
            for (size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * scale;
        }
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        if (static_cast<int>(acc.size()) == d + 1 && acc.back() == 1) {
            bool integral = true;
            std::vector<Int> cand(d + 1);
            for (int t = 0; t <= d; ++t) {
                acc[t].canonicalize();
                if (!is_integer(acc[t])) { integral = false; break; }
                cand[t] = acc[t].get_num();
            }
            if (integral && divides_poly(p, cand)) return true;
        }
        int pos = 0;
        while (pos <= d) {
            if (++idx[pos] < static_cast<int>(choices[pos].size())) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos > d) return false;
    }
}

}  // namespace

bool irreducible_over_q(const Poly& p) {
    int n = degree(p);
    if (n < 1) return false;
    if (p.back() != 1) fail(ErrorCode::DimensionMismatch, "irreducibility test expects a monic polynomial");
    if (n == 1) return true;

    // integerize: x -> y/c turns x^n + a_{n-1} x^{n-1} + ... into a monic
    // integer polynomial y^n + a_{n-1} c y^{n-1} + a_{n-2} c^2 y^{n-2} + ...
    Int c(1);
    for (const Rat& a : p) c = lcm(c, a.get_den());
    std::vector<Int> q(n + 1);
    Int cpow(1);
    for (int i = n; i >= 0; --i) {
        Rat scaled = p[i] * Rat(cpow);
        scaled.canonicalize();
        internal_check(is_integer(scaled), "integerization failed");
        q[i] = scaled.get_num();
        cpow *= c;
    }

    if (q[0] == 0) return false;  // y divides
    for (const Int& d : positive_divisors(q[0])) {
        if (eval_int(q, d) == 0 || eval_int(q, -d) == 0) return false;
    }
    if (n <= 3) return true;
    for (int d = 2; d <= n / 2; ++d)
        if (has_monic_factor(q, d)) return false;
    return true;
}

}  // namespace hodgelat
