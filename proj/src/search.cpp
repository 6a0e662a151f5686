#include "hodgelat/search.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hodgelat/error.hpp"
#include "hodgelat/linalg.hpp"

namespace hodgelat {

namespace {

// v^T * a * v for an integer vector
Int norm_of(const IntMatrix& a, const std::vector<Int>& v) {
    Int acc(0);
    const int n = a.rows();
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < n; ++j) acc += v[i] * a.at(i, j) * v[j];
    }
    return acc;
}

Int pair_of(const IntMatrix& a, const std::vector<Int>& v, const std::vector<Int>& w) {
    Int acc(0);
    const int n = a.rows();
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < n; ++j) acc += v[i] * a.at(i, j) * w[j];
    }
    return acc;
}

// entry order 0, 1, -1, 2, -2, ...
Int entry_at(int index) {
    if (index == 0) return Int(0);
    int k = (index + 1) / 2;
    return (index % 2) ? Int(k) : Int(-k);
}

void enumerate_bounded(int n, int bound, const std::function<void(const std::vector<Int>&)>& sink) {
    std::vector<Int> v(n, Int(0));
    std::vector<int> idx(n, 0);
    const int top = 2 * bound + 1;
    for (;;) {
        sink(v);
        int pos = n - 1;
        while (pos >= 0) {
            if (++idx[pos] < top) {
                v[pos] = entry_at(idx[pos]);
                break;
            }
            idx[pos] = 0;
            v[pos] = Int(0);
            --pos;
        }
        if (pos < 0) return;
    }
}

bool commutes(const IntMatrix& h, const RatMatrix& g) {
    RatMatrix hr = to_rational(h);
    return hr * g == g * hr;
}

std::optional<IntMatrix> assemble_search(const IntMatrix& a, const IntMatrix& b,
                                         const std::vector<std::vector<std::vector<Int>>>& candidates,
                                         const std::optional<RatMatrix>& intertwine) {
    const int n = a.rows();
    std::vector<std::vector<Int>> chosen(n);
    std::vector<int> pick(n, -1);

    int col = 0;
    while (col >= 0) {
        if (col == n) {
            IntMatrix h(n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) h.at(i, j) = chosen[j][i];
            Int dh = determinant(h);
            bool ok = (dh == 1 || dh == -1);
            if (ok && intertwine) ok = commutes(h, *intertwine);
            if (ok) return h;
            --col;
            continue;
        }
        bool advanced = false;
        for (int next = pick[col] + 1; next < static_cast<int>(candidates[col].size()); ++next) {
            const auto& cand = candidates[col][next];
            bool fits = true;
            for (int prev = 0; prev < col && fits; ++prev)
                fits = (pair_of(a, chosen[prev], cand) == b.at(prev, col));
            if (fits) {
                pick[col] = next;
                chosen[col] = cand;
                advanced = true;
                break;
            }
        }
        if (advanced) {
            ++col;
            if (col < n) pick[col] = -1;
        } else {
            pick[col] = -1;
            --col;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<IntMatrix> bounded_congruence_search(const IntMatrix& a, const IntMatrix& b,
                                                   int bound,
                                                   const std::optional<RatMatrix>& intertwine) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        fail(ErrorCode::DimensionMismatch, "congruence search shape");
    const int n = a.rows();
    // candidate columns grouped by required norm b(j,j)
    std::map<Int, std::vector<std::vector<Int>>> by_norm;
    for (int j = 0; j < n; ++j) by_norm.emplace(b.at(j, j), std::vector<std::vector<Int>>{});
    enumerate_bounded(n, bound, [&](const std::vector<Int>& v) {
        Int t = norm_of(a, v);
        auto it = by_norm.find(t);
        if (it != by_norm.end()) it->second.push_back(v);
    });
    std::vector<std::vector<std::vector<Int>>> candidates(n);
    for (int j = 0; j < n; ++j) candidates[j] = by_norm.at(b.at(j, j));
    return assemble_search(a, b, candidates, intertwine);
}

std::vector<std::vector<Int>> vectors_of_norm(const IntMatrix& g, const Int& t) {
    const int n = g.rows();
    if (t < 0) return {};
    // rational decomposition v^T g v = sum_i d_i (v_i + sum_{j>i} u_ij v_j)^2
    RatMatrix w = to_rational(g);
    std::vector<Rat> d(n);
    RatMatrix u = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        d[i] = w.at(i, i);
        internal_check(sign(d[i]) > 0, "definite enumeration needs a positive-definite form");
        for (int j = i + 1; j < n; ++j) u.at(i, j) = w.at(i, j) / d[i];
        for (int r = i + 1; r < n; ++r)
            for (int c = i + 1; c < n; ++c) w.at(r, c) -= w.at(r, i) * w.at(i, c) / d[i];
    }

    std::vector<std::vector<Int>> out;
    std::vector<Int> v(n, Int(0));
    // choose v from the last coordinate down; exact rational interval bounds
    std::function<void(int, const Rat&)> descend = [&](int i, const Rat& rem) {
        if (i < 0) {
            if (rem == 0) out.push_back(v);
            return;
        }
        Rat shift(0);
        for (int j = i + 1; j < n; ++j) shift += u.at(i, j) * Rat(v[j]);
        Rat r = rem / d[i];
        if (sign(r) < 0) return;
        Int s = isqrt_rat_floor(r);
        auto sq_ok = [&](const Int& k) {
            Rat term = Rat(k) + shift;
            return term * term <= r;
        };
        Int hi = rat_floor(Rat(s) - shift);
        if (sq_ok(hi + 1)) ++hi;
        Int lo = rat_ceil(Rat(-s) - shift);
        if (sq_ok(lo - 1)) --lo;
        for (Int k = lo; k <= hi; ++k) {
            if (!sq_ok(k)) continue;
            v[i] = k;
            Rat term = Rat(k) + shift;
            descend(i - 1, rem - d[i] * term * term);
            v[i] = 0;
        }
    };
    descend(n - 1, Rat(t));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<IntMatrix> definite_congruence_search(const IntMatrix& a, const IntMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        fail(ErrorCode::DimensionMismatch, "congruence search shape");
    const int n = a.rows();
    std::map<Int, std::vector<std::vector<Int>>> by_norm;
    std::vector<std::vector<std::vector<Int>>> candidates(n);
    for (int j = 0; j < n; ++j) {
        const Int& t = b.at(j, j);
        auto it = by_norm.find(t);
        if (it == by_norm.end()) it = by_norm.emplace(t, vectors_of_norm(a, t)).first;
        candidates[j] = it->second;
    }
    return assemble_search(a, b, candidates, std::nullopt);
}

}  // namespace hodgelat
