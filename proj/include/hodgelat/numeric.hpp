#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace hodgelat {

// All arithmetic in this library is exact: arbitrary-precision integers and
// canonical rationals (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor(num/den) with sign handled the mathematical way
inline Int floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// canonical representative of r mod m*Z in [0, m)
inline Rat mod_into(const Rat& r, const Int& modulus) {
    Rat m(modulus);
    Rat out = r - m * Rat(rat_floor(r / m));
    out.canonicalize();
    return out;
}

inline bool divides(const Int& d, const Int& v) {
    if (d == 0) return v == 0;
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

// largest k >= 0 with k*k <= r; r must be >= 0
inline Int isqrt_rat_floor(const Rat& r) {
    Int k;
    Int fl = rat_floor(r);
    mpz_sqrt(k.get_mpz_t(), fl.get_mpz_t());
    while (Rat((k + 1) * (k + 1)) <= r) ++k;
    while (Rat(k * k) > r) --k;
    return k;
}

// exact n-th root of v >= 0, if one exists
inline std::optional<Int> nth_root_exact(const Int& v, unsigned long n) {
    Int root;
    int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
    if (exact) return root;
    return std::nullopt;
}

inline std::string to_string(const Int& v) { return v.get_str(10); }

inline std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str(10);
    return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

// JSON numbers are exact only up to 2^53
inline bool fits_double_exact(const Int& v) {
    static const Int bound = (Int(1) << 53) - 1;
    return abs(v) <= bound;
}

}  // namespace hodgelat
