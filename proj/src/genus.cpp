#include "hodgelat/genus.hpp"

#include <algorithm>
#include <functional>

#include "hodgelat/search.hpp"
#include "hodgelat/smith.hpp"

namespace hodgelat {

GenusInvariants genus_invariants(const Lattice& l, const Int& fingerprint_bound) {
    GenusInvariants out;
    out.rank = l.rank();
    out.signature = l.signature();
    out.disc = l.disc();
    out.invariant_factors = invariant_factors(l.gram());
    if (out.disc <= fingerprint_bound) out.fingerprint = q_multiset(discriminant_form(l));
    return out;
}

namespace {

bool definite(const Inertia& s) { return s.positive == 0 || s.negative == 0; }

}  // namespace

IsometryVerdict lattices_isometric(const Lattice& l1, const Lattice& l2, int search_bound) {
    if (l1.gram() == l2.gram())
        return {IsometryVerdict::State::Isometric, IntMatrix::identity(l1.rank()), "identical Gram"};
    if (l1.rank() != l2.rank())
        return {IsometryVerdict::State::NotIsometric, std::nullopt, "rank"};
    if (!(l1.signature() == l2.signature()))
        return {IsometryVerdict::State::NotIsometric, std::nullopt, "signature"};
    if (l1.disc() != l2.disc())
        return {IsometryVerdict::State::NotIsometric, std::nullopt, "discriminant"};
    if (invariant_factors(l1.gram()) != invariant_factors(l2.gram()))
        return {IsometryVerdict::State::NotIsometric, std::nullopt, "discriminant form"};
    static const Int kBound(kDefaultFingerprintBound);
    if (l1.disc() <= kBound) {
        if (q_multiset(discriminant_form(l1)) != q_multiset(discriminant_form(l2)))
            return {IsometryVerdict::State::NotIsometric, std::nullopt, "discriminant form"};
    }

    auto validate = [&](const IntMatrix& f) {
        IntMatrix check = f.transpose() * l2.gram() * f;
        internal_check(check == l1.gram(), "isometry witness failed re-validation");
        Int d = determinant(f);
        internal_check(d == 1 || d == -1, "isometry witness must be unimodular");
    };

    if (definite(l1.signature())) {
        // negate negative-definite forms; the search is exhaustive
        IntMatrix a = l2.gram(), b = l1.gram();
        if (l1.signature().negative > 0) {
            a = a.scaled(Int(-1));
            b = b.scaled(Int(-1));
        }
        auto witness = definite_congruence_search(a, b);
        if (!witness)
            return {IsometryVerdict::State::NotIsometric, std::nullopt, "definite search exhausted"};
        validate(*witness);
        return {IsometryVerdict::State::Isometric, witness, "definite search"};
    }

    auto witness = bounded_congruence_search(l2.gram(), l1.gram(), search_bound, std::nullopt);
    if (witness) {
        validate(*witness);
        return {IsometryVerdict::State::Isometric, witness, "bounded search"};
    }
    return {IsometryVerdict::State::Unknown, std::nullopt, "search bound exhausted"};
}

namespace {

// order of the element with the given generator coefficients
Int element_order(const DiscriminantForm& d, const std::vector<Int>& coeffs) {
    Int ord(1);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Int g = gcd(coeffs[i], d.invariant_factors[i]);
        ord = lcm(ord, d.invariant_factors[i] / g);
    }
    return ord;
}

std::vector<std::vector<Int>> all_elements(const DiscriminantForm& d) {
    std::vector<std::vector<Int>> out;
    const size_t k = d.invariant_factors.size();
    std::vector<Int> coeffs(k, Int(0));
    for (;;) {
        out.push_back(coeffs);
        size_t pos = 0;
        while (pos < k) {
            if (++coeffs[pos] < d.invariant_factors[pos]) break;
            coeffs[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return out;
}

}  // namespace

DiscFormComparison disc_forms_isomorphic(const DiscriminantForm& d1, const DiscriminantForm& d2,
                                         const Int& bound) {
    if (d1.invariant_factors != d2.invariant_factors)
        return {DiscFormComparison::State::NotIsomorphic, "group structure"};
    if (d1.trivial()) return {DiscFormComparison::State::Isomorphic, "trivial"};
    if (d1.order() > bound) return {DiscFormComparison::State::Unknown, "order above bound"};
    if (q_multiset(d1) != q_multiset(d2))
        return {DiscFormComparison::State::NotIsomorphic, "q-value multiset"};

    const size_t k = d1.invariant_factors.size();
    std::vector<std::vector<Int>> pool = all_elements(d2);
    std::vector<std::vector<Int>> images(k);

    // map generator i to an element of equal order and q-value, preserving
    // pairwise b; accept once the assembled map is a bijection preserving q
    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == k) {
            std::vector<std::vector<Int>> source = all_elements(d1);
            std::vector<std::vector<Int>> mapped;
            mapped.reserve(source.size());
            for (const auto& s : source) {
                std::vector<Int> img(k, Int(0));
                for (size_t t = 0; t < k; ++t)
                    for (size_t c = 0; c < k; ++c) img[c] += s[t] * images[t][c];
                for (size_t c = 0; c < k; ++c) {
                    Int m = d2.invariant_factors[c];
                    img[c] = ((img[c] % m) + m) % m;
                }
                if (q_of(d1, s) != q_of(d2, img)) return false;
                mapped.push_back(std::move(img));
            }
            std::sort(mapped.begin(), mapped.end());
            mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
            return mapped.size() == source.size();
        }
        std::vector<Int> unit(k, Int(0));
        unit[i] = 1;
        for (const auto& cand : pool) {
            if (element_order(d2, cand) != d1.invariant_factors[i]) continue;
            if (q_of(d2, cand) != d1.q_values[i]) continue;
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                std::vector<Int> uj(k, Int(0));
                uj[j] = 1;
                ok = (b_of(d2, images[j], cand) == b_of(d1, uj, unit));
            }
            if (!ok) continue;
            images[i] = cand;
            if (place(i + 1)) return true;
        }
        return false;
    };
    if (place(0)) return {DiscFormComparison::State::Isomorphic, "generator images found"};
    return {DiscFormComparison::State::NotIsomorphic, "exhaustive image search"};
}

EmbedVerdict embeds_primitively_in_k3_lattice(const Lattice& l) {
    Inertia s = l.signature();
    if (s.positive > 3)
        return {false, "criterion inconclusive: positive index " + std::to_string(s.positive) + " > 3"};
    if (s.negative > 19)
        return {false, "criterion inconclusive: negative index " + std::to_string(s.negative) + " > 19"};
    if (l.rank() > 11)
        return {false, "criterion inconclusive: rank " + std::to_string(l.rank()) + " > 11"};
    return {true, "signature fits (3,19) and rank is at most half of 22"};
}

}  // namespace hodgelat
