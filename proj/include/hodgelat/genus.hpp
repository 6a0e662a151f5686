#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgelat/discriminant.hpp"
#include "hodgelat/lattice.hpp"

namespace hodgelat {

inline constexpr long kDefaultFingerprintBound = 4096;
inline constexpr int kDefaultSearchBound = 8;

struct GenusInvariants {
    int rank = 0;
    Inertia signature;
    Int disc;
    std::vector<Int> invariant_factors;
    // sorted multiset of q-values over all of A_L; absent when |A_L| exceeds
    // the fingerprint bound
    std::optional<std::vector<Rat>> fingerprint;
};

GenusInvariants genus_invariants(const Lattice& l, const Int& fingerprint_bound = Int(kDefaultFingerprintBound));

struct IsometryVerdict {
    enum class State { Isometric, NotIsometric, Unknown } state;
    std::optional<IntMatrix> witness;  // f with f^T G2 f = G1, det +-1
    std::string reason;
};

// Certified negatives come from genus mismatches. Definite pairs are decided
// exhaustively by short-vector backtracking; indefinite pairs get a bounded
// coefficient search and may come back Unknown.
IsometryVerdict lattices_isometric(const Lattice& l1, const Lattice& l2,
                                   int search_bound = kDefaultSearchBound);

struct DiscFormComparison {
    enum class State { Isomorphic, NotIsomorphic, Unknown } state;
    std::string reason;
};

// Brute force over generator images when both groups have at most `bound`
// elements; group-structure or q-multiset mismatch certifies a negative.
DiscFormComparison disc_forms_isomorphic(const DiscriminantForm& d1, const DiscriminantForm& d2,
                                         const Int& bound = Int(512));

struct EmbedVerdict {
    bool embeds = false;  // false means "criterion inconclusive", never "no"
    std::string reason;
};

// Sufficient criterion for a primitive embedding into the K3 lattice of
// signature (3,19): n+ <= 3, n- <= 19, rank <= 11.
EmbedVerdict embeds_primitively_in_k3_lattice(const Lattice& l);

}  // namespace hodgelat
